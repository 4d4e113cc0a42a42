#include "osp/gen.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "osp/rng.hpp"

namespace osp {

const char* to_string(SetupMatrixType type) {
  switch (type) {
    case SetupMatrixType::CONSTANT: return "constant";
    case SetupMatrixType::ARBITRARY: return "arbitrary";
    case SetupMatrixType::REALISTIC: return "realistic";
    case SetupMatrixType::SYMMETRIC: return "symmetric";
  }
  return "?";
}

std::optional<SetupMatrixType> setup_matrix_type_from(const std::string& name) {
  if (name == "constant") return SetupMatrixType::CONSTANT;
  if (name == "arbitrary") return SetupMatrixType::ARBITRARY;
  if (name == "realistic") return SetupMatrixType::REALISTIC;
  if (name == "symmetric") return SetupMatrixType::SYMMETRIC;
  return std::nullopt;
}

namespace {

enum Stream : uint32_t { kJobs = 0, kMatrices = 1, kMachines = 2 };

int64_t ceil_positive(double x) { return int64_t(std::ceil(x)); }

void check(bool ok, const char* message) {
  if (!ok) throw BadParams(message);
}

AttributeMatrix draw_matrix(int a, int64_t max_proc, SetupMatrixType type,
                            StreamRng& rng) {
  int64_t quarter = (max_proc + 3) / 4;  // ceil(max_T / 4)
  int64_t eighth = (max_proc + 7) / 8;   // ceil(max_T / 8)
  AttributeMatrix mat(a, 0);
  switch (type) {
    case SetupMatrixType::CONSTANT: {
      int64_t v = rng.uniform_int(0, quarter);
      for (auto& e : mat.entries) e = v;
      break;
    }
    case SetupMatrixType::ARBITRARY:
      for (auto& e : mat.entries) e = rng.uniform_int(1, quarter);
      break;
    case SetupMatrixType::REALISTIC:
      for (int r = 1; r <= a; ++r)
        for (int c = 1; c <= a; ++c)
          mat.at(r, c) = r == c ? rng.uniform_int(0, eighth)
                                : rng.uniform_int(eighth + 1, quarter);
      break;
    case SetupMatrixType::SYMMETRIC:
      for (int r = 1; r <= a; ++r)
        for (int c = r; c <= a; ++c)
          mat.at(r, c) = mat.at(c, r) = rng.uniform_int(0, quarter);
      break;
  }
  return mat;
}

std::string metadata_json(const GeneratorParams& p) {
  nlohmann::ordered_json gen;
  gen["n"] = p.job_count;
  gen["max_T"] = p.max_proc;
  gen["max_time"] = p.max_time;
  gen["rho"] = p.release_spread;
  gen["phi"] = p.due_factor;
  gen["sigma"] = p.extra_machine_prob;
  gen["max_job_size"] = p.max_job_size;
  gen["a"] = p.attribute_count;
  gen["setup_time_type"] = to_string(p.setup_time_type);
  gen["setup_cost_type"] = to_string(p.setup_cost_type);
  gen["k"] = p.machine_count;
  gen["min_C"] = p.min_capacity;
  gen["max_C"] = p.max_capacity;
  gen["tau"] = p.min_available_fraction;
  gen["max_I"] = p.max_intervals;
  gen["seed"] = p.seed;
  gen["prng"] = StreamRng::algorithm();
  nlohmann::ordered_json meta;
  meta["generator"] = std::move(gen);
  return meta.dump();
}

}  // namespace

Instance generate(const GeneratorParams& p) {
  check(p.job_count >= 1, "job count must be >= 1");
  check(p.max_proc >= 1, "max processing time must be >= 1");
  check(p.release_spread >= 0.0 && p.release_spread <= 1.0,
        "rho must lie in [0,1]");
  check(p.due_factor >= 1.0, "phi must be >= 1");
  check(p.extra_machine_prob >= 0.0 && p.extra_machine_prob <= 1.0,
        "sigma must lie in [0,1]");
  check(p.max_job_size >= 1, "max job size must be >= 1");
  check(p.attribute_count >= 1, "attribute count must be >= 1");
  check(p.machine_count >= 1, "machine count must be >= 1");
  check(p.min_capacity >= p.max_job_size,
        "min capacity must cover the max job size");
  check(p.max_capacity >= p.min_capacity, "max capacity below min capacity");
  check(p.min_available_fraction > 0.0 && p.min_available_fraction <= 1.0,
        "tau must lie in (0,1]");
  check(p.max_intervals >= 1, "max interval count must be >= 1");

  const int n = int(p.job_count);
  const int k = p.machine_count;
  const int a = p.attribute_count;

  Instance inst;
  inst.attribute_count = a;
  inst.metadata = metadata_json(p);

  StreamRng jobs_rng(p.seed, kJobs);
  StreamRng matrix_rng(p.seed, kMatrices);
  StreamRng machine_rng(p.seed, kMachines);

  // jobs: all mints first (the release spread depends on their sum)
  std::vector<int64_t> mints(static_cast<size_t>(n));
  int64_t total_min_proc = 0;
  for (auto& m : mints) {
    m = jobs_rng.uniform_int(1, p.max_proc);
    total_min_proc += m;
  }

  int64_t max_release = 0;
  int64_t max_due = 0;
  int64_t release_cap = ceil_positive(p.release_spread * double(total_min_proc));
  for (int j = 1; j <= n; ++j) {
    Job job;
    job.id = j;
    job.min_proc = mints[size_t(j - 1)];
    job.max_proc =
        p.max_time ? jobs_rng.uniform_int(job.min_proc, p.max_proc) : p.max_proc;
    job.release = jobs_rng.uniform_int(0, release_cap);
    double u = jobs_rng.uniform_real(1.0, p.due_factor);
    job.due = job.release + int64_t(std::floor(u * double(job.min_proc)));
    int first = int(jobs_rng.uniform_int(1, k));
    job.eligible.push_back(first);
    for (int m = 1; m <= k; ++m) {
      if (m == first) continue;
      if (jobs_rng.bernoulli(p.extra_machine_prob)) job.eligible.push_back(m);
    }
    std::sort(job.eligible.begin(), job.eligible.end());
    job.size = jobs_rng.uniform_int(1, p.max_job_size);
    job.attribute = int(jobs_rng.uniform_int(1, a));
    max_release = std::max(max_release, job.release);
    max_due = std::max(max_due, *job.due);
    inst.jobs.push_back(std::move(job));
  }

  inst.setup_times = draw_matrix(a, p.max_proc, p.setup_time_type, matrix_rng);
  inst.setup_costs = draw_matrix(a, p.max_proc, p.setup_cost_type, matrix_rng);
  const int64_t max_setup = inst.setup_times.max_entry();

  for (int m = 1; m <= k; ++m) {
    Machine mach;
    mach.id = m;
    mach.capacity = machine_rng.uniform_int(p.min_capacity, p.max_capacity);
    mach.initial_state = int(machine_rng.uniform_int(1, a));
    inst.machines.push_back(std::move(mach));
  }

  const double tau = p.min_available_fraction;
  int64_t horizon = max_release + ceil_positive(double(total_min_proc +
                                                       int64_t(n) * max_setup) /
                                                tau);
  horizon = std::max(horizon, max_due);
  inst.horizon = horizon;

  int64_t min_proc_overall = *std::min_element(mints.begin(), mints.end());
  const int64_t gap = min_proc_overall + max_setup;  // d

  for (auto& mach : inst.machines) {
    // l >= n*d >= max_I*d on the benchmark grid; clamp for tiny n
    int64_t intervals =
        machine_rng.uniform_int(1, std::min<int64_t>(p.max_intervals,
                                                     horizon / gap));
    int64_t first_cap = std::min(int64_t(std::floor(double(horizon) *
                                                    (1.0 - tau))),
                                 horizon - intervals * gap);
    int64_t first = machine_rng.uniform_int(0, first_cap);

    std::vector<int64_t> starts{first};
    auto rest = spread_starts(int(intervals) - 1, first + gap, horizon - gap,
                              gap, machine_rng);
    starts.insert(starts.end(), rest.begin(), rest.end());

    for (size_t i = 0; i < starts.size(); ++i) {
      int64_t next = i + 1 < starts.size() ? starts[i + 1] : horizon;
      double u = machine_rng.uniform_real(tau, 1.0);
      int64_t len = std::max(gap, ceil_positive(u * double(next - starts[i])));
      mach.availability.push_back({starts[i], starts[i] + len});
    }
  }
  return inst;
}

}  // namespace osp
