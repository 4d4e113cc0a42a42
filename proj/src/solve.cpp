#include "osp/solve.hpp"

#include "osp/bounds.hpp"

#include <cstdlib>

namespace osp {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::OPTIMAL: return "OPTIMAL";
    case SolveStatus::FEASIBLE: return "FEASIBLE";
    case SolveStatus::INFEASIBLE: return "INFEASIBLE";
    case SolveStatus::TIMEOUT: return "TIMEOUT";
  }
  return "?";
}

namespace {

struct GroupTiming {
  int attr;
  int64_t proc;
  int64_t release_max;
};

GroupTiming group_timing(const Instance& instance, const std::vector<int>& jobs) {
  GroupTiming g{instance.job(jobs.front()).attribute, 0, 0};
  for (int j : jobs) {
    const Job& job = instance.job(j);
    g.proc = std::max(g.proc, job.min_proc);
    g.release_max = std::max(g.release_max, job.release);
  }
  return g;
}

// Smallest start >= floor such that setup and batch fit one interval.
std::optional<int64_t> earliest_start(const Machine& mach, int64_t floor,
                                      int64_t setup, int64_t proc,
                                      int64_t release) {
  for (const Interval& iv : mach.availability) {
    int64_t s = std::max({floor, release, iv.start + setup});
    if (s + proc <= iv.end) return s;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Schedule> try_schedule_fixed(const Instance& instance,
                                           const Batching& batching) {
  Schedule out;
  for (int m = 1; m <= instance.num_machines(); ++m) {
    const Machine& mach = instance.machine(m);
    int prev_attr = mach.initial_state;
    int64_t prev_end = 0;
    for (const auto& jobs : batching[size_t(m - 1)]) {
      GroupTiming g = group_timing(instance, jobs);
      int64_t setup = instance.setup_times.at(prev_attr, g.attr);
      auto s = earliest_start(mach, prev_end + setup, setup, g.proc,
                              g.release_max);
      if (!s) return std::nullopt;
      out.batches.push_back({m, *s, g.proc, jobs});
      prev_attr = g.attr;
      prev_end = *s + g.proc;
    }
  }
  return out;
}

Schedule schedule_fixed(const Instance& instance, const Batching& batching) {
  auto s = try_schedule_fixed(instance, batching);
  if (!s) throw DoesNotFit("some batch fits no availability interval");
  return *s;
}

// ---------------------------------------------------------------------------
// brute force oracle

namespace {

struct OracleContext {
  const Instance& instance;
  const ObjectiveWeights& weights;
  std::vector<std::vector<int>> groups;
  std::vector<int> group_machine;
  int64_t best_scaled = INT64_MAX;
  size_t best_batches = SIZE_MAX;
  std::optional<Schedule> best;
  int64_t nodes = 0;

  bool group_feasible(const std::vector<int>& jobs, int extra) const {
    const Job& added = instance.job(extra);
    int64_t size = added.size;
    int64_t pmin = added.min_proc;
    int64_t pmax = added.max_proc;
    for (int j : jobs) {
      const Job& job = instance.job(j);
      if (job.attribute != added.attribute) return false;
      size += job.size;
      pmin = std::max(pmin, job.min_proc);
      pmax = std::min(pmax, job.max_proc);
    }
    if (pmin > pmax) return false;
    for (int m : added.eligible) {
      if (instance.machine(m).capacity < size) continue;
      bool ok = true;
      for (int j : jobs) {
        const auto& e = instance.job(j).eligible;
        if (std::find(e.begin(), e.end(), m) == e.end()) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }

  std::vector<int> group_candidates(const std::vector<int>& jobs) const {
    int64_t size = 0;
    for (int j : jobs) size += instance.job(j).size;
    std::vector<int> out;
    for (int m : instance.job(jobs.front()).eligible) {
      if (instance.machine(m).capacity < size) continue;
      bool ok = true;
      for (int j : jobs) {
        const auto& e = instance.job(j).eligible;
        if (std::find(e.begin(), e.end(), m) == e.end()) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(m);
    }
    return out;
  }

  void evaluate(const Batching& batching) {
    ++nodes;
    auto schedule = try_schedule_fixed(instance, batching);
    if (!schedule) return;
    auto rep = objective(instance, *schedule, weights);
    size_t count = schedule->batches.size();
    if (rep.obj_scaled < best_scaled ||
        (rep.obj_scaled == best_scaled && count < best_batches)) {
      best_scaled = rep.obj_scaled;
      best_batches = count;
      best = std::move(*schedule);
    }
  }

  void enumerate_orders(Batching& batching,
                        std::vector<std::vector<int>>& per_machine, size_t m) {
    if (m == per_machine.size()) {
      evaluate(batching);
      return;
    }
    auto& mine = per_machine[m];
    std::sort(mine.begin(), mine.end());
    do {
      batching[m].clear();
      for (int g : mine) batching[m].push_back(groups[size_t(g)]);
      enumerate_orders(batching, per_machine, m + 1);
    } while (std::next_permutation(mine.begin(), mine.end()));
  }

  void assign_machines(size_t g) {
    if (g == groups.size()) {
      std::vector<std::vector<int>> per_machine(
          size_t(instance.num_machines()));
      for (size_t i = 0; i < groups.size(); ++i)
        per_machine[size_t(group_machine[i] - 1)].push_back(int(i));
      Batching batching(size_t(instance.num_machines()));
      enumerate_orders(batching, per_machine, 0);
      return;
    }
    for (int m : group_candidates(groups[g])) {
      group_machine[g] = m;
      assign_machines(g + 1);
    }
  }

  void partition(int j) {
    if (j > instance.num_jobs()) {
      group_machine.assign(groups.size(), 0);
      assign_machines(0);
      return;
    }
    size_t existing = groups.size();  // recursion grows the vector
    for (size_t g = 0; g < existing; ++g) {
      if (!group_feasible(groups[g], j)) continue;
      groups[g].push_back(j);
      partition(j + 1);
      groups[g].pop_back();
    }
    groups.push_back({j});
    partition(j + 1);
    groups.pop_back();
  }
};

}  // namespace

SolveResult brute_force(const Instance& instance,
                        const ObjectiveWeights& weights) {
  if (instance.num_jobs() > 10)
    throw TooLarge("brute force is guarded at n <= 10, got " +
                   std::to_string(instance.num_jobs()));
  auto started = std::chrono::steady_clock::now();
  OracleContext ctx{instance, weights};
  ctx.partition(1);

  SolveResult res;
  res.nodes = ctx.nodes;
  res.elapsed = std::chrono::steady_clock::now() - started;
  if (!ctx.best) {
    res.status = SolveStatus::INFEASIBLE;
    return res;
  }
  res.schedule = *ctx.best;
  res.obj = objective(instance, res.schedule, weights);
  res.status = SolveStatus::OPTIMAL;
  res.lower_bound = res.obj.obj_real;
  return res;
}

// ---------------------------------------------------------------------------
// branch and bound

namespace {

struct SearchBatch {
  int machine;
  int attr;
  int64_t size_sum;
  int64_t proc;      // max member mint, lower bound on the final P
  int64_t maxt_min;  // min member maxt
  int64_t release_max;
  std::vector<int> members;
};

struct Searcher {
  const Instance& instance;
  const BnbOptions& options;
  std::chrono::steady_clock::time_point started;

  int64_t coeff_proc, coeff_setup, coeff_tardy;
  int64_t scale_denominator;  // C * n * (w_p + w_sc + w_t)

  std::vector<SearchBatch> batches;
  std::vector<std::vector<int>> seq;  // per machine, indices into batches
  std::vector<char> alone_tardy;      // per job, tardy in every schedule
  std::vector<int64_t> unassigned_attr_count;  // per attribute

  int64_t best_scaled = INT64_MAX;
  std::optional<Schedule> best;
  int64_t nodes = 0;
  bool aborted = false;
  int64_t aborted_lb = INT64_MAX;  // min bound among abandoned subtrees

  explicit Searcher(const Instance& inst, const BnbOptions& opts)
      : instance(inst), options(opts) {
    started = std::chrono::steady_clock::now();
    ObjectiveWeights w = options.weights;
    int64_t c = objective_scale(instance);
    int64_t sc_cap = std::max<int64_t>(instance.max_setup_cost(), 1);
    coeff_proc = w.proc * c / average_min_proc(instance);
    coeff_setup = w.setup * c / sc_cap;
    coeff_tardy = w.tardy * c;
    scale_denominator = c * int64_t(instance.num_jobs()) * w.total();

    seq.resize(size_t(instance.num_machines()));
    alone_tardy.resize(size_t(instance.num_jobs()), 0);
    unassigned_attr_count.assign(size_t(instance.attribute_count), 0);
    for (const Job& job : instance.jobs) {
      auto done = earliest_alone_completion(instance, job.id);
      if (job.due && (!done || *done > *job.due))
        alone_tardy[size_t(job.id - 1)] = 1;
      unassigned_attr_count[size_t(job.attribute - 1)] += 1;
    }
  }

  bool out_of_time() const {
    return std::chrono::steady_clock::now() - started > options.time_limit;
  }

  // Minimal setup that can precede a batch of the given attribute once
  // insertions of still-unassigned jobs are taken into account.
  int64_t relaxed_setup(int prev_attr, int attr) const {
    int64_t s = instance.setup_times.at(prev_attr, attr);
    for (int q = 1; q <= instance.attribute_count; ++q)
      if (unassigned_attr_count[size_t(q - 1)] > 0)
        s = std::min(s, instance.setup_times.at(q, attr));
    return s;
  }

  // Relaxed chain bound per machine: lower bounds on every batch end, or
  // nullopt when even the relaxation cannot fit before the horizon.
  // Counts members of batches that already provably finish late.
  std::optional<int64_t> chain_tardy_lb() const {
    int64_t tardy = 0;
    for (int m = 1; m <= instance.num_machines(); ++m) {
      const Machine& mach = instance.machine(m);
      int prev_attr = mach.initial_state;
      int64_t prev_end = 0;
      for (int bi : seq[size_t(m - 1)]) {
        const SearchBatch& b = batches[size_t(bi)];
        int64_t setup = relaxed_setup(prev_attr, b.attr);
        auto s = earliest_start(mach, prev_end + setup, setup, b.proc,
                                b.release_max);
        if (!s) return std::nullopt;
        int64_t end = *s + b.proc;
        for (int j : b.members) {
          const Job& job = instance.job(j);
          if (job.due && end > *job.due && !alone_tardy[size_t(j - 1)])
            ++tardy;
        }
        prev_attr = b.attr;
        prev_end = end;
      }
    }
    return tardy;
  }

  bool can_join_any_batch(const Job& job) const {
    for (const SearchBatch& b : batches) {
      if (b.attr != job.attribute) continue;
      if (std::find(job.eligible.begin(), job.eligible.end(), b.machine) ==
          job.eligible.end())
        continue;
      if (b.size_sum + job.size > instance.machine(b.machine).capacity)
        continue;
      if (std::max(b.proc, job.min_proc) > std::min(b.maxt_min, job.max_proc))
        continue;
      return true;
    }
    return false;
  }

  // Lower bound, in integer objective units, of every completion of the
  // current partial assignment; nullopt when provably infeasible.
  std::optional<int64_t> node_bound(int next_job) const {
    auto chain_tardy = chain_tardy_lb();
    if (!chain_tardy) return std::nullopt;

    int64_t proc_lb = 0;
    for (const SearchBatch& b : batches) proc_lb += b.proc;

    // jobs that cannot be absorbed into any existing batch force new batches
    std::vector<std::vector<UnitJobInterval>> forced(
        size_t(instance.attribute_count));
    int64_t tardy_lb = *chain_tardy;
    for (char t : alone_tardy) tardy_lb += t;  // tardy wherever they end up
    for (int j = next_job; j <= instance.num_jobs(); ++j) {
      const Job& job = instance.job(j);
      if (!can_join_any_batch(job))
        forced[size_t(job.attribute - 1)].push_back(
            {job.min_proc, job.max_proc, job.size, j});
    }

    std::vector<int64_t> counts(size_t(instance.attribute_count), 0);
    for (const SearchBatch& b : batches) counts[size_t(b.attr - 1)] += 1;
    int64_t cap = instance.max_capacity();
    for (int r = 1; r <= instance.attribute_count; ++r) {
      auto& units = forced[size_t(r - 1)];
      if (units.empty()) continue;
      GacResult gac = gac_plus(units, cap);
      counts[size_t(r - 1)] += gac.batch_count;
      proc_lb += gac.total_proc;
    }
    int64_t setup_lb = setup_cost_bound(instance, counts);

    return coeff_proc * proc_lb + coeff_setup * setup_lb +
           coeff_tardy * tardy_lb;
  }

  void record_leaf() {
    Batching batching(size_t(instance.num_machines()));
    for (int m = 1; m <= instance.num_machines(); ++m)
      for (int bi : seq[size_t(m - 1)]) {
        auto jobs = batches[size_t(bi)].members;
        std::sort(jobs.begin(), jobs.end());
        batching[size_t(m - 1)].push_back(std::move(jobs));
      }
    auto schedule = try_schedule_fixed(instance, batching);
    if (!schedule) return;
    auto rep = objective(instance, *schedule, options.weights);
    if (rep.obj_scaled < best_scaled) {
      best_scaled = rep.obj_scaled;
      best = std::move(*schedule);
    }
  }

  // Machines that are empty and indistinguishable open symmetric batches;
  // keep only the lowest id.
  bool symmetric_duplicate(const Job& job, int m) const {
    if (!seq[size_t(m - 1)].empty()) return false;
    const Machine& mach = instance.machine(m);
    for (int other : job.eligible) {
      if (other >= m) break;
      if (!seq[size_t(other - 1)].empty()) continue;
      const Machine& om = instance.machine(other);
      if (om.capacity == mach.capacity &&
          om.initial_state == mach.initial_state &&
          om.availability == mach.availability)
        return true;
    }
    return false;
  }

  void dive(int j) {
    ++nodes;
    if ((nodes & 1023) == 0 && out_of_time()) aborted = true;

    auto bound = node_bound(j);
    if (!bound) return;
    if (*bound >= best_scaled) return;
    if (aborted) {
      aborted_lb = std::min(aborted_lb, *bound);
      return;
    }
    if (j > instance.num_jobs()) {
      record_leaf();
      return;
    }

    const Job& job = instance.job(j);
    unassigned_attr_count[size_t(job.attribute - 1)] -= 1;

    // option 1: join an existing batch, in creation order
    for (size_t bi = 0; bi < batches.size(); ++bi) {
      SearchBatch& b = batches[bi];
      if (b.attr != job.attribute) continue;
      if (std::find(job.eligible.begin(), job.eligible.end(), b.machine) ==
          job.eligible.end())
        continue;
      if (b.size_sum + job.size > instance.machine(b.machine).capacity)
        continue;
      if (std::max(b.proc, job.min_proc) > std::min(b.maxt_min, job.max_proc))
        continue;
      SearchBatch saved = b;
      b.size_sum += job.size;
      b.proc = std::max(b.proc, job.min_proc);
      b.maxt_min = std::min(b.maxt_min, job.max_proc);
      b.release_max = std::max(b.release_max, job.release);
      b.members.push_back(j);
      dive(j + 1);
      // recursion may reallocate `batches`; re-index instead of using b
      batches[bi] = std::move(saved);
    }

    // option 2: open a new batch at every insertion position
    for (int m : job.eligible) {
      if (symmetric_duplicate(job, m)) continue;
      auto& s = seq[size_t(m - 1)];
      int new_index = int(batches.size());
      batches.push_back({m, job.attribute, job.size, job.min_proc,
                         job.max_proc, job.release, {j}});
      for (size_t pos = 0; pos <= s.size(); ++pos) {
        s.insert(s.begin() + long(pos), new_index);
        dive(j + 1);
        s.erase(s.begin() + long(pos));
      }
      batches.pop_back();
    }

    unassigned_attr_count[size_t(job.attribute - 1)] += 1;
  }
};

}  // namespace

SolveResult branch_and_bound(const Instance& instance,
                             const BnbOptions& options) {
  Searcher search(instance, options);
  if (options.incumbent) {
    auto rep = objective(instance, *options.incumbent, options.weights);
    search.best_scaled = rep.obj_scaled;
    search.best = *options.incumbent;
  }
  search.dive(1);

  SolveResult res;
  res.nodes = search.nodes;
  res.elapsed = std::chrono::steady_clock::now() - search.started;
  if (!search.best) {
    res.status = search.aborted ? SolveStatus::TIMEOUT : SolveStatus::INFEASIBLE;
    if (search.aborted && search.aborted_lb != INT64_MAX)
      res.lower_bound = Rational(search.aborted_lb, search.scale_denominator);
    return res;
  }
  res.schedule = *search.best;
  res.obj = objective(instance, res.schedule, options.weights);
  if (search.aborted) {
    res.status = SolveStatus::FEASIBLE;
    int64_t lb = std::min(search.aborted_lb, search.best_scaled);
    res.lower_bound = Rational(lb, search.scale_denominator);
  } else {
    res.status = SolveStatus::OPTIMAL;
    res.lower_bound = res.obj.obj_real;
  }
  return res;
}

}  // namespace osp
