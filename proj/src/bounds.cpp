#include "osp/bounds.hpp"

namespace osp {

namespace {

int64_t ceil_div(int64_t num, int64_t den) { return (num + den - 1) / den; }

std::vector<int> attribute_jobs(const Instance& instance, int attribute) {
  std::vector<int> out;
  for (const Job& j : instance.jobs)
    if (j.attribute == attribute) out.push_back(j.id);
  return out;
}

int64_t max_eligible_capacity(const Instance& instance, const Job& job) {
  int64_t mx = 0;
  for (int m : job.eligible)
    mx = std::max(mx, instance.machine(m).capacity);
  return mx;
}

}  // namespace

GacResult gac_plus(std::vector<UnitJobInterval> unit_jobs, int64_t capacity) {
  if (capacity < 1) throw CapacityZero("capacity must be >= 1");
  std::stable_sort(unit_jobs.begin(), unit_jobs.end(),
                   [](const UnitJobInterval& a, const UnitJobInterval& b) {
                     if (a.lo != b.lo) return a.lo > b.lo;
                     return a.job_id < b.job_id;
                   });
  GacResult res;
  std::vector<int64_t> remaining;
  remaining.reserve(unit_jobs.size());
  for (const auto& u : unit_jobs) remaining.push_back(u.multiplicity);

  size_t first_open = 0;
  while (true) {
    while (first_open < unit_jobs.size() && remaining[first_open] == 0)
      ++first_open;
    if (first_open == unit_jobs.size()) break;

    const UnitJobInterval& label = unit_jobs[first_open];
    GacBatch batch;
    batch.label_job = label.job_id;
    batch.proc = label.lo;
    int64_t room = capacity;
    for (size_t i = first_open; i < unit_jobs.size() && room > 0; ++i) {
      if (remaining[i] == 0) continue;
      if (unit_jobs[i].lo <= label.lo && label.lo <= unit_jobs[i].hi) {
        int64_t take = std::min(remaining[i], room);
        remaining[i] -= take;
        room -= take;
        batch.taken.emplace_back(unit_jobs[i].job_id, take);
      }
    }
    res.batch_count += 1;
    res.total_proc += batch.proc;
    res.batches.push_back(std::move(batch));
  }
  return res;
}

int64_t simple_cap_bound(const Instance& instance, int attribute) {
  int64_t total = 0;
  for (int j : attribute_jobs(instance, attribute)) total += instance.job(j).size;
  if (total == 0) return 0;
  return ceil_div(total, instance.max_capacity());
}

std::pair<std::vector<int>, std::vector<int>> split_large_small(
    const Instance& instance, int attribute) {
  auto ids = attribute_jobs(instance, attribute);
  int64_t min_size = INT64_MAX;
  for (int j : ids) min_size = std::min(min_size, instance.job(j).size);
  std::vector<int> large, small;
  for (int j : ids) {
    const Job& job = instance.job(j);
    if (max_eligible_capacity(instance, job) - job.size < min_size)
      large.push_back(j);
    else
      small.push_back(j);
  }
  return {large, small};
}

std::pair<int64_t, int64_t> eligibility_bound(const Instance& instance,
                                              int attribute) {
  const auto [large, small] = split_large_small(instance, attribute);
  (void)large;
  const int k = instance.num_machines();

  // single-machine loads
  std::vector<int64_t> single_load(size_t(k), 0);
  std::vector<std::vector<int64_t>> single_mints(static_cast<size_t>(k));
  int64_t multi_load = 0;            // S_r
  std::vector<int64_t> multi_mints;  // jobs with several eligible machines
  for (int j : small) {
    const Job& job = instance.job(j);
    if (job.eligible.size() == 1) {
      int m = job.eligible.front();
      single_load[size_t(m - 1)] += job.size;
      single_mints[size_t(m - 1)].push_back(job.min_proc);
    } else {
      multi_load += job.size;
      multi_mints.push_back(job.min_proc);
    }
  }

  int64_t count = 0;
  int64_t spare = 0;  // sum of cap_i
  std::vector<int64_t> times;
  for (int m = 1; m <= k; ++m) {
    int64_t load = single_load[size_t(m - 1)];
    if (load == 0) continue;
    int64_t cm = instance.machine(m).capacity;
    int64_t batches = ceil_div(load, cm);
    count += batches;
    spare += batches * cm - load;

    auto& mints = single_mints[size_t(m - 1)];
    std::sort(mints.begin(), mints.end());
    times.push_back(mints.back());  // largest mint fixes one batch time
    int64_t rest = std::min<int64_t>(batches - 1, int64_t(mints.size()) - 1);
    for (int64_t i = 0; i < rest; ++i) times.push_back(mints[size_t(i)]);
  }

  int64_t overflow =
      ceil_div(std::max<int64_t>(0, multi_load - spare), instance.max_capacity());
  count += overflow;

  std::sort(multi_mints.begin(), multi_mints.end());
  if (!multi_mints.empty()) {
    int64_t extra = overflow;
    int64_t mx = multi_mints.back();
    auto largest = std::max_element(times.begin(), times.end());
    if (largest != times.end() && mx > *largest) {
      // the replace-max step; applies even when no extra batch is needed
      *largest = mx;
      extra = std::max<int64_t>(0, extra - 1);
    } else if (times.empty() && extra > 0) {
      times.push_back(mx);
      --extra;
    }
    for (int64_t i = 0; i < std::min<int64_t>(extra, int64_t(multi_mints.size()));
         ++i)
      times.push_back(multi_mints[size_t(i)]);
  }

  int64_t proc = 0;
  for (int64_t t : times) proc += t;
  return {count, proc};
}

std::pair<int64_t, int64_t> compat_bound(const Instance& instance,
                                         int attribute) {
  const auto [large, small] = split_large_small(instance, attribute);
  (void)large;
  if (small.empty()) return {0, 0};
  std::vector<UnitJobInterval> units;
  units.reserve(small.size());
  for (int j : small) {
    const Job& job = instance.job(j);
    units.push_back({job.min_proc, job.max_proc, job.size, j});
  }
  GacResult res = gac_plus(std::move(units), instance.max_capacity());
  return {res.batch_count, res.total_proc};
}

int64_t setup_cost_bound(const Instance& instance,
                         const std::vector<int64_t>& per_attribute_counts) {
  const int a = instance.attribute_count;
  int64_t total_batches = 0;
  int64_t before_min = 0;  // minimal cost before every batch
  std::vector<int64_t> after_costs;
  for (int r = 1; r <= a; ++r) {
    int64_t br = per_attribute_counts[size_t(r - 1)];
    total_batches += br;
    before_min += br * instance.setup_costs.col_min(r);
    for (int64_t i = 0; i < br; ++i)
      after_costs.push_back(instance.setup_costs.row_min(r));
  }
  for (const Machine& m : instance.machines)
    after_costs.push_back(instance.setup_costs.row_min(m.initial_state));
  std::sort(after_costs.begin(), after_costs.end());
  int64_t after_min = 0;
  for (int64_t i = 0; i < total_batches; ++i) after_min += after_costs[size_t(i)];
  return std::max(before_min, after_min);
}

std::optional<int64_t> earliest_alone_completion(const Instance& instance,
                                                 int job_id) {
  const Job& job = instance.job(job_id);
  std::optional<int64_t> best;
  for (int m : job.eligible) {
    const Machine& mach = instance.machine(m);
    int64_t setup = instance.setup_times.at(mach.initial_state, job.attribute);
    for (const Interval& iv : mach.availability) {
      int64_t start = std::max(job.release, iv.start + setup);
      if (start + job.min_proc <= iv.end) {
        int64_t done = start + job.min_proc;
        if (!best || done < *best) best = done;
        break;  // intervals are sorted, later ones only finish later
      }
    }
  }
  return best;
}

int64_t tardy_bound(const Instance& instance) {
  int64_t tardy = 0;
  for (const Job& job : instance.jobs) {
    if (!job.due) continue;
    auto done = earliest_alone_completion(instance, job.id);
    if (!done || *done > *job.due) ++tardy;
  }
  return tardy;
}

BoundReport bound_report(const Instance& instance,
                         const ObjectiveWeights& weights) {
  BoundReport rep;
  std::vector<int64_t> counts;
  for (int r = 1; r <= instance.attribute_count; ++r) {
    AttributeBound ab;
    ab.attribute = r;
    auto [large, small] = split_large_small(instance, r);
    (void)small;
    ab.large_jobs = large;
    ab.large_count = int64_t(large.size());
    for (int j : large) ab.large_proc += instance.job(j).min_proc;
    ab.simple_cap_count = simple_cap_bound(instance, r);
    std::tie(ab.count_eligibility, ab.proc_eligibility) =
        eligibility_bound(instance, r);
    std::tie(ab.count_compat, ab.proc_compat) = compat_bound(instance, r);
    rep.batch_count_lb += ab.combined_count();
    rep.proc_time_lb += ab.combined_proc();
    counts.push_back(ab.combined_count());
    rep.per_attribute.push_back(std::move(ab));
  }
  rep.setup_cost_lb = setup_cost_bound(instance, counts);
  for (const Job& job : instance.jobs)
    if (!earliest_alone_completion(instance, job.id))
      rep.unschedulable_jobs.push_back(job.id);
  rep.tardy_lb = tardy_bound(instance);
  rep.obj_lb = objective_from_components(
                   instance,
                   {rep.proc_time_lb, rep.setup_cost_lb, rep.tardy_lb}, weights)
                   .obj_real;
  return rep;
}

}  // namespace osp
