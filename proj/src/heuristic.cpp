#include "osp/heuristic.hpp"

#include <limits>

namespace osp {

namespace {

constexpr int64_t kNoDue = std::numeric_limits<int64_t>::max();

struct MachineState {
  int64_t last_end = 0;
  int last_attr = 0;
  const Interval* current = nullptr;  // availability interval containing t
};

// Last interval with start <= t that still covers t.
const Interval* interval_at(const Machine& mach, int64_t t) {
  const Interval* found = nullptr;
  for (const Interval& iv : mach.availability) {
    if (iv.start > t) break;
    if (t <= iv.end && !iv.empty()) found = &iv;
  }
  return found;
}

struct OpenBatch {
  int machine = 0;
  const Interval* interval = nullptr;
  int64_t setup = 0;
  int attr = 0;
  std::vector<int> members;
  int64_t size_sum = 0;
  int64_t proc = 0;      // max member mint
  int64_t maxt_min = 0;  // min member maxt
  int64_t release_max = 0;

  int64_t start(int64_t t, const MachineState& ms) const {
    return std::max({t, ms.last_end + setup, release_max, interval->start + setup});
  }
};

}  // namespace

Schedule construct(const Instance& instance) {
  const int n = instance.num_jobs();
  const int k = instance.num_machines();
  std::vector<MachineState> state(static_cast<size_t>(k));
  for (int m = 1; m <= k; ++m)
    state[size_t(m - 1)].last_attr = instance.machine(m).initial_state;

  std::vector<char> scheduled(size_t(n), 0);
  int remaining = n;
  Schedule schedule;

  auto due_of = [&](int j) {
    const auto& d = instance.job(j).due;
    return d ? *d : kNoDue;
  };

  // Earliest feasible start of job j alone on machine m at time t, within the
  // machine's current availability interval; nullopt when it does not fit.
  auto fit_alone = [&](int j, int m,
                       int64_t t) -> std::optional<std::pair<int64_t, int64_t>> {
    const Job& job = instance.job(j);
    const MachineState& ms = state[size_t(m - 1)];
    if (ms.last_end > t || ms.current == nullptr) return std::nullopt;
    int64_t setup = instance.setup_times.at(ms.last_attr, job.attribute);
    int64_t s = std::max({t, ms.last_end + setup, job.release,
                          ms.current->start + setup});
    if (s + job.min_proc > ms.current->end) return std::nullopt;
    return std::make_pair(s, setup);
  };

  for (int64_t t = 0; t <= instance.horizon && remaining > 0; ++t) {
    for (int m = 1; m <= k; ++m)
      state[size_t(m - 1)].current = interval_at(instance.machine(m), t);

    while (remaining > 0) {
      // seed job: released, fits somewhere right now
      int seed = -1;
      for (int j = 1; j <= n; ++j) {
        if (scheduled[size_t(j - 1)] || instance.job(j).release > t) continue;
        bool fits = false;
        for (int m : instance.job(j).eligible)
          if (fit_alone(j, m, t)) {
            fits = true;
            break;
          }
        if (!fits) continue;
        if (seed < 0) {
          seed = j;
          continue;
        }
        auto key = [&](int cand) {
          return std::make_tuple(due_of(cand), -instance.job(cand).size, cand);
        };
        if (key(j) < key(seed)) seed = j;
      }
      if (seed < 0) break;

      const Job& seed_job = instance.job(seed);
      int best_m = -1;
      int64_t best_setup = 0;
      for (int m : seed_job.eligible) {
        auto fit = fit_alone(seed, m, t);
        if (!fit) continue;
        if (best_m < 0 || fit->second < best_setup) {
          best_m = m;
          best_setup = fit->second;
        }
      }

      const Machine& mach = instance.machine(best_m);
      MachineState& ms = state[size_t(best_m - 1)];
      OpenBatch batch;
      batch.machine = best_m;
      batch.interval = ms.current;
      batch.setup = best_setup;
      batch.attr = seed_job.attribute;
      batch.members = {seed};
      batch.size_sum = seed_job.size;
      batch.proc = seed_job.min_proc;
      batch.maxt_min = seed_job.max_proc;
      batch.release_max = seed_job.release;

      const int64_t seed_due = due_of(seed);

      // One fill pass over candidates sorted by decreasing due date; the
      // look-ahead pass additionally admits not-yet-released jobs as long as
      // the batch stays inside the current interval.
      auto fill = [&](bool look_ahead) {
        std::vector<int> cands;
        for (int j = 1; j <= n; ++j) {
          if (scheduled[size_t(j - 1)] || j == seed) continue;
          const Job& job = instance.job(j);
          bool released = job.release <= t;
          if (released == look_ahead) continue;
          if (job.attribute != batch.attr) continue;
          if (std::find(job.eligible.begin(), job.eligible.end(), best_m) ==
              job.eligible.end())
            continue;
          cands.push_back(j);
        }
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
          if (due_of(a) != due_of(b)) return due_of(a) > due_of(b);
          return a < b;
        });
        for (int j : cands) {
          const Job& job = instance.job(j);
          if (batch.size_sum + job.size > mach.capacity) continue;
          int64_t proc2 = std::max(batch.proc, job.min_proc);
          int64_t maxt2 = std::min(batch.maxt_min, job.max_proc);
          if (proc2 > maxt2) continue;
          int64_t release2 = std::max(batch.release_max, job.release);

          int64_t cur_start = batch.start(t, ms);
          bool seed_late = cur_start + batch.proc > seed_due;

          OpenBatch next = batch;
          next.size_sum += job.size;
          next.proc = proc2;
          next.maxt_min = maxt2;
          next.release_max = release2;
          int64_t new_start = next.start(t, ms);
          if (new_start + proc2 > batch.interval->end) continue;
          if (!seed_late && new_start + proc2 > seed_due) continue;

          batch = std::move(next);
          batch.members.push_back(j);
        }
      };
      fill(false);
      if (batch.size_sum < mach.capacity) fill(true);

      int64_t start = batch.start(t, ms);
      schedule.batches.push_back(
          {best_m, start, batch.proc, batch.members});
      std::sort(schedule.batches.back().jobs.begin(),
                schedule.batches.back().jobs.end());
      ms.last_end = start + batch.proc;
      ms.last_attr = batch.attr;
      for (int j : batch.members) scheduled[size_t(j - 1)] = 1;
      remaining -= int(batch.members.size());
    }
  }

  if (remaining > 0) {
    ConstructionResult partial;
    partial.schedule = schedule;
    for (int j = 1; j <= n; ++j)
      if (!scheduled[size_t(j - 1)]) partial.unscheduled.push_back(j);
    int first = partial.unscheduled.front();
    throw Unschedulable(first, std::move(partial));
  }
  return schedule;
}

}  // namespace osp
