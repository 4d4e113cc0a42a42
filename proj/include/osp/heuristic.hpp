#ifndef OSP_HEURISTIC_HPP
#define OSP_HEURISTIC_HPP

#include "osp/types.hpp"

namespace osp {

struct ConstructionResult {
  Schedule schedule;                 // partial on failure
  std::vector<int> unscheduled;      // empty on success
  bool complete() const { return unscheduled.empty(); }
};

struct Unschedulable : std::runtime_error {
  Unschedulable(int job, ConstructionResult partial)
      : std::runtime_error("job " + std::to_string(job) +
                           " could not be scheduled"),
        job_id(job),
        partial(std::move(partial)) {}
  int job_id;
  ConstructionResult partial;
};

// Dispatching-rule construction: time sweep choosing seed jobs by earliest
// due date (then largest size, then lowest id), machines by minimal setup
// (then lowest id), filling batches with compatible jobs plus a look-ahead
// restricted to the current availability interval. Deterministic.
// Throws Unschedulable when some job remains unplaced at the horizon.
Schedule construct(const Instance& instance);

}  // namespace osp

#endif
