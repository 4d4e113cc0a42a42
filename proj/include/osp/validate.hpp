#ifndef OSP_VALIDATE_HPP
#define OSP_VALIDATE_HPP

#include "osp/types.hpp"

namespace osp {

enum class ViolationCode {
  RELEASE,
  PROC_WINDOW,
  OVERLAP,
  INTERVAL_FIT,
  SETUP_FIT,
  CAPACITY,
  ATTRIBUTE,
  ELIGIBILITY,
  STRUCTURE,
};

const char* to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  int batch = -1;  // index into schedule.batches, -1 when not batch-specific
  int job = -1;    // job id, -1 when not job-specific
  std::string detail;
};

struct ViolationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  bool feasible() const { return violations.empty(); }
  bool has(ViolationCode code) const {
    for (const auto& v : violations)
      if (v.code == code) return true;
    return false;
  }
};

// Checks instance-level invariants (ranges, sortedness, matrix shapes).
// Collects every violation; lt_j > l only warns.
ViolationReport validate_instance(const Instance& instance);

// Checks a schedule against all hard constraints. Tardiness is not a
// violation. Assumes validate_instance passed.
ViolationReport validate_schedule(const Instance& instance,
                                  const Schedule& schedule);

}  // namespace osp

#endif
