#ifndef OSP_OBJECTIVE_HPP
#define OSP_OBJECTIVE_HPP

#include "osp/types.hpp"

namespace osp {

struct ObjectiveWeights {
  int64_t proc = 4;   // w_p
  int64_t setup = 1;  // w_sc
  int64_t tardy = 100;  // w_t

  int64_t total() const { return proc + setup + tardy; }
  bool valid() const {
    return proc >= 0 && setup >= 0 && tardy >= 0 && total() > 0;
  }
};

struct ObjectiveComponents {
  int64_t proc_time = 0;   // p
  int64_t setup_cost = 0;  // sc
  int64_t tardy_count = 0; // t
};

struct ObjectiveReport {
  ObjectiveComponents components;
  int64_t avg_min_proc = 0;  // avg_t = ceil(sum mint / n)
  int64_t scale = 0;         // C = lcm(avg_t, max(max_SC, 1))
  int64_t obj_scaled = 0;    // integer objective obj'
  Rational obj_real;         // normalized objective in [0, 1]
};

// avg_t and the lcm scale C used by both objective forms.
int64_t average_min_proc(const Instance& instance);
int64_t objective_scale(const Instance& instance);

// Components (p, sc, t) of a structurally well-formed schedule.
// Throws MalformedSchedule when a job is missing, duplicated or unknown,
// or a batch is empty.
ObjectiveComponents objective_components(const Instance& instance,
                                         const Schedule& schedule);

ObjectiveReport objective(const Instance& instance, const Schedule& schedule,
                          const ObjectiveWeights& weights);

// Objective values from already-known components; used by bounds and search.
ObjectiveReport objective_from_components(const Instance& instance,
                                          const ObjectiveComponents& components,
                                          const ObjectiveWeights& weights);

// Decimal rendering with 6 fractional digits, round-half-even.
std::string to_decimal(const Rational& value);

}  // namespace osp

#endif
