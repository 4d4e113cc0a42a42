#ifndef OSP_SOLVE_HPP
#define OSP_SOLVE_HPP

#include <chrono>

#include "osp/objective.hpp"
#include "osp/types.hpp"

namespace osp {

enum class SolveStatus { OPTIMAL, FEASIBLE, INFEASIBLE, TIMEOUT };

const char* to_string(SolveStatus status);

struct SolveResult {
  Schedule schedule;       // best found; empty when INFEASIBLE
  ObjectiveReport obj;
  SolveStatus status = SolveStatus::INFEASIBLE;
  Rational lower_bound;
  int64_t nodes = 0;
  std::chrono::duration<double> elapsed{0};
};

struct DoesNotFit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ordered job-set lists per machine (index 0 = machine 1).
using Batching = std::vector<std::vector<std::vector<int>>>;

// Left-to-right greedy timing of a fixed batching: every batch gets
// P = max member mint and the smallest feasible start. The result is
// componentwise minimal over all feasible start vectors for the given
// sequences. Throws DoesNotFit when a batch fits no interval.
Schedule schedule_fixed(const Instance& instance, const Batching& batching);

// As above but reports failure via nullopt; used in search inner loops.
std::optional<Schedule> try_schedule_fixed(const Instance& instance,
                                           const Batching& batching);

// Exhaustive oracle. Enumerates all feasible batchings, machine assignments
// and batch orders; relies on P = max member mint and earliest starts being
// weakly dominant. Guarded at n <= 10.
SolveResult brute_force(const Instance& instance,
                        const ObjectiveWeights& weights);

struct BnbOptions {
  ObjectiveWeights weights;
  std::chrono::duration<double> time_limit{3600.0};
  std::optional<Schedule> incumbent;
};

// Depth-first exact search: jobs in id order join an existing batch or open
// a new one at any insertion position; bound-pruned against the incumbent.
SolveResult branch_and_bound(const Instance& instance, const BnbOptions& options);

}  // namespace osp

#endif
