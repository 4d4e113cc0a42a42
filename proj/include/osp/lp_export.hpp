#ifndef OSP_LP_EXPORT_HPP
#define OSP_LP_EXPORT_HPP

#include "osp/objective.hpp"
#include "osp/types.hpp"

namespace osp {

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer linear model in CPLEX LP format, minimizing the scaled objective
// obj'. Matrix lookups are linearized with one-hot attribute binaries and
// pairwise products; output is byte-stable for a fixed instance and weights.
std::string export_ilp(const Instance& instance, const ObjectiveWeights& weights);

}  // namespace osp

#endif
