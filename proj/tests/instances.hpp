#ifndef OSP_TESTS_INSTANCES_HPP
#define OSP_TESTS_INSTANCES_HPP

#include "osp/types.hpp"

namespace osp::testing {

// 6 jobs, 2 machines, 2 attributes, l = 15.
inline Instance six_job_instance() {
  Instance inst;
  inst.horizon = 15;
  inst.attribute_count = 2;
  inst.setup_times = AttributeMatrix(2, 0);
  inst.setup_times.at(1, 1) = 1;
  inst.setup_times.at(1, 2) = 2;
  inst.setup_times.at(2, 1) = 3;
  inst.setup_times.at(2, 2) = 1;
  inst.setup_costs = AttributeMatrix(2, 0);
  inst.setup_costs.at(1, 2) = 20;
  inst.setup_costs.at(2, 1) = 10;
  inst.machines = {
      {1, 100, 1, {{0, 6}, {8, 14}}},
      {2, 150, 2, {{2, 10}, {11, 14}}},
  };
  inst.jobs = {
      {1, {1}, 2, 10, 3, 3, 40, 2},
      {2, {1, 2}, 0, 10, 3, 5, 60, 2},
      {3, {1}, 0, 20, 3, 5, 30, 1},
      {4, {1, 2}, 3, 20, 5, 8, 50, 1},
      {5, {2}, 0, 20, 5, 8, 50, 1},
      {6, {2}, 2, std::nullopt, 5, 10, 50, 1},
  };
  return inst;
}

// 10 jobs, 2 machines, 2 attributes, l = 259; the setup-time matrix is
// all-zeros (not part of the published data), setup costs as published.
inline Instance ten_job_instance() {
  Instance inst;
  inst.horizon = 259;
  inst.attribute_count = 2;
  inst.setup_times = AttributeMatrix(2, 0);
  inst.setup_costs = AttributeMatrix(2, 0);
  inst.setup_costs.at(1, 1) = 6;
  inst.setup_costs.at(1, 2) = 8;
  inst.setup_costs.at(2, 1) = 10;
  inst.setup_costs.at(2, 2) = 10;
  inst.machines = {
      {1, 18, 1, {{21, 250}}},
      {2, 20, 2, {{103, 259}}},
  };
  inst.jobs = {
      {1, {1, 2}, 2, 16, 11, 11, 18, 2},
      {2, {1, 2}, 3, 20, 10, 50, 16, 2},
      {3, {2}, 8, 43, 19, 19, 17, 2},
      {4, {1}, 1, 24, 19, 19, 2, 1},
      {5, {1, 2}, 39, 55, 10, 50, 6, 2},
      {6, {2}, 41, 64, 19, 50, 19, 2},
      {7, {1, 2}, 40, 56, 11, 50, 11, 2},
      {8, {1}, 31, 89, 50, 50, 11, 2},
      {9, {2}, 27, 58, 19, 19, 4, 1},
      {10, {1, 2}, 16, 27, 11, 50, 14, 1},
  };
  return inst;
}

}  // namespace osp::testing

#endif
