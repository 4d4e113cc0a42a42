#ifndef OSP_TESTS_MUTATIONS_HPP
#define OSP_TESTS_MUTATIONS_HPP

#include "osp/rng.hpp"
#include "osp/types.hpp"
#include "osp/validate.hpp"

namespace osp::testing {

// A seed-parameterized instance plus a feasible schedule built so that each
// of the eight constraint mutations below violates exactly its own code.
struct MutationFixture {
  Instance instance;
  Schedule schedule;
  int64_t m1, m3, m4;  // batch processing times used by the mutations
};

inline MutationFixture mutation_fixture(uint64_t seed) {
  StreamRng rng(seed, 7);
  int64_t r1 = rng.uniform_int(2, 6);
  int64_t m1 = rng.uniform_int(2, 6);
  int64_t m3 = rng.uniform_int(2, 6);
  int64_t m4 = rng.uniform_int(2, 6);
  int64_t g = rng.uniform_int(0, 2);
  int64_t h = rng.uniform_int(0, 2);

  Instance inst;
  inst.horizon = 1000;
  inst.attribute_count = 2;
  inst.setup_times = AttributeMatrix(2, 1);
  inst.setup_costs = AttributeMatrix(2, 1);
  inst.machines = {
      {1, 10, 1, {{0, 400}, {500, 1000}}},
      {2, 10, 1, {{0, 1000}}},
  };
  inst.jobs = {
      {1, {1}, r1, std::nullopt, m1, m1 + 1, 4, 1},
      {2, {1}, 0, std::nullopt, m1, m1 + 1, 4, 1},
      {3, {2}, 0, std::nullopt, m3, m3 + 1, 5, 2},
      {4, {1}, 0, std::nullopt, m4, m4 + 1, 4, 1},
      {5, {1, 2}, 0, std::nullopt, m1, m1 + 1, 8, 1},
      {6, {1, 2}, 0, std::nullopt, m3, m3 + 1, 4, 1},
      {7, {2}, 0, std::nullopt, m1, m1 + 1, 1, 1},
  };

  Schedule s;
  int64_t s1 = r1 + 1 + g;  // batch 0: {1,2} on machine 1
  s.batches.push_back({1, s1, m1, {1, 2}});
  int64_t s1b = s1 + m1 + 4;  // batch 1: {4} on machine 1; slack for mutations
  s.batches.push_back({1, s1b, m4, {4}});
  int64_t s2 = 1 + h;  // batch 2: {3} on machine 2
  s.batches.push_back({2, s2, m3, {3}});
  int64_t s3 = s2 + m3 + 2;  // batches 3-5: {5}, {6}, {7} on machine 2
  s.batches.push_back({2, s3, m1, {5}});
  int64_t s4 = s3 + m1 + 2;
  s.batches.push_back({2, s4, m3, {6}});
  int64_t s5 = s4 + m3 + 2;
  s.batches.push_back({2, s5, m1, {7}});
  return {std::move(inst), std::move(s), m1, m3, m4};
}

// Applies the mutation for `code` to a copy of the fixture's schedule.
inline Schedule mutate(const MutationFixture& fx, ViolationCode code) {
  Schedule s = fx.schedule;
  auto move_into = [&s](size_t from, size_t into) {
    int job = s.batches[from].jobs.front();
    s.batches.erase(s.batches.begin() + long(from));
    if (into > from) --into;
    s.batches[into].jobs.push_back(job);
  };
  switch (code) {
    case ViolationCode::RELEASE:
      s.batches[0].start = fx.instance.job(1).release - 1;
      break;
    case ViolationCode::PROC_WINDOW:
      s.batches[0].proc = fx.m1 + 2;
      break;
    case ViolationCode::OVERLAP:  // start before previous end plus setup
      s.batches[1].start = s.batches[0].start + fx.m1;
      break;
    case ViolationCode::INTERVAL_FIT:  // straddles the machine-1 gap
      s.batches[1].start = 399;
      break;
    case ViolationCode::SETUP_FIT:  // batch fits, leading setup does not
      s.batches[1].start = 500;
      break;
    case ViolationCode::CAPACITY:  // job 5 pushes batch 0 to size 16 > 10
      move_into(3, 0);
      break;
    case ViolationCode::ATTRIBUTE:  // job 6 (attr 1) joins batch 2 (attr 2)
      move_into(4, 2);
      break;
    case ViolationCode::ELIGIBILITY:  // job 7 only runs on machine 2
      move_into(5, 0);
      break;
    case ViolationCode::STRUCTURE:
      s.batches[0].jobs.push_back(s.batches[2].jobs.front());
      break;
  }
  return s;
}

inline constexpr ViolationCode kConstraintCodes[] = {
    ViolationCode::RELEASE,      ViolationCode::PROC_WINDOW,
    ViolationCode::OVERLAP,      ViolationCode::INTERVAL_FIT,
    ViolationCode::SETUP_FIT,    ViolationCode::CAPACITY,
    ViolationCode::ATTRIBUTE,    ViolationCode::ELIGIBILITY,
};

}  // namespace osp::testing

#endif
