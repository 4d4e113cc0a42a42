#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "instances.hpp"
#include "mutations.hpp"
#include "osp/validate.hpp"

using namespace osp;

namespace {

Schedule six_job_optimum() {
  Schedule s;
  s.batches = {{1, 2, 3, {1, 2}}, {1, 11, 3, {3}}, {2, 5, 5, {4, 5, 6}}};
  return s;
}

}  // namespace

TEST_CASE("six-job instance is accepted, with due-date warnings") {
  auto six = testing::six_job_instance();
  auto rep = validate_instance(six);
  CHECK(rep.feasible());
  // jobs 3, 4, 5 have lt = 20 beyond the horizon 15
  CHECK(rep.warnings.size() == 3);
}

TEST_CASE("instance-level violations are collected") {
  auto six = testing::six_job_instance();
  six.jobs[0].release = 20;  // beyond horizon, and >= lt
  auto rep = validate_instance(six);
  CHECK(rep.has(ViolationCode::STRUCTURE));

  auto unsorted = testing::six_job_instance();
  unsorted.machines[0].availability = {{8, 14}, {0, 6}};
  CHECK(validate_instance(unsorted).has(ViolationCode::STRUCTURE));

  auto overlap = testing::six_job_instance();
  overlap.machines[0].availability = {{0, 9}, {8, 14}};
  CHECK(validate_instance(overlap).has(ViolationCode::STRUCTURE));

  auto bad_attr = testing::six_job_instance();
  bad_attr.jobs[1].attribute = 3;
  CHECK(!validate_instance(bad_attr).feasible());

  auto bad_matrix = testing::six_job_instance();
  bad_matrix.setup_times.at(1, 2) = -1;
  CHECK(!validate_instance(bad_matrix).feasible());

  auto zero_mint = testing::six_job_instance();
  zero_mint.jobs[2].min_proc = 0;
  CHECK(!validate_instance(zero_mint).feasible());
}

TEST_CASE("all violations are reported, not only the first") {
  auto six = testing::six_job_instance();
  six.jobs[0].release = 20;
  six.jobs[1].attribute = 5;
  auto rep = validate_instance(six);
  CHECK(rep.violations.size() >= 2);
}

TEST_CASE("three-batch optimum of the six-job instance is feasible") {
  auto six = testing::six_job_instance();
  auto rep = validate_schedule(six, six_job_optimum());
  CHECK(rep.feasible());
}

TEST_CASE("tardiness alone is not a violation") {
  auto six = testing::six_job_instance();
  Schedule s = six_job_optimum();
  // push batch {3} to end at 14 (after its lt would matter if lt were small)
  auto rep = validate_schedule(six, s);
  CHECK(rep.feasible());
}

TEST_CASE("release mutation on the six-job optimum") {
  auto six = testing::six_job_instance();
  Schedule s = six_job_optimum();
  s.batches[2].start = 4;  // wait: setup still fits? st(2,1)=3, 4-3 >= 2 fails
  auto rep = validate_schedule(six, s);
  CHECK(!rep.feasible());
}

TEST_CASE("structure errors short-circuit constraint checks") {
  auto six = testing::six_job_instance();
  Schedule s = six_job_optimum();
  s.batches[0].jobs = {1, 2, 2};
  auto rep = validate_schedule(six, s);
  CHECK(rep.has(ViolationCode::STRUCTURE));
  s = six_job_optimum();
  s.batches[1].jobs.clear();
  CHECK(validate_schedule(six, s).has(ViolationCode::STRUCTURE));
  s = six_job_optimum();
  s.batches[1].jobs = {3, 99};
  CHECK(validate_schedule(six, s).has(ViolationCode::STRUCTURE));
  s = six_job_optimum();
  s.batches[1].machine = 9;
  CHECK(validate_schedule(six, s).has(ViolationCode::STRUCTURE));
}

TEST_CASE("each constraint mutation triggers exactly its own code") {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    auto fx = testing::mutation_fixture(seed);
    REQUIRE(validate_instance(fx.instance).feasible());
    REQUIRE(validate_schedule(fx.instance, fx.schedule).feasible());
    for (ViolationCode code : testing::kConstraintCodes) {
      auto rep = validate_schedule(fx.instance, testing::mutate(fx, code));
      CHECK(rep.has(code));
      for (const auto& v : rep.violations) CHECK(v.code == code);
    }
  }
}
