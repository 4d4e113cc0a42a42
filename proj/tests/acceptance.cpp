// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its own runtime budget.
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "instances.hpp"
#include "mutations.hpp"
#include "osp/bounds.hpp"
#include "osp/gen.hpp"
#include "osp/heuristic.hpp"
#include "osp/io.hpp"
#include "osp/objective.hpp"
#include "osp/solve.hpp"
#include "osp/validate.hpp"
#include "unit_oracle.hpp"

using namespace osp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& message) {
    if (cond || !ok) {
      ok = ok && cond;
      return;
    }
    ok = false;
    detail = message;
  }
};

// The n <= 6 family shared by the oracle-equivalence and bound-soundness
// criteria: 100 seeds swept across the benchmark parameter grid.
std::vector<Instance> small_family() {
  const SetupMatrixType types[] = {
      SetupMatrixType::CONSTANT, SetupMatrixType::ARBITRARY,
      SetupMatrixType::REALISTIC, SetupMatrixType::SYMMETRIC};
  std::vector<Instance> out;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorParams p;
    p.job_count = int64_t(3 + seed % 4);
    p.max_proc = (seed % 2) ? 100 : 10;
    p.max_time = (seed / 2) % 2 == 0;
    p.release_spread = (seed / 4) % 2 ? 0.5 : 0.1;
    p.due_factor = (seed / 8) % 2 ? 5.0 : 2.0;
    p.extra_machine_prob = (seed / 16) % 2 ? 0.5 : 0.2;
    p.attribute_count = (seed / 32) % 2 ? 5 : 2;
    p.setup_time_type = types[seed % 4];
    p.setup_cost_type = types[(seed / 4) % 4];
    p.machine_count = (seed % 3 == 0) ? 5 : 2;
    p.max_job_size = (seed % 5 == 0) ? 20 : 5;
    p.min_capacity = p.max_job_size;
    p.max_capacity = (seed % 7 == 0) ? 100 : std::max<int64_t>(20, p.max_job_size);
    p.min_available_fraction = (seed % 2) ? 0.75 : 0.25;
    p.seed = seed;
    out.push_back(generate(p));
  }
  return out;
}

// The 80-instance benchmark-sized family shared by the heuristic and
// bound-speed criteria: sizes 10/25/50/100, 20 seeds each.
std::vector<Instance> benchmark_family() {
  const SetupMatrixType types[] = {
      SetupMatrixType::CONSTANT, SetupMatrixType::ARBITRARY,
      SetupMatrixType::REALISTIC, SetupMatrixType::SYMMETRIC};
  std::vector<Instance> out;
  for (int64_t n : {10, 25, 50, 100}) {
    for (uint64_t seed = 0; seed < 20; ++seed) {
      GeneratorParams p;
      p.job_count = n;
      p.max_proc = (seed % 2) ? 100 : 10;
      p.release_spread = (seed / 2) % 2 ? 0.5 : 0.1;
      p.due_factor = (seed / 4) % 2 ? 5.0 : 2.0;
      p.extra_machine_prob = (seed / 8) % 2 ? 0.5 : 0.2;
      p.attribute_count = (seed % 3 == 0) ? 5 : 2;
      p.setup_time_type = types[seed % 4];
      p.setup_cost_type = types[(seed + 1) % 4];
      p.machine_count = (seed % 5 == 0) ? 5 : 2;
      p.max_job_size = (seed % 2) ? 20 : 5;
      p.min_capacity = p.max_job_size;
      p.max_capacity = (seed % 2) ? 100 : 20;
      p.seed = 1000 * uint64_t(n) + seed;
      out.push_back(generate(p));
    }
  }
  return out;
}

Check golden_bounds() {
  Check c;
  auto ten = osp::testing::ten_job_instance();
  auto rep = bound_report(ten, {});
  c.expect(rep.batch_count_lb == 8, "batch count lb != 8");
  c.expect(rep.proc_time_lb == 158, "processing time lb != 158");
  c.expect(rep.setup_cost_lb == 68, "setup cost lb != 68");
  c.expect(rep.tardy_lb == 7, "tardy lb != 7");
  c.expect(rep.obj_lb == Rational(16693, 23625), "objective lb off");
  c.expect(to_decimal(rep.obj_lb) == "0.706582", "objective lb decimal off");
  c.expect(rep.per_attribute.size() == 2, "expected two attributes");
  const auto& a1 = rep.per_attribute[0];
  c.expect(a1.large_count == 0 && a1.large_proc == 0, "attr1 large split off");
  c.expect(a1.count_eligibility == 2 && a1.proc_eligibility == 38,
           "attr1 eligibility bound off");
  c.expect(a1.count_compat == 1 && a1.proc_compat == 19,
           "attr1 compatibility bound off");
  const auto& a2 = rep.per_attribute[1];
  c.expect(a2.large_count == 4 && a2.large_proc == 59, "attr2 large split off");
  c.expect(a2.large_count + a2.count_eligibility == 6 &&
               a2.proc_eligibility == 60,
           "attr2 eligibility bound off");
  c.expect(a2.large_count + a2.count_compat == 6 && a2.proc_compat == 61,
           "attr2 compatibility bound off");
  c.expect(a1.simple_cap_count + a2.simple_cap_count == 6,
           "simple capacity sum != 6");
  return c;
}

Check golden_optimum() {
  Check c;
  auto ten = osp::testing::ten_job_instance();
  for (bool exhaustive : {true, false}) {
    auto res = exhaustive ? brute_force(ten, {}) : branch_and_bound(ten, {});
    const char* who = exhaustive ? "oracle" : "search";
    c.expect(res.status == SolveStatus::OPTIMAL,
             std::string(who) + " not optimal");
    if (res.status != SolveStatus::OPTIMAL) continue;
    auto comp = res.obj.components;
    c.expect(comp.proc_time == 158 && comp.setup_cost == 72 &&
                 comp.tardy_count == 8,
             std::string(who) + " components != (158, 72, 8)");
    c.expect(res.obj.obj_scaled == 75808,
             std::string(who) + " integer objective != 75808");
    c.expect(res.obj.obj_real == Rational(18952, 23625),
             std::string(who) + " objective off");
    c.expect(to_decimal(res.obj.obj_real) == "0.802201",
             std::string(who) + " decimal off");
  }
  return c;
}

Check frozen_small_optimum() {
  Check c;
  auto six = osp::testing::six_job_instance();
  auto res = brute_force(six, {});
  c.expect(res.status == SolveStatus::OPTIMAL, "oracle not optimal");
  // frozen regression constant, first computed by this oracle
  c.expect(res.obj.obj_scaled == 260, "integer objective != 260");
  c.expect(res.schedule.batches.size() == 3, "optimum is not three batches");
  c.expect(validate_schedule(six, res.schedule).feasible(),
           "optimum fails validation");
  return c;
}

Check oracle_equivalence(const std::vector<Instance>& family,
                         std::vector<SolveResult>& oracle_out) {
  Check c;
  for (size_t i = 0; i < family.size(); ++i) {
    auto oracle = brute_force(family[i], {});
    auto search = branch_and_bound(family[i], {});
    std::string tag = "instance " + std::to_string(i);
    c.expect(oracle.status == search.status, tag + ": status mismatch");
    if (oracle.status == SolveStatus::OPTIMAL) {
      c.expect(oracle.obj.obj_scaled == search.obj.obj_scaled,
               tag + ": objective mismatch");
      c.expect(validate_schedule(family[i], search.schedule).feasible(),
               tag + ": search schedule infeasible");
    }
    oracle_out.push_back(std::move(oracle));
  }
  return c;
}

Check gac_optimality() {
  Check c;
  std::vector<std::pair<int64_t, int64_t>> types;
  for (int64_t lo = 1; lo <= 4; ++lo)
    for (int64_t hi = lo; hi <= 4; ++hi) types.push_back({lo, hi});
  osp::testing::for_each_multiset(
      types, 7,
      [&](const std::vector<std::pair<int64_t, int64_t>>& jobs,
          const std::vector<size_t>& pick) {
        std::map<size_t, int64_t> mult;
        for (size_t t : pick) mult[t] += 1;
        for (int64_t cap = 1; cap <= 3; ++cap) {
          auto [count, proc] = osp::testing::unit_oracle(jobs, cap);
          std::vector<UnitJobInterval> units;
          int id = 1;
          for (auto& [t, m] : mult)
            units.push_back({types[t].first, types[t].second, m, id++});
          auto r = gac_plus(units, cap);
          c.expect(r.batch_count == count && r.total_proc == proc,
                   "mismatch on a multiset of size " +
                       std::to_string(jobs.size()) + ", capacity " +
                       std::to_string(cap));
        }
      });
  return c;
}

Check bound_soundness(const std::vector<Instance>& family,
                      const std::vector<SolveResult>& oracle) {
  Check c;
  for (size_t i = 0; i < family.size(); ++i) {
    if (oracle[i].status != SolveStatus::OPTIMAL) continue;
    auto rep = bound_report(family[i], {});
    const auto& comp = oracle[i].obj.components;
    std::string tag = "instance " + std::to_string(i);
    c.expect(rep.batch_count_lb <= int64_t(oracle[i].schedule.batches.size()),
             tag + ": batch count bound unsound");
    c.expect(rep.proc_time_lb <= comp.proc_time,
             tag + ": processing time bound unsound");
    c.expect(rep.setup_cost_lb <= comp.setup_cost,
             tag + ": setup cost bound unsound");
    c.expect(rep.tardy_lb <= comp.tardy_count, tag + ": tardy bound unsound");
    c.expect(rep.obj_lb <= oracle[i].obj.obj_real,
             tag + ": objective bound unsound");
  }
  return c;
}

Check heuristic_family(const std::vector<Instance>& family) {
  Check c;
  for (size_t i = 0; i < family.size(); ++i) {
    auto start = Clock::now();
    std::string tag = "instance " + std::to_string(i);
    try {
      Schedule s = construct(family[i]);
      c.expect(validate_schedule(family[i], s).feasible(),
               tag + ": schedule infeasible");
    } catch (const Unschedulable& ex) {
      c.expect(false, tag + ": " + ex.what());
    }
    double elapsed = seconds_since(start);
    c.expect(elapsed < 6.0,
             tag + " took " + std::to_string(elapsed) + " s");
  }
  return c;
}

Check bound_speed(const std::vector<Instance>& family) {
  Check c;
  for (size_t i = 0; i < family.size(); ++i) {
    if (family[i].num_jobs() != 100) continue;
    auto start = Clock::now();
    auto rep = bound_report(family[i], {});
    double elapsed = seconds_since(start);
    c.expect(rep.batch_count_lb >= 1, "degenerate bound report");
    c.expect(elapsed < 2.0, "instance " + std::to_string(i) + " took " +
                                std::to_string(elapsed) + " s");
  }
  return c;
}

Check mutation_suite() {
  Check c;
  for (uint64_t seed = 0; seed < 100; ++seed) {
    auto fx = osp::testing::mutation_fixture(seed);
    std::string tag = "seed " + std::to_string(seed);
    c.expect(validate_schedule(fx.instance, fx.schedule).feasible(),
             tag + ": baseline schedule infeasible");
    for (ViolationCode code : osp::testing::kConstraintCodes) {
      auto rep =
          validate_schedule(fx.instance, osp::testing::mutate(fx, code));
      c.expect(rep.has(code), tag + ": mutation missed its code");
      for (const auto& v : rep.violations)
        c.expect(v.code == code, tag + ": mutation leaked another code");
    }
  }
  return c;
}

Check round_trips() {
  Check c;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    GeneratorParams p;
    p.job_count = 5;
    p.release_spread = (seed % 4) * 0.25;
    p.attribute_count = (seed % 2) ? 5 : 2;
    p.seed = seed;
    Instance inst = generate(p);
    std::string tag = "seed " + std::to_string(seed);

    std::string text = serialize_instance(inst);
    c.expect(serialize_instance(parse_instance(text)) == text,
             tag + ": instance round trip not byte-identical");

    Schedule s;
    try {
      s = construct(inst);
    } catch (const Unschedulable& ex) {
      s = ex.partial.schedule;  // any schedule document exercises the format
    }
    std::string sched = serialize_schedule(s, instance_content_hash(inst));
    auto [back, ref] = parse_schedule(sched);
    c.expect(serialize_schedule(back, ref) == sched,
             tag + ": schedule round trip not byte-identical");
  }
  return c;
}

}  // namespace

int main() {
  std::vector<Instance> small = small_family();
  std::vector<Instance> bench = benchmark_family();
  std::vector<SolveResult> oracle;

  struct Criterion {
    const char* name;
    double budget;  // seconds
    Check result;
    double elapsed;
  };
  std::vector<Criterion> rows;

  auto run = [&](const char* name, double budget, auto&& fn) {
    auto start = Clock::now();
    Check c = fn();
    rows.push_back({name, budget, std::move(c), seconds_since(start)});
  };

  run("golden bounds on the 10-job instance", 1.0, golden_bounds);
  run("golden optimum on the 10-job instance", 600.0, golden_optimum);
  run("frozen optimum on the 6-job instance", 60.0, frozen_small_optimum);
  run("oracle equivalence on 100 small instances", 900.0,
      [&] { return oracle_equivalence(small, oracle); });
  run("greedy unit batching is exactly optimal", 300.0, gac_optimality);
  run("bounds are sound against the oracle", 900.0,
      [&] { return bound_soundness(small, oracle); });
  run("heuristic solves the 80-instance family", 480.0,
      [&] { return heuristic_family(bench); });
  run("bound report under 2 s at n = 100", 60.0,
      [&] { return bound_speed(bench); });
  run("mutations trigger exactly their own code", 60.0, mutation_suite);
  run("1000-seed file round trips", 120.0, round_trips);

  bool all_ok = true;
  for (size_t i = 0; i < rows.size(); ++i) {
    auto& r = rows[i];
    bool ok = r.result.ok && r.elapsed < r.budget;
    all_ok = all_ok && ok;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": "
         << r.name << " (" << std::fixed;
    line.precision(2);
    line << r.elapsed << " s)";
    if (!r.result.ok) line << " — " << r.result.detail;
    else if (!ok) line << " — over the " << r.budget << " s budget";
    std::puts(line.str().c_str());
  }
  return all_ok ? 0 : 1;
}
