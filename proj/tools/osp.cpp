#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "osp/bounds.hpp"
#include "osp/gen.hpp"
#include "osp/heuristic.hpp"
#include "osp/io.hpp"
#include "osp/lp_export.hpp"
#include "osp/objective.hpp"
#include "osp/solve.hpp"
#include "osp/validate.hpp"

namespace {

// sysexits-style codes; 1/2 carry the semantic results
constexpr int kInfeasible = 1;
constexpr int kBadParams = 2;
constexpr int kUsage = 64;
constexpr int kData = 65;

struct CliError {
  int code;
  std::string message;
};

osp::Instance load_instance(const std::string& path) {
  try {
    return osp::parse_instance(osp::read_file(path));
  } catch (const osp::ParseError& e) {
    throw CliError{kData, path + ": " + e.what()};
  }
}

osp::Schedule load_schedule(const std::string& path) {
  try {
    return osp::parse_schedule(osp::read_file(path)).first;
  } catch (const osp::ParseError& e) {
    throw CliError{kData, path + ": " + e.what()};
  }
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    osp::write_file(path, content);
}

osp::ObjectiveWeights parse_weights(const std::string& text) {
  osp::ObjectiveWeights w;
  if (text.empty()) return w;
  int64_t vals[3];
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    size_t comma = i < 2 ? text.find(',', pos) : text.size();
    if (comma == std::string::npos)
      throw CliError{kUsage, "--weights expects three comma-separated integers"};
    try {
      vals[i] = std::stoll(text.substr(pos, comma - pos));
    } catch (const std::exception&) {
      throw CliError{kUsage, "--weights expects three comma-separated integers"};
    }
    pos = comma + 1;
  }
  w = {vals[0], vals[1], vals[2]};
  if (!w.valid())
    throw CliError{kUsage, "--weights must be non-negative with a positive sum"};
  return w;
}

int workers_from_env() {
  const char* raw = std::getenv("OSP_WORKERS");
  if (!raw) return 1;
  int v = std::atoi(raw);
  return v >= 1 ? v : 1;
}

void apply_params_file(osp::GeneratorParams& p, const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(osp::read_file(path));
  } catch (const std::exception& e) {
    throw CliError{kData, path + ": " + e.what()};
  }
  if (!doc.is_object()) throw CliError{kData, path + ": not a JSON object"};
  for (const auto& item : doc.items()) {
    const auto& key = item.key();
    const auto& v = item.value();
    try {
      if (key == "n") p.job_count = v.get<int64_t>();
      else if (key == "max_T") p.max_proc = v.get<int64_t>();
      else if (key == "max_time") p.max_time = v.get<bool>();
      else if (key == "rho") p.release_spread = v.get<double>();
      else if (key == "phi") p.due_factor = v.get<double>();
      else if (key == "sigma") p.extra_machine_prob = v.get<double>();
      else if (key == "max_job_size") p.max_job_size = v.get<int64_t>();
      else if (key == "a") p.attribute_count = v.get<int>();
      else if (key == "setup_time_type" || key == "setup_cost_type") {
        auto t = osp::setup_matrix_type_from(v.get<std::string>());
        if (!t) throw CliError{kBadParams, "unknown setup matrix type"};
        (key == "setup_time_type" ? p.setup_time_type : p.setup_cost_type) = *t;
      } else if (key == "k") p.machine_count = v.get<int>();
      else if (key == "min_C") p.min_capacity = v.get<int64_t>();
      else if (key == "max_C") p.max_capacity = v.get<int64_t>();
      else if (key == "tau") p.min_available_fraction = v.get<double>();
      else if (key == "max_I") p.max_intervals = v.get<int>();
      else throw CliError{kData, path + ": unknown parameter '" + key + "'"};
    } catch (const nlohmann::json::exception& e) {
      throw CliError{kData, path + ": " + key + ": " + e.what()};
    }
  }
}

void print_report(const osp::Instance& inst, const osp::ObjectiveReport& rep) {
  std::cout << "p = " << rep.components.proc_time << "\n"
            << "sc = " << rep.components.setup_cost << "\n"
            << "t = " << rep.components.tardy_count << "\n"
            << "obj_int = " << rep.obj_scaled << "\n"
            << "obj_real = " << osp::to_decimal(rep.obj_real) << " ("
            << rep.obj_real.numerator() << "/" << rep.obj_real.denominator()
            << ")\n";
  (void)inst;
}

int cmd_generate(const osp::GeneratorParams& params, const std::string& out) {
  osp::Instance inst;
  try {
    inst = osp::generate(params);
  } catch (const osp::BadParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadParams;
  }
  emit(out, osp::serialize_instance(inst));
  return 0;
}

int cmd_validate(const std::string& instance_path,
                 const std::string& schedule_path, bool as_json) {
  osp::Instance inst = load_instance(instance_path);
  osp::ViolationReport report = osp::validate_instance(inst);
  if (report.feasible() && !schedule_path.empty())
    report = osp::validate_schedule(inst, load_schedule(schedule_path));

  if (as_json) {
    nlohmann::ordered_json doc;
    doc["feasible"] = report.feasible();
    doc["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
      nlohmann::ordered_json jv;
      jv["code"] = osp::to_string(v.code);
      jv["batch"] = v.batch;
      jv["job"] = v.job;
      jv["detail"] = v.detail;
      doc["violations"].push_back(std::move(jv));
    }
    doc["warnings"] = report.warnings;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
    for (const auto& v : report.violations) {
      std::cout << osp::to_string(v.code);
      if (v.batch >= 0) std::cout << " batch " << v.batch;
      if (v.job >= 0) std::cout << " job " << v.job;
      std::cout << ": " << v.detail << "\n";
    }
    std::cout << (report.feasible() ? "feasible" : "infeasible") << "\n";
  }
  return report.feasible() ? 0 : kInfeasible;
}

int cmd_bounds(const std::string& instance_path,
               const osp::ObjectiveWeights& weights) {
  osp::Instance inst = load_instance(instance_path);
  osp::BoundReport rep = osp::bound_report(inst, weights);
  for (const auto& ab : rep.per_attribute)
    std::cout << "attr " << ab.attribute << ": large = " << ab.large_count
              << " b_E = " << ab.count_eligibility
              << " b_C = " << ab.count_compat
              << " p_large = " << ab.large_proc
              << " p_E = " << ab.proc_eligibility
              << " p_C = " << ab.proc_compat
              << " cap = " << ab.simple_cap_count << "\n";
  std::cout << "b = " << rep.batch_count_lb << "\n"
            << "p = " << rep.proc_time_lb << "\n"
            << "sc = " << rep.setup_cost_lb << "\n"
            << "t = " << rep.tardy_lb << "\n"
            << "obj_lb = " << osp::to_decimal(rep.obj_lb) << " ("
            << rep.obj_lb.numerator() << "/" << rep.obj_lb.denominator()
            << ")\n";
  if (!rep.unschedulable_jobs.empty()) {
    std::cout << "unschedulable jobs:";
    for (int j : rep.unschedulable_jobs) std::cout << " " << j;
    std::cout << "\n";
  }
  return 0;
}

int cmd_solve(const std::string& instance_path, const std::string& method,
              double time_limit, bool warm_start,
              const osp::ObjectiveWeights& weights, const std::string& out) {
  osp::Instance inst = load_instance(instance_path);
  (void)workers_from_env();  // solver is sequential; accepted for forward compat

  osp::SolveResult result;
  if (method == "heuristic") {
    auto t0 = std::chrono::steady_clock::now();
    try {
      result.schedule = osp::construct(inst);
    } catch (const osp::Unschedulable& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInfeasible;
    }
    result.elapsed = std::chrono::steady_clock::now() - t0;
    result.obj = osp::objective(inst, result.schedule, weights);
    result.status = osp::SolveStatus::FEASIBLE;
    result.lower_bound = 0;
  } else if (method == "oracle") {
    try {
      result = osp::brute_force(inst, weights);
    } catch (const osp::TooLarge& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kBadParams;
    }
  } else {  // bnb
    osp::BnbOptions opts;
    opts.weights = weights;
    opts.time_limit = std::chrono::duration<double>(time_limit);
    if (warm_start) {
      try {
        opts.incumbent = osp::construct(inst);
      } catch (const osp::Unschedulable&) {
        // no warm start available; the search decides feasibility itself
      }
    }
    result = osp::branch_and_bound(inst, opts);
  }

  std::cout << "status = " << osp::to_string(result.status) << "\n";
  if (result.status != osp::SolveStatus::INFEASIBLE) {
    print_report(inst, result.obj);
    std::cout << "lower_bound = " << osp::to_decimal(result.lower_bound)
              << "\n";
  }
  std::cout << "nodes = " << result.nodes << "\n"
            << "elapsed = " << result.elapsed.count() << "\n";

  if (result.status == osp::SolveStatus::INFEASIBLE) return kInfeasible;
  if (!out.empty())
    osp::write_file(out, osp::serialize_schedule(
                             result.schedule, osp::instance_content_hash(inst)));
  return 0;
}

int cmd_export(const std::string& instance_path,
               const osp::ObjectiveWeights& weights, const std::string& out) {
  osp::Instance inst = load_instance(instance_path);
  try {
    emit(out, osp::export_ilp(inst, weights));
  } catch (const osp::Unsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadParams;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oven scheduling toolkit"};
  app.require_subcommand(1);

  osp::GeneratorParams params;
  std::string params_file, out_path, weights_text;
  std::string instance_path, schedule_path, method = "bnb";
  double time_limit = 3600.0;
  bool warm_start = false, as_json = false;
  uint64_t seed = 0;

  auto* gen = app.add_subcommand("generate", "Generate a random instance");
  gen->add_option("--seed", seed, "PRNG seed")->required();
  gen->add_option("--params", params_file, "JSON file with generator settings");
  gen->add_option("-n,--jobs", params.job_count);
  gen->add_option("--max-proc", params.max_proc);
  gen->add_flag("--fixed-maxt{false}", params.max_time,
                "Use maxt = max-proc for every job");
  gen->add_option("--release-spread", params.release_spread);
  gen->add_option("--due-factor", params.due_factor);
  gen->add_option("--extra-machine-prob", params.extra_machine_prob);
  gen->add_option("--max-job-size", params.max_job_size);
  gen->add_option("-a,--attributes", params.attribute_count);
  gen->add_option("-k,--machines", params.machine_count);
  gen->add_option("--min-capacity", params.min_capacity);
  gen->add_option("--max-capacity", params.max_capacity);
  gen->add_option("--min-available", params.min_available_fraction);
  gen->add_option("--max-intervals", params.max_intervals);
  std::string st_type, sc_type;
  gen->add_option("--setup-time-type", st_type,
                  "constant|arbitrary|realistic|symmetric");
  gen->add_option("--setup-cost-type", sc_type,
                  "constant|arbitrary|realistic|symmetric");
  gen->add_option("-o,--output", out_path, "Output path (default stdout)");

  auto* val = app.add_subcommand("validate", "Check an instance or schedule");
  val->add_option("instance", instance_path)->required();
  val->add_option("schedule", schedule_path);
  val->add_flag("--json", as_json, "Machine-readable report");

  auto* bnd = app.add_subcommand("bounds", "Compute lower bounds");
  bnd->add_option("instance", instance_path)->required();
  bnd->add_option("--weights", weights_text, "w_p,w_sc,w_t (default 4,1,100)");

  auto* slv = app.add_subcommand("solve", "Construct or search for schedules");
  slv->add_option("instance", instance_path)->required();
  slv->add_option("--method", method, "heuristic|bnb|oracle")
      ->check(CLI::IsMember({"heuristic", "bnb", "oracle"}));
  slv->add_option("--time-limit", time_limit, "Seconds (bnb only)");
  slv->add_flag("--warm-start", warm_start, "Seed bnb with the heuristic");
  slv->add_option("--weights", weights_text, "w_p,w_sc,w_t (default 4,1,100)");
  slv->add_option("-o,--output", out_path, "Schedule output path");

  auto* exp = app.add_subcommand("export-ilp", "Write the integer model");
  exp->add_option("instance", instance_path)->required();
  exp->add_option("--weights", weights_text, "w_p,w_sc,w_t (default 4,1,100)");
  exp->add_option("-o,--output", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) {
      if (!params_file.empty()) apply_params_file(params, params_file);
      params.seed = seed;
      if (!st_type.empty()) {
        auto t = osp::setup_matrix_type_from(st_type);
        if (!t) throw CliError{kUsage, "unknown --setup-time-type"};
        params.setup_time_type = *t;
      }
      if (!sc_type.empty()) {
        auto t = osp::setup_matrix_type_from(sc_type);
        if (!t) throw CliError{kUsage, "unknown --setup-cost-type"};
        params.setup_cost_type = *t;
      }
      return cmd_generate(params, out_path);
    }
    osp::ObjectiveWeights weights = parse_weights(weights_text);
    if (*val) return cmd_validate(instance_path, schedule_path, as_json);
    if (*bnd) return cmd_bounds(instance_path, weights);
    if (*slv)
      return cmd_solve(instance_path, method, time_limit, warm_start, weights,
                       out_path);
    return cmd_export(instance_path, weights, out_path);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
}
