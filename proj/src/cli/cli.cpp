/*
 Copyright 2026 The tvscone Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "tvscone/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "tvscone/cone_metric.hpp"
#include "tvscone/config.hpp"
#include "tvscone/error.hpp"
#include "tvscone/fixed_point.hpp"
#include "tvscone/harness.hpp"
#include "tvscone/ordered_space.hpp"
#include "tvscone/scalarization.hpp"

namespace tvscone {
namespace {

using Json = nlohmann::ordered_json;

Json number(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

Json property_json(const PropertyReport& report) {
  SuiteReport wrapped;
  wrapped.checks = report.checks;
  return report_json(wrapped, false)["checks"];
}

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::size_t> max_iter;
  std::string point;
  std::string x;
  std::string y;
  std::string trace;
  std::string out;
  std::string method;
  std::string suite_id;
  std::string sequence;
  std::string limit;
  std::size_t tail = 1;
  std::size_t budget = 10000;
  double epsilon = 0.1;
  std::size_t truncate = 20;
};

InstanceConfig load(const Options& o) {
  InstanceConfig cfg = o.config.empty() ? default_config() : load_config(o.config);
  if (o.seed) cfg.suite.sample.seed = *o.seed;
  if (o.tol) {
    if (!(*o.tol > 0.0)) throw Error(ErrorCode::kConfig, "field '--tol': must be > 0");
    cfg.solver.tol = *o.tol;
  }
  if (o.max_iter) {
    if (*o.max_iter == 0) throw Error(ErrorCode::kConfig, "field '--max-iter': must be >= 1");
    cfg.solver.max_iter = *o.max_iter;
    cfg.solver.budget = *o.max_iter;
  }
  return cfg;
}

Vector vector_arg(const std::string& text, const std::string& flag, std::size_t dim) {
  if (text.empty()) throw Error(ErrorCode::kConfig, "field '" + flag + "': missing");
  Vector v;
  try {
    v = parse_vector(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfig, "field '" + flag + "': " + e.what());
  }
  if (v.dim() != dim) {
    throw Error(ErrorCode::kConfig, "field '" + flag + "': expected " + std::to_string(dim) + " entries");
  }
  return v;
}

void stamp(Json& j, const InstanceConfig& cfg) {
  j["seed"] = cfg.suite.sample.seed;
  j["config_digest"] = cfg.digest;
}

int cmd_xi(const Options& o, Json& j) {
  const InstanceConfig cfg = load(o);
  const auto ctx = cfg.context();
  const Vector y = vector_arg(o.point, "--point", cfg.cone.dim());
  j["xi"] = number(xi(ctx, y));
  j["cone"] = cfg.cone.label();
  j["e"] = vector_json(cfg.e);
  stamp(j, cfg);
  return kExitOk;
}

int cmd_dist(const Options& o, Json& j) {
  const InstanceConfig cfg = load(o);
  const auto& space = cfg.require_space();
  const Vector x = vector_arg(o.x, "--x", space.point_dim());
  const Vector y = vector_arg(o.y, "--y", space.point_dim());
  j["p"] = vector_json(space.p(x, y));
  j["d_p"] = number(dp_eval(space, cfg.context(), x, y));
  if (space.value_cone().kind() == ConeKind::kOrthant && cfg.family.monotone()) {
    j["d_S"] = number(dS_eval(space, cfg.family, x, y));
    j["h_variant"] = cfg.h_variant;
  }
  stamp(j, cfg);
  return kExitOk;
}

int cmd_solve(const Options& o, Json& j) {
  const InstanceConfig cfg = load(o);
  const auto& space = cfg.require_space();
  const auto& map = cfg.require_map();
  const auto ctx = cfg.context();
  const Vector x0 = cfg.solver.x0 ? *cfg.solver.x0 : Vector::zeros(space.point_dim());
  std::optional<SeminormFamily> family;
  if (space.value_cone().kind() == ConeKind::kOrthant && cfg.family.monotone()) family = cfg.family;

  SolveOptions options;
  options.tol = cfg.solver.tol;
  options.max_iter = cfg.solver.max_iter;
  options.sampler = cfg.suite.sample;
  options.sampler.count = std::min<std::size_t>(options.sampler.count, 2000);
  options.trace_family = family;

  FixedPointReport report;
  if (o.method == "banach") {
    const double k = cfg.solver.k ? *cfg.solver.k : map.lipschitz_bound();
    if (!(k < 1.0)) throw Error(ErrorCode::kConfig, "field 'solver.k': the map is not a contraction (k = " + std::to_string(k) + ")");
    j["k"] = k;
    report = banach_solve(space, ctx, map, k, x0, options);
  } else if (o.method == "boyd-wong") {
    report = boyd_wong_solve(space, ctx, map, cfg.require_varphi(), x0, options);
  } else {
    report = weak_contraction_iterate(space, ctx, map, cfg.require_varphi(), x0, cfg.solver.budget, cfg.solver.stop_tol,
                                      family);
  }

  j["method"] = o.method;
  j["converged"] = report.converged;
  j["iterations"] = report.iterations;
  j["final_point"] = vector_json(report.final_point);
  j["final_residual"] = report.residual_history.empty() ? Json(nullptr) : number(report.residual_history.back());
  j["contraction_estimate"] = number(report.contraction_estimate);
  j["certificate"] = to_string(report.certificate);
  j["failure_step"] = report.failure_step ? Json(*report.failure_step) : Json(nullptr);
  j["hypothesis_failure"] = report.hypothesis_failure ? Json(*report.hypothesis_failure) : Json(nullptr);
  stamp(j, cfg);

  if (!o.trace.empty()) {
    std::ofstream trace(o.trace);
    if (!trace) throw Error(ErrorCode::kConfig, "field '--trace': cannot write " + o.trace);
    write_trace_csv(trace, report);
    j["trace"] = o.trace;
  }
  const bool ok = o.method == "weak" ? report.certificate == Certificate::kWeakContractionMonotone : report.converged;
  return ok ? kExitOk : kExitFailure;
}

int cmd_suite(const Options& o, Json& j) {
  const InstanceConfig cfg = load(o);
  const auto start = std::chrono::steady_clock::now();
  std::vector<SuiteReport> reports;
  if (o.suite_id == "all") {
    reports = run_all_suites(cfg.suite);
  } else {
    reports.push_back(run_suite(o.suite_id, cfg.suite));
  }
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  j["suite_id"] = o.suite_id;
  j["passed"] = passed;
  j["seed"] = cfg.suite.sample.seed;
  j["config_digest"] = cfg.digest;
  j["suite_config_digest"] = config_digest(cfg.suite);
  j["config"] = config_json(cfg.suite);
  j["suites"] = Json::array();
  for (const auto& r : reports) j["suites"].push_back(report_json(r));
  j["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return passed ? kExitOk : kExitFailure;
}

int cmd_demo_omega(const Options& o, Json& j) {
  const OmegaDemo demo = omega_demo(o.epsilon, o.truncate);
  j["h_c"] = demo.h_c;
  j["epsilon"] = demo.epsilon;
  j["truncation"] = demo.truncation;
  j["h_interior"] = demo.h_interior;
  j["tail_bound"] = demo.tail_bound;
  j["pass"] = demo.pass;
  return demo.pass ? kExitOk : kExitFailure;
}

int cmd_validate(const Options& o, Json& j) {
  const InstanceConfig cfg = load(o);
  const auto cone_report = validate_cone(cfg.cone, o.budget, cfg.suite.sample.seed);
  j["cone"] = cfg.cone.label();
  j["rank"] = cone_report.rank;
  j["interior_witness"] = vector_json(cone_report.interior_witness);
  j["e"] = vector_json(cfg.e);
  j["cone_checks"] = property_json(cone_report.checks);
  bool passed = cone_report.passed();
  if (cfg.space) {
    SampleSpec spec = cfg.suite.sample;
    spec.count = o.budget;
    const auto axioms = check_metric_axioms(*cfg.space, spec);
    j["space"] = cfg.space->label();
    j["space_checks"] = property_json(axioms);
    passed = passed && axioms.passed();
  }
  j["passed"] = passed;
  stamp(j, cfg);
  return passed ? kExitOk : kExitFailure;
}

int cmd_detect(const Options& o, Json& j) {
  const InstanceConfig cfg = load(o);
  const auto& space = cfg.require_space();
  std::ifstream in(o.sequence);
  if (!in) throw Error(ErrorCode::kConfig, "field '--sequence': cannot open " + o.sequence);
  std::vector<Vector> seq;
  try {
    seq = read_sequence_csv(in);
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfig, std::string("field '--sequence': ") + e.what());
  }
  if (seq.empty()) throw Error(ErrorCode::kConfig, "field '--sequence': no rows");
  for (const auto& x : seq) {
    if (x.dim() != space.point_dim()) throw Error(ErrorCode::kConfig, "field '--sequence': wrong dimension");
  }
  j["length"] = seq.size();
  j["tail_index"] = o.tail;
  j["probes"] = Json::array();
  for (const auto& c : cfg.probes) j["probes"].push_back(vector_json(c));
  if (!o.limit.empty()) {
    const Vector limit = vector_arg(o.limit, "--limit", space.point_dim());
    j["converges"] = detect_cone_convergence(space, seq, limit, cfg.probes, o.tail, cfg.margin);
  }
  j["cauchy"] = detect_cone_cauchy(space, seq, cfg.probes, o.tail, cfg.margin);
  stamp(j, cfg);
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cone metric spaces: scalarization, induced metrics, fixed points and property suites", "tvscone"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config, "instance configuration (TOML)");
    sub->add_option("--seed", o.seed, "override sample.seed");
  };

  auto* xi_cmd = app.add_subcommand("xi", "evaluate xi_e at a point");
  add_common(xi_cmd);
  xi_cmd->add_option("--point", o.point, "comma-separated vector")->required();

  auto* dist_cmd = app.add_subcommand("dist", "d_p and d_S between two points");
  add_common(dist_cmd);
  dist_cmd->add_option("--x", o.x, "first point")->required();
  dist_cmd->add_option("--y", o.y, "second point")->required();

  auto* solve_cmd = app.add_subcommand("solve", "iterate a map to its fixed point");
  add_common(solve_cmd);
  solve_cmd->add_option("method", o.method, "banach | boyd-wong | weak")
      ->required()
      ->check(CLI::IsMember({"banach", "boyd-wong", "weak"}));
  solve_cmd->add_option("--trace", o.trace, "write residuals as CSV");
  solve_cmd->add_option("--tol", o.tol, "override solver.tol");
  solve_cmd->add_option("--max-iter", o.max_iter, "override solver.max_iter");

  auto* suite_cmd = app.add_subcommand("suite", "run a property suite");
  add_common(suite_cmd);
  suite_cmd->add_option("suite", o.suite_id, "suite id or 'all'")->required();
  suite_cmd->add_option("--out", o.out, "also write the report to this file");

  auto* omega_cmd = app.add_subcommand("demo-omega", "the truncated omega space example");
  omega_cmd->add_option("--epsilon", o.epsilon, "epsilon");
  omega_cmd->add_option("--truncate", o.truncate, "number of coordinates N");

  auto* validate_cmd = app.add_subcommand("validate", "validate the cone and the space");
  add_common(validate_cmd);
  validate_cmd->add_option("--budget", o.budget, "samples per check");

  auto* detect_cmd = app.add_subcommand("detect", "test a CSV sequence for cone convergence");
  add_common(detect_cmd);
  detect_cmd->add_option("--sequence", o.sequence, "CSV with header x1,...,xm")->required();
  detect_cmd->add_option("--limit", o.limit, "candidate limit");
  detect_cmd->add_option("--tail", o.tail, "1-based tail index M");

  std::vector<std::string> storage{"tvscone"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  Json j;
  int code = kExitOk;
  try {
    if (xi_cmd->parsed()) {
      code = cmd_xi(o, j);
    } else if (dist_cmd->parsed()) {
      code = cmd_dist(o, j);
    } else if (solve_cmd->parsed()) {
      code = cmd_solve(o, j);
    } else if (suite_cmd->parsed()) {
      code = cmd_suite(o, j);
    } else if (omega_cmd->parsed()) {
      code = cmd_demo_omega(o, j);
    } else if (validate_cmd->parsed()) {
      code = cmd_validate(o, j);
    } else {
      code = cmd_detect(o, j);
    }
  } catch (const Error& e) {
    const bool config = e.code() == ErrorCode::kConfig || e.code() == ErrorCode::kUnknownSuite ||
                        e.code() == ErrorCode::kInvalidArgument || e.code() == ErrorCode::kDimensionMismatch ||
                        e.code() == ErrorCode::kNotInterior;
    err << "error: " << e.what() << '\n';
    Json failure;
    failure["error"] = to_string(e.code());
    failure["message"] = e.what();
    out << failure.dump(2) << '\n';
    return config ? kExitConfig : kExitFailure;
  }

  const std::string text = j.dump(2);
  out << text << '\n';
  if (!o.out.empty()) {
    std::ofstream file(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << '\n';
      return kExitConfig;
    }
    file << text << '\n';
  }
  return code;
}

}  // namespace tvscone
