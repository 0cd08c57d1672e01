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

#include <cmath>

#include "tvscone/harness.hpp"

namespace tvscone {
namespace {

using Json = nlohmann::ordered_json;

// JSON has no infinities; they are written as strings.
Json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

Json check_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["max_violation"] = number(c.max_violation);
  j["tolerance"] = number(c.tolerance);
  j["evaluated"] = c.evaluated;
  if (c.counterexample) {
    Json ce;
    ce["index"] = c.counterexample_index.value_or(0);
    ce["vectors"] = Json::array();
    for (const auto& v : c.counterexample->vectors) ce["vectors"].push_back(vector_json(v));
    ce["scalars"] = Json::array();
    for (double s : c.counterexample->scalars) ce["scalars"].push_back(number(s));
    j["counterexample"] = std::move(ce);
  } else {
    j["counterexample"] = nullptr;
  }
  Json metrics = Json::object();
  for (const auto& [k, v] : c.metrics) metrics[k] = number(v);
  j["metrics"] = std::move(metrics);
  return j;
}

}  // namespace

nlohmann::ordered_json config_json(const SuiteConfig& config) {
  Json j;
  j["seed"] = config.sample.seed;
  j["count"] = config.sample.count;
  j["range"] = {config.sample.lo, config.sample.hi};
  j["dimensions"] = config.sample.dimensions;
  j["sequences"] = config.sequences;
  j["sequence_length"] = config.sequence_length;
  j["rates"] = config.rates;
  j["probe_levels"] = config.probe_levels;
  j["bounded_sets"] = config.bounded_sets;
  j["solver_instances"] = config.solver_instances;
  j["orbits"] = config.orbits;
  j["epsilon"] = config.epsilon;
  j["truncation"] = config.truncation;
  j["tol"] = config.tol;
  j["margin"] = config.margin;
  Json contexts = Json::array();
  for (const auto& ctx : config.extra_contexts) {
    contexts.push_back({{"cone", ctx.cone().label()}, {"e", vector_json(ctx.e())}, {"tol", ctx.tol()}});
  }
  j["extra_contexts"] = std::move(contexts);
  Json spaces = Json::array();
  for (const auto& s : config.extra_spaces) spaces.push_back(s.label());
  j["extra_spaces"] = std::move(spaces);
  return j;
}

nlohmann::ordered_json report_json(const SuiteReport& report, bool include_wall_time) {
  Json j;
  j["suite_id"] = report.suite_id;
  j["passed"] = report.passed();
  j["seed"] = report.seed;
  Json budgets = Json::object();
  for (const auto& [k, v] : report.budgets) budgets[k] = v;
  j["budgets"] = std::move(budgets);
  j["checks"] = Json::array();
  for (const auto& c : report.checks) j["checks"].push_back(check_json(c));
  j["config_digest"] = report.config_digest;
  if (include_wall_time) j["wall_time"] = report.wall_time;
  return j;
}

std::string to_json(const SuiteReport& report, bool include_wall_time) {
  return report_json(report, include_wall_time).dump(2);
}

std::string to_json(const std::vector<SuiteReport>& reports, bool include_wall_time) {
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(report_json(r, include_wall_time));
  return j.dump(2);
}

}  // namespace tvscone
