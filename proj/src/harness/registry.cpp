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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "suites.hpp"
#include "tvscone/error.hpp"
#include "tvscone/harness.hpp"
#include "tvscone/random.hpp"
#include "tvscone/seminorm.hpp"

namespace tvscone {

void SuiteConfig::validate() const {
  sample.validate();
  auto positive = [](std::size_t v, const char* field) {
    if (v == 0) throw Error(ErrorCode::kInvalidArgument, std::string(field) + " must be >= 1");
  };
  positive(sequences, "sequences");
  positive(sequence_length, "sequence_length");
  positive(probe_levels, "probe_levels");
  positive(bounded_sets, "bounded_sets");
  positive(solver_instances, "solver_instances");
  positive(orbits, "orbits");
  positive(truncation, "truncation");
  if (sequence_length < 8) throw Error(ErrorCode::kInvalidArgument, "sequence_length must be >= 8");
  if (probe_levels > 40) throw Error(ErrorCode::kInvalidArgument, "probe_levels must be <= 40");
  if (rates.empty()) throw Error(ErrorCode::kInvalidArgument, "rates must not be empty");
  for (double r : rates) {
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::kInvalidArgument, "rates must lie in (0, 1)");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(ErrorCode::kInvalidArgument, "epsilon must be > 0");
  if (!(tol > 0.0 && tol <= 1e-3)) throw Error(ErrorCode::kInvalidArgument, "tol must be in (0, 1e-3]");
  if (!(margin > 0.0)) throw Error(ErrorCode::kInvalidArgument, "margin must be > 0");
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* SuiteReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> registry{
      {"scalarization", "properties of the nonlinear scalarization", suites::scalarization},
      {"metric-axioms", "induced scalar metrics d_p and d_S", suites::metric_axioms},
      {"convergence-transfer", "cone convergence versus d_p convergence", suites::convergence_transfer},
      {"topology-compare", "d_S topology versus the cone metric topology", suites::topology_compare},
      {"continuity", "joint continuity of the cone metric", suites::continuity},
      {"closed-ball", "closed balls are closed", suites::closed_ball},
      {"boundedness", "diameters of bounded sets", suites::boundedness},
      {"fixed-point", "contraction fixed point theorems", suites::fixed_point},
      {"omega-example", "the omega space example", suites::omega_example},
  };
  return registry;
}

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& s : suite_registry()) ids.push_back(s.id);
  return ids;
}

const std::vector<std::string>& required_results() {
  static const std::vector<std::string> results{
      "properties of the nonlinear scalarization",
      "induced scalar metrics d_p and d_S",
      "cone convergence versus d_p convergence",
      "d_S topology versus the cone metric topology",
      "joint continuity of the cone metric",
      "closed balls are closed",
      "diameters of bounded sets",
      "contraction fixed point theorems",
      "the omega space example",
  };
  return results;
}

std::vector<std::string> registry_coverage_gaps() {
  std::vector<std::string> gaps;
  for (const auto& result : required_results()) {
    const auto& reg = suite_registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const SuiteEntry& s) { return s.result == result; })) {
      gaps.push_back(result);
    }
  }
  return gaps;
}

namespace {

const SuiteEntry& lookup(std::string_view suite_id) {
  for (const auto& s : suite_registry()) {
    if (s.id == suite_id) return s;
  }
  std::string available;
  for (const auto& id : suite_ids()) available += (available.empty() ? "" : ", ") + id;
  throw Error(ErrorCode::kUnknownSuite, "unknown suite '" + std::string(suite_id) + "'; available: " + available);
}

}  // namespace

std::vector<SampledCheck> suite_checks(std::string_view suite_id, const SuiteConfig& config) {
  const SuiteEntry& entry = lookup(suite_id);
  config.validate();
  return entry.build(config);
}

SuiteReport run_suite(std::string_view suite_id, const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto checks = suite_checks(suite_id, config);
  SuiteReport report;
  report.suite_id = std::string(suite_id);
  report.seed = config.sample.seed;
  report.budgets = {{"samples", config.sample.count},
                    {"sequences", config.sequences},
                    {"sequence_length", config.sequence_length},
                    {"probe_levels", config.probe_levels},
                    {"bounded_sets", config.bounded_sets},
                    {"solver_instances", config.solver_instances},
                    {"orbits", config.orbits}};
  report.checks = run_checks(checks).checks;
  report.config_digest = config_digest(config);
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SuiteReport> run_all_suites(const SuiteConfig& config) {
  std::vector<SuiteReport> reports;
  for (const auto& id : suite_ids()) reports.push_back(run_suite(id, config));
  return reports;
}

double replay_check(std::string_view suite_id, const SuiteConfig& config, std::string_view check_name,
                    const SampleInputs& inputs) {
  for (const auto& c : suite_checks(suite_id, config)) {
    if (c.name == check_name) return replay(c, inputs);
  }
  throw Error(ErrorCode::kInvalidArgument,
              "suite " + std::string(suite_id) + " has no check named " + std::string(check_name));
}

OmegaDemo omega_demo(double epsilon, std::size_t truncation) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(ErrorCode::kInvalidArgument, "epsilon must be > 0");
  if (truncation == 0) throw Error(ErrorCode::kInvalidArgument, "truncation must be >= 1");
  const SeminormFamily family = SeminormFamily::coordinate(truncation);
  std::vector<double> spike(truncation, 0.0);
  spike[0] = epsilon;
  const Vector c(std::move(spike));
  OmegaDemo demo;
  demo.epsilon = epsilon;
  demo.truncation = truncation;
  demo.h_c = family.h(c);
  demo.h_interior = family.h(Vector::filled(truncation, epsilon));
  demo.tail_bound = std::ldexp(1.0, -static_cast<int>(truncation));
  demo.pass = demo.h_c < epsilon && demo.h_interior < epsilon;
  return demo;
}

std::string config_digest(const SuiteConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(config_json(config).dump())));
  return buf;
}

}  // namespace tvscone
