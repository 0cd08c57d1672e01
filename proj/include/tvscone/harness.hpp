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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tvscone/cone_metric.hpp"
#include "tvscone/property.hpp"
#include "tvscone/scalarization.hpp"

namespace tvscone {

struct SuiteConfig {
  // Budget and stream for the algebraic identities.
  SampleSpec sample;
  // Constructed sequences per rate, and their minimum length.
  std::size_t sequences = 100;
  std::size_t sequence_length = 64;
  std::vector<double> rates{0.5, 0.9, 0.99};
  // Convergence is probed with {e / 2^j : j = 1..probe_levels}.
  std::size_t probe_levels = 12;
  std::size_t bounded_sets = 50;
  std::size_t solver_instances = 50;
  std::size_t orbits = 20;
  // Parameters of the omega example.
  double epsilon = 0.1;
  std::size_t truncation = 20;
  double tol = kDefaultTol;
  double margin = kDefaultMargin;
  // Instances from a loaded configuration, checked alongside the built-in ones.
  std::vector<ScalarizationContext> extra_contexts;
  std::vector<ConeMetricSpace> extra_spaces;

  // Throws kInvalidArgument for empty budgets or rates outside (0, 1).
  void validate() const;
};

struct SuiteReport {
  std::string suite_id;
  std::uint64_t seed = 0;
  std::map<std::string, std::size_t> budgets;
  std::vector<CheckResult> checks;
  std::string config_digest;
  double wall_time = 0.0;

  bool passed() const;
  const CheckResult* find(std::string_view name) const;
};

struct SuiteEntry {
  std::string id;
  // The result the suite exercises, in words.
  std::string result;
  std::function<std::vector<SampledCheck>(const SuiteConfig&)> build;
};

const std::vector<SuiteEntry>& suite_registry();
std::vector<std::string> suite_ids();

// Results that must each be covered by a registered suite.
const std::vector<std::string>& required_results();
// Required results without a suite; empty when coverage is complete.
std::vector<std::string> registry_coverage_gaps();

// Throws kUnknownSuite (listing the registered ids) for an unknown id.
std::vector<SampledCheck> suite_checks(std::string_view suite_id, const SuiteConfig& config);
SuiteReport run_suite(std::string_view suite_id, const SuiteConfig& config);
std::vector<SuiteReport> run_all_suites(const SuiteConfig& config);

// Re-evaluates one check of a suite on the given inputs and returns its defect.
double replay_check(std::string_view suite_id, const SuiteConfig& config, std::string_view check_name,
                    const SampleInputs& inputs);

// h(c) for the omega model truncated at N coordinates, with c = (epsilon, 0, ...)
// and the interior variant c = epsilon (1, ..., 1).
struct OmegaDemo {
  double epsilon = 0.0;
  std::size_t truncation = 0;
  double h_c = 0.0;
  double h_interior = 0.0;
  double tail_bound = 0.0;
  bool pass = false;
};

OmegaDemo omega_demo(double epsilon, std::size_t truncation);

// JSON text of a report. wall_time is written last so that callers comparing
// payloads can drop it.
std::string config_digest(const SuiteConfig& config);
nlohmann::ordered_json config_json(const SuiteConfig& config);
nlohmann::ordered_json report_json(const SuiteReport& report, bool include_wall_time = true);
std::string to_json(const SuiteReport& report, bool include_wall_time = true);
std::string to_json(const std::vector<SuiteReport>& reports, bool include_wall_time = true);

}  // namespace tvscone
