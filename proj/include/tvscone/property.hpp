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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tvscone/vector.hpp"

namespace tvscone {

// How sampled checks draw their inputs. Identical specs give identical streams.
struct SampleSpec {
  std::size_t count = 10000;
  std::uint64_t seed = 20100517;
  double lo = -10.0;
  double hi = 10.0;
  std::vector<std::size_t> dimensions{1, 2, 3, 4, 5, 6, 7, 8};

  // Throws kInvalidArgument when count == 0, lo >= hi, or a dimension is 0.
  void validate() const;
};

// The concrete inputs of one sample, kept generic so any check can be
// serialized and replayed.
struct SampleInputs {
  std::vector<Vector> vectors;
  std::vector<double> scalars;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  // Largest observed defect, clamped below at 0. A sample fails when its
  // defect exceeds `tolerance` (or is NaN).
  double max_violation = 0.0;
  double tolerance = 0.0;
  std::size_t evaluated = 0;
  std::optional<std::uint64_t> counterexample_index;
  std::optional<SampleInputs> counterexample;
  std::map<std::string, double> metrics;
};

struct SampledCheck {
  std::string name;
  std::size_t count = 0;
  double tolerance = 0.0;
  std::function<SampleInputs(std::uint64_t index)> generate;
  std::function<double(const SampleInputs&)> defect;
  // Optional summary statistics computed from all samples' inputs after the run.
  std::function<void(CheckResult&)> finalize;
};

CheckResult run_check(const SampledCheck& check);

// Evaluates the defect of a single (possibly reported) sample.
double replay(const SampledCheck& check, const SampleInputs& inputs);
bool reproduces_failure(const SampledCheck& check, const SampleInputs& inputs);

struct PropertyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(std::string_view name) const;
  std::vector<std::string> failed_names() const;
};

// Runs checks concurrently; results keep the input order.
PropertyReport run_checks(std::span<const SampledCheck> checks);

// A check over a fixed list of hand-built cases.
SampledCheck fixed_case_check(std::string name, std::vector<SampleInputs> cases, double tolerance,
                              std::function<double(const SampleInputs&)> defect);

inline double defect_of(bool ok) { return ok ? 0.0 : 1.0; }

}  // namespace tvscone
