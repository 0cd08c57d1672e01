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

#include "tvscone/property.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <future>
#include <limits>
#include <thread>
#include <memory>

#include "tvscone/error.hpp"

namespace tvscone {

void SampleSpec::validate() const {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "sample count must be >= 1");
  if (!(lo < hi)) throw Error(ErrorCode::kInvalidArgument, "sample range needs lo < hi");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw Error(ErrorCode::kInvalidArgument, "sample range not finite");
  for (std::size_t d : dimensions) {
    if (d == 0) throw Error(ErrorCode::kInvalidArgument, "sample dimension must be positive");
  }
}

namespace {

bool fails(double defect, double tolerance) { return std::isnan(defect) || defect > tolerance; }

}  // namespace

CheckResult run_check(const SampledCheck& check) {
  CheckResult result;
  result.name = check.name;
  result.tolerance = check.tolerance;
  for (std::uint64_t i = 0; i < check.count; ++i) {
    SampleInputs inputs = check.generate(i);
    double d = check.defect(inputs);
    ++result.evaluated;
    if (std::isnan(d)) {
      result.max_violation = std::numeric_limits<double>::infinity();
    } else {
      result.max_violation = std::max(result.max_violation, d);
    }
    if (fails(d, check.tolerance) && result.passed) {
      result.passed = false;
      result.counterexample_index = i;
      result.counterexample = std::move(inputs);
    }
  }
  if (check.finalize) check.finalize(result);
  return result;
}

double replay(const SampledCheck& check, const SampleInputs& inputs) { return check.defect(inputs); }

bool reproduces_failure(const SampledCheck& check, const SampleInputs& inputs) {
  return fails(replay(check, inputs), check.tolerance);
}

bool PropertyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* PropertyReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> PropertyReport::failed_names() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

PropertyReport run_checks(std::span<const SampledCheck> checks) {
  PropertyReport report;
  report.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) report.checks[i] = run_check(checks[i]);
  };
  std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  workers = std::min(workers, checks.size());
  std::vector<std::future<void>> pending;
  for (std::size_t w = 0; w < workers; ++w) pending.push_back(std::async(std::launch::async, worker));
  for (auto& f : pending) f.get();
  return report;
}

SampledCheck fixed_case_check(std::string name, std::vector<SampleInputs> cases, double tolerance,
                              std::function<double(const SampleInputs&)> defect) {
  auto shared = std::make_shared<const std::vector<SampleInputs>>(std::move(cases));
  SampledCheck check;
  check.name = std::move(name);
  check.count = shared->size();
  check.tolerance = tolerance;
  check.generate = [shared](std::uint64_t i) { return (*shared)[i]; };
  check.defect = std::move(defect);
  return check;
}

}  // namespace tvscone
