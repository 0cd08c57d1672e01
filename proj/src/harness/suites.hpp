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

#include <functional>
#include <string>
#include <vector>

#include "tvscone/cone.hpp"
#include "tvscone/harness.hpp"
#include "tvscone/random.hpp"

namespace tvscone::suites {

using Generator = std::function<SampleInputs(SampleStream::Draw&)>;
using Defect = std::function<double(const SampleInputs&)>;

SampledCheck sampled(std::string name, std::size_t count, std::uint64_t seed, double tolerance, Generator generate,
                     Defect defect);

// Distance of v from P relative to max(1, |v|_inf); 0 for members.
double exclusion(const Cone& cone, const Vector& v);

// The interior direction used for an orthant of the given dimension:
// e_i = 1 + (i mod 4) / 4.
Vector orthant_direction(std::size_t dim);

// Length of a constructed sequence x + rate^n v long enough for rate^n to fall
// 2^-(levels + 8) below its start.
std::size_t sequence_length(const SuiteConfig& config, double rate);

std::vector<SampledCheck> scalarization(const SuiteConfig& config);
std::vector<SampledCheck> metric_axioms(const SuiteConfig& config);
std::vector<SampledCheck> convergence_transfer(const SuiteConfig& config);
std::vector<SampledCheck> topology_compare(const SuiteConfig& config);
std::vector<SampledCheck> continuity(const SuiteConfig& config);
std::vector<SampledCheck> closed_ball(const SuiteConfig& config);
std::vector<SampledCheck> boundedness(const SuiteConfig& config);
std::vector<SampledCheck> fixed_point(const SuiteConfig& config);
std::vector<SampledCheck> omega_example(const SuiteConfig& config);

}  // namespace tvscone::suites
