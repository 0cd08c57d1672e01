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
#include <cmath>

#include "suites.hpp"

namespace tvscone::suites {

SampledCheck sampled(std::string name, std::size_t count, std::uint64_t seed, double tolerance, Generator generate,
                     Defect defect) {
  SampledCheck c;
  c.name = std::move(name);
  c.count = count;
  c.tolerance = tolerance;
  SampleStream stream(seed, c.name);
  c.generate = [stream, generate = std::move(generate)](std::uint64_t i) {
    auto d = stream.at(i);
    return generate(d);
  };
  c.defect = std::move(defect);
  return c;
}

double exclusion(const Cone& cone, const Vector& v) {
  return std::max(0.0, -cone.slack(v)) / std::max(1.0, v.max_norm());
}

Vector orthant_direction(std::size_t dim) {
  std::vector<double> e(dim);
  for (std::size_t i = 0; i < dim; ++i) e[i] = 1.0 + 0.25 * static_cast<double>(i % 4);
  return Vector(std::move(e));
}

std::size_t sequence_length(const SuiteConfig& config, double rate) {
  const double needed = static_cast<double>(config.probe_levels + 8) * std::log(2.0) / -std::log(rate);
  return std::max(config.sequence_length, static_cast<std::size_t>(std::ceil(needed)));
}

}  // namespace tvscone::suites
