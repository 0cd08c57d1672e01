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

#include "tvscone/cone_metric.hpp"
#include "tvscone/error.hpp"
#include "tvscone/ordered_space.hpp"

namespace tvscone {
namespace {

void require_probes(const Cone& cone, std::span<const Vector> probes, double margin) {
  if (probes.empty()) throw Error(ErrorCode::kInvalidArgument, "probe family is empty");
  for (const auto& c : probes) {
    if (!cone.strictly_contains(c, margin)) {
      throw Error(ErrorCode::kNotInterior, "probe " + c.to_string() + " is not interior to " + cone.label());
    }
  }
}

void require_tail(std::span<const Vector> sequence, std::size_t tail_index) {
  if (tail_index < 1 || tail_index > sequence.size()) {
    throw Error(ErrorCode::kInvalidArgument, "tail index " + std::to_string(tail_index) +
                                                 " outside 1.." + std::to_string(sequence.size()));
  }
}

}  // namespace

std::vector<Vector> default_probes(const Vector& e) {
  std::vector<Vector> probes;
  for (double j : {1.0, 2.0, 4.0, 8.0, 16.0}) probes.push_back((1.0 / j) * e);
  return probes;
}

std::vector<Vector> dyadic_probes(const Vector& e, std::size_t levels) {
  std::vector<Vector> probes;
  double scale = 0.5;
  for (std::size_t j = 1; j <= levels; ++j, scale *= 0.5) probes.push_back(scale * e);
  return probes;
}

bool detect_cone_convergence(const ConeMetricSpace& space, std::span<const Vector> sequence, const Vector& limit,
                             std::span<const Vector> probes, std::size_t tail_index, double margin) {
  const Cone& cone = space.value_cone();
  require_probes(cone, probes, margin);
  require_tail(sequence, tail_index);
  for (std::size_t n = tail_index - 1; n < sequence.size(); ++n) {
    const Vector d = space.p(sequence[n], limit);
    for (const auto& c : probes) {
      if (!order_ll(cone, d, c, margin)) return false;
    }
  }
  return true;
}

bool detect_cone_cauchy(const ConeMetricSpace& space, std::span<const Vector> sequence,
                        std::span<const Vector> probes, std::size_t tail_index, double margin) {
  const Cone& cone = space.value_cone();
  require_probes(cone, probes, margin);
  require_tail(sequence, tail_index);
  for (std::size_t n = tail_index - 1; n < sequence.size(); ++n) {
    for (std::size_t m = n + 1; m < sequence.size(); ++m) {
      const Vector d = space.p(sequence[n], sequence[m]);
      for (const auto& c : probes) {
        if (!order_ll(cone, d, c, margin)) return false;
      }
    }
  }
  return true;
}

std::optional<std::size_t> cone_tail_entry(const ConeMetricSpace& space, std::span<const Vector> sequence,
                                           const Vector& limit, const Vector& probe, double margin) {
  const Cone& cone = space.value_cone();
  require_probes(cone, std::span<const Vector>(&probe, 1), margin);
  std::optional<std::size_t> entry;
  for (std::size_t n = sequence.size(); n-- > 0;) {
    if (!order_ll(cone, space.p(sequence[n], limit), probe, margin)) break;
    entry = n + 1;
  }
  return entry;
}

bool ball_membership(const ConeMetricSpace& space, const Vector& center, const Vector& radius, const Vector& point,
                     bool closed, double tol, double margin) {
  const Cone& cone = space.value_cone();
  if (!cone.strictly_contains(radius, margin)) {
    throw Error(ErrorCode::kNotInterior, "ball radius " + radius.to_string() + " is not interior");
  }
  const Vector d = space.p(center, point);
  return closed ? order_leq(cone, d, radius, tol) : order_ll(cone, d, radius, margin);
}

}  // namespace tvscone
