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

DiameterReport diameter(const ConeMetricSpace& space, std::span<const Vector> points, const SeminormFamily& family) {
  if (points.empty()) throw Error(ErrorCode::kInvalidArgument, "diameter of an empty set");
  const Cone& cone = space.value_cone();

  std::vector<Vector> distances;
  distances.reserve(points.size() * points.size());
  for (const auto& x : points) {
    for (const auto& y : points) distances.push_back(space.p(x, y));
  }

  DiameterReport report;
  report.delta_q.assign(family.members().size(), 0.0);
  for (const auto& d : distances) {
    for (std::size_t k = 0; k < family.members().size(); ++k) {
      report.delta_q[k] = std::max(report.delta_q[k], family.members()[k](d));
    }
  }

  if (cone.kind() == ConeKind::kOrthant) {
    report.delta = least_upper_bound(cone, distances);
    report.witness_bound = *report.delta + Vector::filled(cone.dim(), 1.0);
    report.bounded_above = true;
    return report;
  }

  const ScalarizationContext ctx(cone, cone.interior_witness());
  double level = 0.0;
  for (const auto& d : distances) level = std::max(level, xi(ctx, d));
  report.witness_bound = (level + 1.0) * cone.interior_witness();
  report.bounded_above = true;
  return report;
}

}  // namespace tvscone
