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

#include "tvscone/error.hpp"
#include "tvscone/ordered_space.hpp"

namespace tvscone {

bool cone_contains(const Cone& cone, const Vector& v, double tol) { return cone.contains(v, tol); }

bool cone_strictly_contains(const Cone& cone, const Vector& v, double margin) {
  return cone.strictly_contains(v, margin);
}

bool order_leq(const Cone& cone, const Vector& x, const Vector& y, double tol) {
  require_same_dim(x, y, "order_leq");
  return cone.contains(y - x, tol);
}

bool order_ll(const Cone& cone, const Vector& x, const Vector& y, double margin) {
  require_same_dim(x, y, "order_ll");
  return cone.strictly_contains(y - x, margin);
}

Vector least_upper_bound(const Cone& cone, std::span<const Vector> points) {
  if (cone.kind() != ConeKind::kOrthant) {
    throw Error(ErrorCode::kNotStronglyMinihedral, cone.label() + " has no least upper bounds in general");
  }
  if (points.empty()) throw Error(ErrorCode::kInvalidArgument, "least upper bound of an empty set");
  std::vector<double> out(points.front().begin(), points.front().end());
  for (const auto& p : points) {
    if (p.dim() != cone.dim()) throw Error(ErrorCode::kDimensionMismatch, "point dimension differs from cone");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], p[i]);
  }
  return Vector(std::move(out));
}

Vector sample_in_cone(const Cone& cone, SampleStream::Draw& draw, double scale) {
  const std::size_t n = cone.dim();
  switch (cone.kind()) {
    case ConeKind::kOrthant: {
      std::vector<double> v(n);
      // Roughly one coordinate in eight lands on the boundary.
      for (double& x : v) x = draw.index_below(8) == 0 ? 0.0 : draw.uniform(0.0, scale);
      return Vector(std::move(v));
    }
    case ConeKind::kLorentz: {
      std::vector<double> v(n);
      double norm = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        v[i] = draw.uniform(-scale, scale);
        norm = std::hypot(norm, v[i]);
      }
      v[n - 1] = norm + (draw.index_below(8) == 0 ? 0.0 : draw.uniform(0.0, scale));
      return Vector(std::move(v));
    }
    case ConeKind::kPolyhedral: {
      for (int attempt = 0; attempt < 64; ++attempt) {
        Vector v = draw.vector(n, -scale, scale);
        if (cone.contains(v, 0.0)) return v;
      }
      return draw.uniform(0.0, scale) * cone.interior_witness();
    }
  }
  return Vector::zeros(n);
}

Vector sample_in_interior(const Cone& cone, SampleStream::Draw& draw, double scale) {
  const std::size_t n = cone.dim();
  switch (cone.kind()) {
    case ConeKind::kOrthant: {
      std::vector<double> v(n);
      for (double& x : v) x = draw.uniform(0.05 * scale, scale);
      return Vector(std::move(v));
    }
    case ConeKind::kLorentz: {
      std::vector<double> v(n);
      double norm = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        v[i] = draw.uniform(-scale, scale);
        norm = std::hypot(norm, v[i]);
      }
      v[n - 1] = norm + draw.uniform(0.05 * scale, scale);
      return Vector(std::move(v));
    }
    case ConeKind::kPolyhedral: {
      const double witness_slack = cone.slack(cone.interior_witness());
      for (int attempt = 0; attempt < 64; ++attempt) {
        Vector v = draw.vector(n, -scale, scale);
        const double norm = v.max_norm();
        if (norm > 0.0 && cone.slack(v) >= 0.1 * witness_slack * norm) return v;
      }
      return draw.uniform(0.05 * scale, scale) * cone.interior_witness();
    }
  }
  return Vector::zeros(n);
}

}  // namespace tvscone
