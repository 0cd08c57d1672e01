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
#include "tvscone/random.hpp"

namespace tvscone {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double exclusion(const Cone& cone, const Vector& v) {
  return std::max(0.0, -cone.slack(v)) / std::max(1.0, v.max_norm());
}

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

ConeMetricSpace ConeMetricSpace::componentwise_abs(std::size_t dim) {
  return ConeMetricSpace(dim, Cone::orthant(dim), ComponentwiseAbs{});
}

ConeMetricSpace ConeMetricSpace::weighted(Vector weights) {
  for (double w : weights) {
    if (!(w > 0.0)) throw Error(ErrorCode::kInvalidArgument, "metric weights must be > 0");
  }
  const std::size_t dim = weights.dim();
  return ConeMetricSpace(dim, Cone::orthant(dim), WeightedComponentwise{std::move(weights)});
}

ConeMetricSpace ConeMetricSpace::finite_table(Cone value_cone, std::vector<Vector> points,
                                              std::vector<std::vector<Vector>> table, double tol) {
  const std::size_t k = points.size();
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "finite table space needs at least one point");
  const std::size_t m = points.front().dim();
  for (const auto& x : points) {
    if (x.dim() != m) throw Error(ErrorCode::kDimensionMismatch, "finite table points differ in dimension");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (points[i] == points[j]) {
        throw Error(ErrorCode::kInvalidArgument, "finite table lists point " + std::to_string(i) + " twice");
      }
    }
  }
  if (table.size() != k) throw Error(ErrorCode::kDimensionMismatch, "distance table must be k x k");
  for (const auto& row : table) {
    if (row.size() != k) throw Error(ErrorCode::kDimensionMismatch, "distance table must be k x k");
    for (const auto& v : row) {
      if (v.dim() != value_cone.dim()) {
        throw Error(ErrorCode::kDimensionMismatch, "distance table entry does not match the value cone");
      }
    }
  }
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kAxiomViolated, what); };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Vector& pij = table[i][j];
      if (!value_cone.contains(pij, tol)) fail("M1: p" + pair_name(i, j) + " is not in P");
      if (i == j && pij.max_norm() != 0.0) fail("M2: p" + pair_name(i, i) + " is nonzero");
      if (i != j && pij.max_norm() <= tol) fail("M2: p" + pair_name(i, j) + " vanishes for distinct points");
      if ((pij - table[j][i]).max_norm() > tol) fail("M3: p" + pair_name(i, j) + " != p" + pair_name(j, i));
      for (std::size_t l = 0; l < k; ++l) {
        if (!value_cone.contains(table[i][l] + table[l][j] - pij, tol)) {
          fail("M4: p" + pair_name(i, j) + " exceeds p" + pair_name(i, l) + " + p" + pair_name(l, j));
        }
      }
    }
  }
  return ConeMetricSpace(m, std::move(value_cone), FiniteTable{std::move(points), std::move(table)});
}

std::span<const Vector> ConeMetricSpace::points() const {
  if (const auto* t = std::get_if<FiniteTable>(&kind_)) return t->points;
  return {};
}

std::string ConeMetricSpace::label() const {
  return std::visit(Overloaded{[&](const ComponentwiseAbs&) { return "abs" + std::to_string(point_dim_); },
                               [&](const WeightedComponentwise&) { return "weighted" + std::to_string(point_dim_); },
                               [&](const FiniteTable& t) { return "table" + std::to_string(t.points.size()); }},
                    kind_);
}

std::size_t ConeMetricSpace::index_of(const Vector& x) const {
  const auto& pts = std::get<FiniteTable>(kind_).points;
  auto it = std::find(pts.begin(), pts.end(), x);
  if (it == pts.end()) throw Error(ErrorCode::kUnknownPoint, x.to_string() + " is not a point of " + label());
  return static_cast<std::size_t>(it - pts.begin());
}

Vector ConeMetricSpace::p(const Vector& x, const Vector& y) const {
  if (x.dim() != point_dim_ || y.dim() != point_dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "points must have dimension " + std::to_string(point_dim_));
  }
  return std::visit(Overloaded{[&](const ComponentwiseAbs&) { return abs(x - y); },
                               [&](const WeightedComponentwise& w) { return hadamard(w.weights, abs(x - y)); },
                               [&](const FiniteTable& t) { return t.table[index_of(x)][index_of(y)]; }},
                    kind_);
}

Vector p_eval(const ConeMetricSpace& space, const Vector& x, const Vector& y) { return space.p(x, y); }

double dp_eval(const ConeMetricSpace& space, const ScalarizationContext& ctx, const Vector& x, const Vector& y) {
  if (!(ctx.cone() == space.value_cone())) {
    throw Error(ErrorCode::kConeMismatch,
                "context cone " + ctx.cone().label() + " differs from value cone " + space.value_cone().label());
  }
  return xi(ctx, space.p(x, y));
}

double dS_eval(const ConeMetricSpace& space, const SeminormFamily& family, const Vector& x, const Vector& y) {
  if (!family.monotone()) {
    throw Error(ErrorCode::kMonotonicityRequired, "d_S needs a monotone seminorm family");
  }
  if (space.value_cone().kind() != ConeKind::kOrthant) {
    throw Error(ErrorCode::kUnsupportedOrder, "d_S is computed only for the orthant order, not " +
                                                  space.value_cone().label());
  }
  return family.h(space.p(x, y));
}

std::vector<SampledCheck> metric_axiom_checks(const ConeMetricSpace& space, const SampleSpec& spec) {
  spec.validate();
  const std::string prefix = space.label() + ":";
  const Cone cone = space.value_cone();
  std::vector<SampledCheck> checks;

  // Every check takes the triple (x, y, z).
  auto m1 = [space, cone](const SampleInputs& in) { return exclusion(cone, space.p(in.vectors[0], in.vectors[1])); };
  auto m2 = [space](const SampleInputs& in) {
    const Vector& x = in.vectors[0];
    const Vector& y = in.vectors[1];
    const bool self_zero = space.p(x, x).max_norm() == 0.0;
    const bool separates = x == y || space.p(x, y).max_norm() > 0.0;
    return defect_of(self_zero && separates);
  };
  auto m3 = [space](const SampleInputs& in) {
    return (space.p(in.vectors[0], in.vectors[1]) - space.p(in.vectors[1], in.vectors[0])).max_norm();
  };
  auto m4 = [space, cone](const SampleInputs& in) {
    const Vector& x = in.vectors[0];
    const Vector& y = in.vectors[1];
    const Vector& z = in.vectors[2];
    return exclusion(cone, space.p(x, z) + space.p(z, y) - space.p(x, y));
  };

  if (space.is_finite()) {
    const auto pts = space.points();
    std::vector<SampleInputs> triples;
    for (const auto& x : pts) {
      for (const auto& y : pts) {
        for (const auto& z : pts) triples.push_back(SampleInputs{{x, y, z}, {}});
      }
    }
    checks.push_back(fixed_case_check(prefix + "nonnegative", triples, 1e-12, m1));
    checks.push_back(fixed_case_check(prefix + "identity", triples, 0.0, m2));
    checks.push_back(fixed_case_check(prefix + "symmetry", triples, 0.0, m3));
    checks.push_back(fixed_case_check(prefix + "triangle", triples, 1e-12, m4));
    return checks;
  }

  auto add = [&](const std::string& name, double tolerance, std::function<double(const SampleInputs&)> defect) {
    SampledCheck c;
    c.name = prefix + name;
    c.count = spec.count;
    c.tolerance = tolerance;
    SampleStream stream(spec.seed, c.name);
    c.generate = [stream, m = space.point_dim(), lo = spec.lo, hi = spec.hi](std::uint64_t i) {
      auto d = stream.at(i);
      Vector x = d.vector(m, lo, hi);
      // One sample in sixteen repeats x to exercise the diagonal.
      Vector y = d.index_below(16) == 0 ? x : d.vector(m, lo, hi);
      return SampleInputs{{x, y, d.vector(m, lo, hi)}, {}};
    };
    c.defect = std::move(defect);
    checks.push_back(std::move(c));
  };
  add("nonnegative", 1e-12, m1);
  add("identity", 0.0, m2);
  add("symmetry", 0.0, m3);
  add("triangle", 1e-12, m4);
  return checks;
}

PropertyReport check_metric_axioms(const ConeMetricSpace& space, const SampleSpec& spec) {
  auto checks = metric_axiom_checks(space, spec);
  return run_checks(checks);
}

}  // namespace tvscone
