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
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tvscone/cone.hpp"
#include "tvscone/property.hpp"
#include "tvscone/scalarization.hpp"
#include "tvscone/seminorm.hpp"
#include "tvscone/vector.hpp"

namespace tvscone {

// p(x, y)_i = |x_i - y_i|, valued in the orthant of the same dimension.
struct ComponentwiseAbs {};

// p(x, y)_i = w_i |x_i - y_i| with w_i > 0.
struct WeightedComponentwise {
  Vector weights;
};

// A finite point set with an explicit symmetric table of cone-valued distances.
struct FiniteTable {
  std::vector<Vector> points;
  std::vector<std::vector<Vector>> table;
};

using MetricKind = std::variant<ComponentwiseAbs, WeightedComponentwise, FiniteTable>;

// A set X (a subset of R^m) with a vector-valued metric p into an ordered
// space (R^n, P).
class ConeMetricSpace {
 public:
  static ConeMetricSpace componentwise_abs(std::size_t dim);
  static ConeMetricSpace weighted(Vector weights);
  // Checks every pair and triple of the table against the metric axioms and
  // throws kAxiomViolated naming the first failure.
  static ConeMetricSpace finite_table(Cone value_cone, std::vector<Vector> points,
                                      std::vector<std::vector<Vector>> table, double tol = 1e-12);

  std::size_t point_dim() const noexcept { return point_dim_; }
  const Cone& value_cone() const noexcept { return value_cone_; }
  const MetricKind& kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return std::holds_alternative<FiniteTable>(kind_); }
  // Points of a finite space; empty for continuous spaces.
  std::span<const Vector> points() const;
  std::string label() const;

  // Throws kDimensionMismatch or kUnknownPoint for points outside X.
  Vector p(const Vector& x, const Vector& y) const;

 private:
  ConeMetricSpace(std::size_t point_dim, Cone value_cone, MetricKind kind)
      : point_dim_(point_dim), value_cone_(std::move(value_cone)), kind_(std::move(kind)) {}

  std::size_t index_of(const Vector& x) const;

  std::size_t point_dim_;
  Cone value_cone_;
  MetricKind kind_;
};

Vector p_eval(const ConeMetricSpace& space, const Vector& x, const Vector& y);

// d_p = xi_e o p. Throws kConeMismatch if ctx is over a different cone.
double dp_eval(const ConeMetricSpace& space, const ScalarizationContext& ctx, const Vector& x, const Vector& y);

// d_S(x, y) = inf { h(u) : p(x, y) <= u, u in P } = h(p(x, y)) for a monotone
// family on the orthant order, where the infimum is attained at u = p(x, y).
// Throws kMonotonicityRequired or kUnsupportedOrder outside that setting.
double dS_eval(const ConeMetricSpace& space, const SeminormFamily& family, const Vector& x, const Vector& y);

// The probe family {e / j : j = 1, 2, 4, 8, 16} standing in for "every c >> 0".
std::vector<Vector> default_probes(const Vector& e);
// {e / 2^j : j = 1..levels}
std::vector<Vector> dyadic_probes(const Vector& e, std::size_t levels);

// True iff p(x_n, limit) << c for every probe c and every n >= tail_index.
// Indices are 1-based: sequence[0] is x_1. Requires 1 <= tail_index <= length.
bool detect_cone_convergence(const ConeMetricSpace& space, std::span<const Vector> sequence, const Vector& limit,
                             std::span<const Vector> probes, std::size_t tail_index,
                             double margin = kDefaultMargin);

// True iff p(x_n, x_m) << c for every probe c and all n, m >= tail_index.
bool detect_cone_cauchy(const ConeMetricSpace& space, std::span<const Vector> sequence,
                        std::span<const Vector> probes, std::size_t tail_index, double margin = kDefaultMargin);

// Smallest 1-based index from which p(x_n, limit) << c holds through the end
// of the sequence, or nullopt if the last term already fails.
std::optional<std::size_t> cone_tail_entry(const ConeMetricSpace& space, std::span<const Vector> sequence,
                                           const Vector& limit, const Vector& probe,
                                           double margin = kDefaultMargin);

struct DiameterReport {
  // Least upper bound of all pairwise p values; present only on the orthant.
  std::optional<Vector> delta;
  // delta_q[k] = max over pairs of q_k(p(x, y)), one entry per family member.
  std::vector<double> delta_q;
  bool bounded_above = false;
  std::optional<Vector> witness_bound;
};

// On the orthant the witness is delta + (1,..,1). On other cones a finite set
// is still bounded above, by (max xi_w(p) + 1) w for the interior witness w.
DiameterReport diameter(const ConeMetricSpace& space, std::span<const Vector> points,
                        const SeminormFamily& family);

// Closed ball: p(center, point) <= radius (with slack tol); open ball:
// p(center, point) << radius. Throws kNotInterior unless 0 << radius.
bool ball_membership(const ConeMetricSpace& space, const Vector& center, const Vector& radius, const Vector& point,
                     bool closed, double tol = 0.0, double margin = kDefaultMargin);

// Sampled (or, for finite tables, exhaustive) checks of the four metric axioms.
std::vector<SampledCheck> metric_axiom_checks(const ConeMetricSpace& space, const SampleSpec& spec);
PropertyReport check_metric_axioms(const ConeMetricSpace& space, const SampleSpec& spec);

// Sequences as CSV: a header "x1,...,xm" then one vector per row.
std::vector<Vector> read_sequence_csv(std::istream& in);
void write_sequence_csv(std::ostream& out, std::span<const Vector> sequence);

}  // namespace tvscone
