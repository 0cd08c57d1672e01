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

#include <optional>

#include "tvscone/cone.hpp"
#include "tvscone/property.hpp"
#include "tvscone/vector.hpp"

namespace tvscone {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kDefaultMargin = 1e-9;

// A cone together with an interior direction e and a working tolerance.
class ScalarizationContext {
 public:
  // Throws kNotInterior unless e is strictly inside the cone (margin
  // kDefaultMargin) and kInvalidArgument unless tol is in (0, 1e-3].
  ScalarizationContext(Cone cone, Vector e, double tol = kDefaultTol);

  const Cone& cone() const noexcept { return cone_; }
  const Vector& e() const noexcept { return e_; }
  double tol() const noexcept { return tol_; }

 private:
  Cone cone_;
  Vector e_;
  double tol_;
};

// xi_e(y) = inf { t : y in t e - P }.
//
// Orthant: max_i y_i / e_i. Polyhedral: max_j (a_j . y) / (a_j . e) over the
// constraint rows. Lorentz: the larger root of the quadratic obtained by
// squaring the membership condition of t e - y, validated by substitution and
// replaced by bisection when the discriminant degenerates.
double xi(const ScalarizationContext& ctx, const Vector& y);

// Independent oracle: doubling search from t = 0 for a bracket on which the
// membership y in t e - P flips, then bisection down to width ctx.tol().
// Throws kBracketNotFound after 200 doublings.
double xi_bisection(const ScalarizationContext& ctx, const Vector& y);

// Runs every sampled property of xi_e on ctx: level-set membership on both
// sides of xi, the interior variants, positive homogeneity, local stability,
// monotonicity, subadditivity, strict monotonicity, and agreement with the
// bisection oracle. Check names are prefixed with the cone label.
PropertyReport check_scalarization_properties(const ScalarizationContext& ctx, const SampleSpec& sampler);
std::vector<SampledCheck> scalarization_checks(const ScalarizationContext& ctx, const SampleSpec& sampler);

// A pair y1 >= y2, y1 != y2, y1 - y2 on the boundary of P, with
// xi(y1) == xi(y2). Exists on the orthant for n >= 2; nullopt otherwise.
struct MonotonicityWitness {
  Vector y1;
  Vector y2;
  double xi_y1 = 0.0;
  double xi_y2 = 0.0;
};
std::optional<MonotonicityWitness> non_strong_monotonicity_witness(const ScalarizationContext& ctx);

}  // namespace tvscone
