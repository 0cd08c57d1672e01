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
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tvscone/cone_metric.hpp"
#include "tvscone/property.hpp"
#include "tvscone/scalarization.hpp"
#include "tvscone/seminorm.hpp"
#include "tvscone/vector.hpp"

namespace tvscone {

// Solvers iterate in extended precision so that residual ratios stay
// meaningful down to the stopping tolerance.
using Extended = long double;

// Self-maps T of X from a closed catalog.
class MapDescriptor {
 public:
  enum class Kind { kDiagonalAffine, kCoordinateRatio, kClippedQuadratic, kComposite };

  // T x = a (.) x + b
  static MapDescriptor diagonal_affine(Vector a, Vector b);
  static MapDescriptor identity(std::size_t dim);
  // s -> s / (1 + s) per coordinate, on the nonnegative orthant.
  static MapDescriptor coordinate_ratio();
  // s -> c - c^2 / 2 with c = clamp(s, 0, 1), per coordinate.
  static MapDescriptor clipped_quadratic();
  // Applies the maps in list order.
  static MapDescriptor composite(std::vector<MapDescriptor> maps);

  Kind kind() const noexcept { return kind_; }
  const Vector& a() const noexcept { return a_; }
  const Vector& b() const noexcept { return b_; }
  const std::vector<MapDescriptor>& parts() const noexcept { return parts_; }
  std::string label() const;

  // Dimension required of inputs, if the map fixes one.
  std::optional<std::size_t> fixed_dim() const;
  bool in_domain(std::span<const double> x) const;
  // Projects an arbitrary sample point into the map's domain.
  Vector project_to_domain(const Vector& x) const;

  template <class Real>
  std::vector<Real> apply(std::span<const Real> x) const;
  Vector operator()(const Vector& x) const;

  // Known Lipschitz modulus for the componentwise metric: max |a_i| for affine
  // maps, 1 for the ratio and clipped maps, the product for composites.
  double lipschitz_bound() const;

 private:
  explicit MapDescriptor(Kind kind) : kind_(kind) {}

  Kind kind_;
  Vector a_;
  Vector b_;
  std::vector<MapDescriptor> parts_;
};

// Order maps phi: P -> P.
class VarphiDescriptor {
 public:
  enum class Kind { kScale, kCoordinateRatio, kHalfSquare };

  // phi(u) = alpha u, alpha >= 0
  static VarphiDescriptor scale(double alpha);
  // phi(u)_i = u_i / (1 + u_i)
  static VarphiDescriptor coordinate_ratio();
  // phi(u)_i = u_i^2 / 2; the decrement of the clipped quadratic map.
  static VarphiDescriptor half_square();

  Kind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  std::string label() const;

  Vector operator()(const Vector& u) const;

 private:
  VarphiDescriptor(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}

  Kind kind_;
  double alpha_;
};

enum class Certificate { kBanachVerified, kBoydWongVerified, kWeakContractionMonotone, kUnverified };

std::string to_string(Certificate certificate);

struct FixedPointReport {
  bool converged = false;
  std::size_t iterations = 0;
  Vector final_point;
  // residual_history[n] = d_p(x_{n+1}, x_n)
  std::vector<double> residual_history;
  // d_S(x_{n+1}, x_n) when a seminorm family was supplied, else empty.
  std::vector<double> residual_ds_history;
  // Largest ratio of successive residuals over the second half of the run.
  double contraction_estimate = 0.0;
  Certificate certificate = Certificate::kUnverified;
  std::optional<std::size_t> failure_step;
  std::optional<std::string> hypothesis_failure;
};

// CSV with columns n, residual_dp, residual_dS (empty when not recorded).
void write_trace_csv(std::ostream& out, const FixedPointReport& report);

// Samples (x, y) in T's domain and checks p(Tx, Ty) <= k p(x, y).
PropertyReport verify_contraction(const ConeMetricSpace& space, const MapDescriptor& map, double k,
                                  const SampleSpec& sampler);

struct SolveOptions {
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  // Run the sampled hypothesis checks first; when false the certificate is
  // kUnverified.
  bool verify = true;
  SampleSpec sampler{2000};
  std::optional<SeminormFamily> trace_family;
};

// Picard iteration x_{n+1} = T x_n, stopped by the a-posteriori bound
// k / (1 - k) d_p(x_n, x_{n-1}) <= tol. Throws kHypothesisViolated when
// verification finds a counterexample and kDivergence on non-finite iterates.
FixedPointReport banach_solve(const ConeMetricSpace& space, const ScalarizationContext& ctx,
                              const MapDescriptor& map, double k, const Vector& x0, const SolveOptions& options = {});

// The scalar comparison function induced by phi:
//   Scale:  r -> xi_e(phi(e)) r
//   others: r -> xi_e(phi(r e))
double scalarize_varphi(const ScalarizationContext& ctx, const VarphiDescriptor& varphi, double r);

// Sampled side conditions of phi and the dominance p(Tx, Ty) <= phi(p(x, y)).
// Check names: increasing, zero, homogeneity-bound, scalar-modulus,
// strict-drop, dominance.
PropertyReport verify_nonlinear_hypotheses(const ConeMetricSpace& space, const ScalarizationContext& ctx,
                                           const MapDescriptor& map, const VarphiDescriptor& varphi,
                                           const SampleSpec& sampler);

// Iterates with the double residual stopping rule d_p(x_{n+1}, x_n) <= tol and
// d_p(T x_{n+1}, x_{n+1}) <= tol; the Scale path uses the a-posteriori bound
// with k = xi_e(phi(e)) instead.
FixedPointReport boyd_wong_solve(const ConeMetricSpace& space, const ScalarizationContext& ctx,
                                 const MapDescriptor& map, const VarphiDescriptor& varphi, const Vector& x0,
                                 const SolveOptions& options = {});

// Samples (x, y) and checks p(Tx, Ty) <= p(x, y) - phi(p(x, y)).
PropertyReport verify_weak_contraction(const ConeMetricSpace& space, const MapDescriptor& map,
                                       const VarphiDescriptor& varphi, const SampleSpec& sampler);

// Experimental iteration for weak contractions. Records residual vectors
// p(x_n, x_{n+1}), checks the contraction inequality on consecutive orbit
// pairs and the cone-order chain p(x_{n+1}, x_{n+2}) <= p(x_n, x_{n+1}). Never
// claims convergence certificates; stops early once d_p residual <= stop_tol.
FixedPointReport weak_contraction_iterate(const ConeMetricSpace& space, const ScalarizationContext& ctx,
                                          const MapDescriptor& map, const VarphiDescriptor& varphi,
                                          const Vector& x0, std::size_t budget, double stop_tol = 0.0,
                                          const std::optional<SeminormFamily>& trace_family = std::nullopt);

}  // namespace tvscone
