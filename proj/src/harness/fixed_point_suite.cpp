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
#include "tvscone/error.hpp"
#include "tvscone/fixed_point.hpp"

namespace tvscone::suites {
namespace {

constexpr double kSolveTol = 1e-10;
constexpr std::size_t kVerifySamples = 256;

SolveOptions options(const SuiteConfig& config, double tol) {
  SolveOptions o;
  o.tol = tol;
  o.sampler.count = kVerifySamples;
  o.sampler.seed = config.sample.seed;
  return o;
}

// Inputs {a, b, x0}: a diagonal affine contraction with max |a_i| <= 0.9.
Generator affine_generator(const SuiteConfig& config) {
  return [config](SampleStream::Draw& d) {
    const auto& dims = config.sample.dimensions;
    const std::size_t m = dims[d.index_below(dims.size())];
    return SampleInputs{{d.vector(m, -0.9, 0.9), d.vector(m, -1.0, 1.0), d.vector(m, config.sample.lo, config.sample.hi)},
                        {}};
  };
}

struct AffineRun {
  double k = 0.0;
  Vector fixed_point;
  FixedPointReport report;
};

AffineRun solve_affine(const SuiteConfig& config, const SampleInputs& in) {
  const Vector& a = in.vectors[0];
  const Vector& b = in.vectors[1];
  const std::size_t m = a.dim();
  AffineRun run;
  for (double v : a) run.k = std::max(run.k, std::abs(v));
  std::vector<double> star(m);
  for (std::size_t i = 0; i < m; ++i) star[i] = b[i] / (1.0 - a[i]);
  run.fixed_point = Vector(std::move(star));
  const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(m);
  const ScalarizationContext ctx(space.value_cone(), Vector::filled(m, 1.0), config.tol);
  run.report = banach_solve(space, ctx, MapDescriptor::diagonal_affine(a, b), run.k, in.vectors[2],
                            options(config, kSolveTol));
  return run;
}

Generator box_pair_generator(std::size_t m, double lo, double hi) {
  return [m, lo, hi](SampleStream::Draw& d) { return SampleInputs{{d.vector(m, lo, hi), d.vector(m, lo, hi)}, {}}; };
}

}  // namespace

std::vector<SampledCheck> fixed_point(const SuiteConfig& config) {
  std::vector<SampledCheck> checks;
  const auto seed = config.sample.seed;
  const auto count = config.sample.count;

  // Banach iteration on random diagonal affine contractions.
  const auto affine = affine_generator(config);
  const auto instances = config.solver_instances;
  checks.push_back(sampled("banach:distance-to-fixed-point", instances, seed, 1e-9, affine,
                           [config](const SampleInputs& in) {
                             const auto run = solve_affine(config, in);
                             return (run.report.final_point - run.fixed_point).max_norm();
                           }));
  checks.push_back(sampled("banach:residual-ratio-within-k", instances, seed, 1e-6, affine,
                           [config](const SampleInputs& in) {
                             const auto run = solve_affine(config, in);
                             const auto& r = run.report.residual_history;
                             double worst = 0.0;
                             for (std::size_t n = 1; n < r.size(); ++n) {
                               if (r[n - 1] > 0.0) worst = std::max(worst, r[n] / r[n - 1] - run.k);
                             }
                             return worst;
                           }));
  checks.push_back(sampled("banach:converges-within-500", instances, seed, 0.0, affine,
                           [config](const SampleInputs& in) {
                             const auto run = solve_affine(config, in);
                             return defect_of(run.report.converged && run.report.iterations <= 500 &&
                                              run.report.certificate == Certificate::kBanachVerified);
                           }));
  // Two starts reach points within 2 tol of each other.
  checks.push_back(sampled("banach:unique-limit", instances, seed, 0.0, affine, [config](const SampleInputs& in) {
    const auto first = solve_affine(config, in);
    SampleInputs other = in;
    other.vectors[2] = -1.0 * in.vectors[2];
    const auto second = solve_affine(config, other);
    return std::max(0.0, (first.report.final_point - second.report.final_point).max_norm() - 2.0 * kSolveTol);
  }));

  // Boyd-Wong through the nonlinear scalarization: T = phi = s / (1 + s).
  const ConeMetricSpace plane = ConeMetricSpace::componentwise_abs(2);
  const ScalarizationContext unit(plane.value_cone(), Vector{1.0, 1.0}, config.tol);
  const auto ratio = MapDescriptor::coordinate_ratio();
  const auto ratio_phi = VarphiDescriptor::coordinate_ratio();
  checks.push_back(sampled("boyd-wong:ratio-map-reaches-zero", config.orbits, seed, 0.0,
                           [](SampleStream::Draw& d) { return SampleInputs{{d.vector(2, 0.0, 10.0)}, {}}; },
                           [plane, unit, ratio, ratio_phi, config](const SampleInputs& in) {
                             const auto report =
                                 boyd_wong_solve(plane, unit, ratio, ratio_phi, in.vectors[0], options(config, 1e-8));
                             return defect_of(report.converged && report.final_point.max_norm() <= 2e-4 &&
                                              report.certificate == Certificate::kBoydWongVerified);
                           }));

  // The linear path: T x = x / 2, phi = u / 2.
  checks.push_back(sampled("boyd-wong:scale-path-reaches-zero", config.orbits, seed, 1e-9,
                           [](SampleStream::Draw& d) { return SampleInputs{{d.vector(2, -10.0, 10.0)}, {}}; },
                           [plane, unit, config](const SampleInputs& in) {
                             const auto report = boyd_wong_solve(
                                 plane, unit, MapDescriptor::diagonal_affine(Vector{0.5, 0.5}, Vector{0.0, 0.0}),
                                 VarphiDescriptor::scale(0.5), in.vectors[0], options(config, kSolveTol));
                             return report.converged ? report.final_point.max_norm() : 1.0;
                           }));

  checks.push_back(fixed_case_check("boyd-wong:scale-one-rejected", {SampleInputs{{Vector{1.0, 1.0}}, {}}}, 0.0,
                                    [plane, unit, config](const SampleInputs& in) {
                                      try {
                                        boyd_wong_solve(plane, unit, MapDescriptor::identity(2),
                                                        VarphiDescriptor::scale(1.0), in.vectors[0],
                                                        options(config, kSolveTol));
                                      } catch (const Error& e) {
                                        return defect_of(e.code() == ErrorCode::kHypothesisViolated);
                                      }
                                      return 1.0;
                                    }));

  // phi_hat(r) = xi(phi(r e)) < r on 61 log-spaced points of [1e-3, 1e3].
  std::vector<SampleInputs> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(SampleInputs{{}, {std::pow(10.0, -3.0 + 0.1 * i)}});
  checks.push_back(fixed_case_check("phi-hat:below-identity", grid, 0.0, [unit, ratio_phi](const SampleInputs& in) {
    const double r = in.scalars[0];
    return defect_of(scalarize_varphi(unit, ratio_phi, r) < r);
  }));

  auto two_radii = [](SampleStream::Draw& d) {
    return SampleInputs{{}, {d.log_uniform(1e-6, 1e6), d.log_uniform(1e-6, 1e6)}};
  };
  checks.push_back(sampled("phi-hat:nondecreasing", count, seed, 0.0, two_radii, [unit, ratio_phi](const SampleInputs& in) {
    const double r = std::min(in.scalars[0], in.scalars[1]);
    const double s = std::max(in.scalars[0], in.scalars[1]);
    return std::max(0.0, scalarize_varphi(unit, ratio_phi, r) - scalarize_varphi(unit, ratio_phi, s));
  }));
  checks.push_back(sampled("phi-hat:subadditive", count, seed, 1e-12, two_radii, [unit, ratio_phi](const SampleInputs& in) {
    const double r = in.scalars[0];
    const double s = in.scalars[1];
    const double lhs = scalarize_varphi(unit, ratio_phi, r + s);
    return std::max(0.0, lhs - scalarize_varphi(unit, ratio_phi, r) - scalarize_varphi(unit, ratio_phi, s));
  }));

  // d_p(Tx, Ty) <= phi_hat(d_p(x, y)) for the ratio map and the linear path.
  checks.push_back(sampled("bridge:ratio", count, seed, 1e-9, box_pair_generator(2, 0.0, 10.0),
                           [plane, unit, ratio, ratio_phi](const SampleInputs& in) {
                             const Vector& x = in.vectors[0];
                             const Vector& y = in.vectors[1];
                             return dp_eval(plane, unit, ratio(x), ratio(y)) -
                                    scalarize_varphi(unit, ratio_phi, dp_eval(plane, unit, x, y));
                           }));
  const auto half = MapDescriptor::diagonal_affine(Vector{0.5, -0.5}, Vector{1.0, 2.0});
  const auto half_phi = VarphiDescriptor::scale(0.5);
  checks.push_back(sampled("bridge:scale", count, seed, 1e-9,
                           box_pair_generator(2, config.sample.lo, config.sample.hi),
                           [plane, unit, half, half_phi](const SampleInputs& in) {
                             const Vector& x = in.vectors[0];
                             const Vector& y = in.vectors[1];
                             return dp_eval(plane, unit, half(x), half(y)) -
                                    scalarize_varphi(unit, half_phi, dp_eval(plane, unit, x, y));
                           }));

  // Weak contraction: s -> s - s^2 / 2 on [0, 1] with phi(u) = u^2 / 2.
  const auto clipped = MapDescriptor::clipped_quadratic();
  const auto square = VarphiDescriptor::half_square();
  checks.push_back(sampled("weak:residual-chain", config.orbits, seed, 0.0,
                           [](SampleStream::Draw& d) { return SampleInputs{{d.vector(2, 0.0, 1.0)}, {}}; },
                           [plane, unit, clipped, square](const SampleInputs& in) {
                             const auto report =
                                 weak_contraction_iterate(plane, unit, clipped, square, in.vectors[0], 100000, 1e-6);
                             const double last = report.residual_history.empty() ? 0.0 : report.residual_history.back();
                             return defect_of(report.certificate == Certificate::kWeakContractionMonotone &&
                                              report.converged && last <= 1e-6);
                           }));
  checks.push_back(sampled("weak:contraction-inequality", count, seed, 1e-12, box_pair_generator(2, 0.0, 1.0),
                           [plane, clipped, square](const SampleInputs& in) {
                             const Vector& x = in.vectors[0];
                             const Vector& y = in.vectors[1];
                             const Vector d = plane.p(x, y);
                             return exclusion(plane.value_cone(), d - square(d) - plane.p(clipped(x), clipped(y)));
                           }));
  checks.push_back(fixed_case_check("weak:identity-fails", {SampleInputs{}}, 0.0, [plane, square, config](const SampleInputs&) {
    SampleSpec spec;
    spec.count = kVerifySamples;
    spec.seed = config.sample.seed;
    return defect_of(!verify_weak_contraction(plane, MapDescriptor::identity(2), square, spec).passed());
  }));
  return checks;
}

}  // namespace tvscone::suites
