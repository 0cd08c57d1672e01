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
#include "tvscone/cone_metric.hpp"
#include "tvscone/error.hpp"
#include "tvscone/ordered_space.hpp"
#include "tvscone/scalarization.hpp"
#include "tvscone/seminorm.hpp"

namespace tvscone::suites {
namespace {

Vector lorentz_direction(std::size_t dim) {
  std::vector<double> e(dim, 0.0);
  const double tilt = 0.4 / std::sqrt(static_cast<double>(dim - 1));
  for (std::size_t i = 0; i + 1 < dim; ++i) e[i] = i % 2 == 0 ? tilt : -tilt;
  e[dim - 1] = 1.0;
  return Vector(std::move(e));
}

std::vector<ScalarizationContext> builtin_contexts(const SuiteConfig& config) {
  std::vector<ScalarizationContext> contexts;
  for (std::size_t dim : config.sample.dimensions) {
    contexts.emplace_back(Cone::orthant(dim), orthant_direction(dim), config.tol);
  }
  for (std::size_t dim = 2; dim <= 5; ++dim) {
    contexts.emplace_back(Cone::lorentz(dim), lorentz_direction(dim), config.tol);
  }
  contexts.emplace_back(Cone::polyhedral({{2.0, -1.0}, {-1.0, 2.0}}), Vector{1.0, 1.0}, config.tol);
  contexts.emplace_back(Cone::polyhedral({{1.0, 0.0, 1.0}, {-1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}, {0.0, -1.0, 1.0}}),
                        Vector{0.2, -0.1, 1.0}, config.tol);
  return contexts;
}

void rename(std::vector<SampledCheck>& checks, std::size_t first, const std::string& prefix) {
  for (std::size_t i = first; i < checks.size(); ++i) checks[i].name = prefix + checks[i].name;
}

using Distance = std::function<double(const Vector&, const Vector&)>;

// Triples (x, y, z) with y == x one time in sixteen.
Generator triple_generator(std::size_t m, double lo, double hi) {
  return [m, lo, hi](SampleStream::Draw& d) {
    Vector x = d.vector(m, lo, hi);
    Vector y = d.index_below(16) == 0 ? x : d.vector(m, lo, hi);
    return SampleInputs{{x, y, d.vector(m, lo, hi)}, {}};
  };
}

// Metric axioms of a scalar distance, relative to max(1, d).
void add_scalar_metric_checks(std::vector<SampledCheck>& out, const std::string& prefix, const ConeMetricSpace& space,
                              Distance d, const SuiteConfig& config) {
  constexpr double kRelTol = 1e-12;
  Defect identity = [d](const SampleInputs& in) {
    const Vector& x = in.vectors[0];
    const Vector& y = in.vectors[1];
    const double dxy = d(x, y);
    return defect_of(d(x, x) == 0.0 && dxy >= 0.0 && (x == y) == (dxy == 0.0));
  };
  Defect symmetry = [d](const SampleInputs& in) {
    const double a = d(in.vectors[0], in.vectors[1]);
    const double b = d(in.vectors[1], in.vectors[0]);
    return std::abs(a - b) / std::max(1.0, std::max(a, b));
  };
  Defect triangle = [d](const SampleInputs& in) {
    const Vector& x = in.vectors[0];
    const Vector& y = in.vectors[1];
    const Vector& z = in.vectors[2];
    const double direct = d(x, y);
    return std::max(0.0, direct - d(x, z) - d(z, y)) / std::max(1.0, direct);
  };

  if (space.is_finite()) {
    std::vector<SampleInputs> triples;
    for (const auto& x : space.points()) {
      for (const auto& y : space.points()) {
        for (const auto& z : space.points()) triples.push_back(SampleInputs{{x, y, z}, {}});
      }
    }
    out.push_back(fixed_case_check(prefix + "identity", triples, 0.0, identity));
    out.push_back(fixed_case_check(prefix + "symmetry", triples, kRelTol, symmetry));
    out.push_back(fixed_case_check(prefix + "triangle", triples, kRelTol, triangle));
    return;
  }
  const auto gen = triple_generator(space.point_dim(), config.sample.lo, config.sample.hi);
  const auto count = config.sample.count;
  const auto seed = config.sample.seed;
  out.push_back(sampled(prefix + "identity", count, seed, 0.0, gen, identity));
  out.push_back(sampled(prefix + "symmetry", count, seed, kRelTol, gen, symmetry));
  out.push_back(sampled(prefix + "triangle", count, seed, kRelTol, gen, triangle));
}

ConeMetricSpace three_point_table() {
  const Vector zero{0.0, 0.0};
  const Vector ab{1.0, 0.0};
  const Vector bc{0.0, 1.0};
  const Vector ac{1.0, 1.0};
  return ConeMetricSpace::finite_table(Cone::orthant(2), {Vector{0.0}, Vector{1.0}, Vector{2.0}},
                                       {{zero, ab, ac}, {ab, zero, bc}, {ac, bc, zero}});
}

void add_space(std::vector<SampledCheck>& out, const ConeMetricSpace& space, const std::string& prefix,
               const SuiteConfig& config) {
  const std::size_t first = out.size();
  auto cone_checks = metric_axiom_checks(space, config.sample);
  for (auto& c : cone_checks) out.push_back(std::move(c));

  const Cone& cone = space.value_cone();
  const Vector e = cone.kind() == ConeKind::kOrthant ? orthant_direction(cone.dim()) : cone.interior_witness();
  const ScalarizationContext ctx(cone, e, config.tol);
  add_scalar_metric_checks(out, space.label() + ":dp:", space,
                           [space, ctx](const Vector& x, const Vector& y) { return dp_eval(space, ctx, x, y); },
                           config);
  if (cone.kind() == ConeKind::kOrthant) {
    const SeminormFamily family = std::holds_alternative<WeightedComponentwise>(space.kind())
                                      ? SeminormFamily::partial_sums(cone.dim())
                                      : SeminormFamily::coordinate(cone.dim());
    add_scalar_metric_checks(
        out, space.label() + ":dS:", space,
        [space, family](const Vector& x, const Vector& y) { return dS_eval(space, family, x, y); }, config);
  }
  rename(out, first, prefix);
}

}  // namespace

std::vector<SampledCheck> scalarization(const SuiteConfig& config) {
  std::vector<SampledCheck> checks;
  for (const auto& ctx : builtin_contexts(config)) {
    for (auto& c : scalarization_checks(ctx, config.sample)) checks.push_back(std::move(c));
    if (ctx.cone().kind() == ConeKind::kPolyhedral) {
      for (auto& c : cone_validation_checks(ctx.cone(), config.sample.count, config.sample.seed)) {
        checks.push_back(std::move(c));
      }
    }
  }
  for (const auto& ctx : config.extra_contexts) {
    const std::size_t first = checks.size();
    for (auto& c : scalarization_checks(ctx, config.sample)) checks.push_back(std::move(c));
    rename(checks, first, "config:");
  }

  // y1 >= y2, y1 != y2 with equal levels: xi is monotone but not strongly so.
  const ScalarizationContext unit(Cone::orthant(2), Vector{1.0, 1.0}, config.tol);
  SampledCheck witness = fixed_case_check(
      "orthant2:not-strongly-monotone", {SampleInputs{{Vector{1.0, 1.0}, Vector{1.0, 0.0}}, {}}}, 0.0,
      [unit](const SampleInputs& in) {
        const Vector& y1 = in.vectors[0];
        const Vector& y2 = in.vectors[1];
        const Vector gap = y1 - y2;
        const bool ordered = y1 != y2 && unit.cone().contains(gap, 0.0) && !(unit.cone().slack(gap) > 0.0);
        return defect_of(ordered) + std::abs(xi(unit, y1) - xi(unit, y2));
      });
  witness.finalize = [unit](CheckResult& r) {
    r.metrics["xi_y1"] = xi(unit, Vector{1.0, 1.0});
    r.metrics["xi_y2"] = xi(unit, Vector{1.0, 0.0});
    const auto found = non_strong_monotonicity_witness(unit);
    r.metrics["generic_witness_gap"] = found ? std::abs(found->xi_y1 - found->xi_y2) : 1.0;
  };
  checks.push_back(std::move(witness));
  return checks;
}

std::vector<SampledCheck> metric_axioms(const SuiteConfig& config) {
  std::vector<SampledCheck> checks;
  for (std::size_t dim : config.sample.dimensions) add_space(checks, ConeMetricSpace::componentwise_abs(dim), "", config);
  add_space(checks, ConeMetricSpace::weighted(Vector{2.0, 1.0, 0.5}), "", config);
  add_space(checks, three_point_table(), "", config);
  for (const auto& space : config.extra_spaces) add_space(checks, space, "config:", config);
  return checks;
}

std::vector<SampledCheck> omega_example(const SuiteConfig& config) {
  const double eps = config.epsilon;
  const std::size_t n = config.truncation;
  const SeminormFamily family = SeminormFamily::coordinate(n);
  std::vector<SampledCheck> checks;

  std::vector<double> spike(n, 0.0);
  spike[0] = eps;
  const Vector c(std::move(spike));
  SampledCheck below = fixed_case_check("h-of-c-below-epsilon", {SampleInputs{{c}, {eps}}}, 0.0,
                                        [family](const SampleInputs& in) {
                                          return defect_of(family.h(in.vectors[0]) < in.scalars[0]);
                                        });
  below.finalize = [family, c, eps](CheckResult& r) {
    r.metrics["h_c"] = family.h(c);
    r.metrics["epsilon"] = eps;
  };
  checks.push_back(std::move(below));

  const Vector interior = Vector::filled(n, eps);
  SampledCheck inside = fixed_case_check("interior-variant-below-epsilon", {SampleInputs{{interior}, {eps}}}, 0.0,
                                         [family](const SampleInputs& in) {
                                           return defect_of(family.h(in.vectors[0]) < in.scalars[0]);
                                         });
  inside.finalize = [family, interior](CheckResult& r) { r.metrics["h_interior"] = family.h(interior); };
  checks.push_back(std::move(inside));

  // d_S(0, c) = h(c) in the truncated model.
  const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(n);
  checks.push_back(fixed_case_check("distance-to-c", {SampleInputs{{Vector::zeros(n), c}, {}}}, 1e-15,
                                    [space, family](const SampleInputs& in) {
                                      return std::abs(dS_eval(space, family, in.vectors[0], in.vectors[1]) -
                                                      family.h(in.vectors[1]));
                                    }));

  // Dropping coordinates beyond N moves h by at most 2^-N.
  const std::size_t wide = n + 10;
  const SeminormFamily longer = SeminormFamily::coordinate(wide);
  checks.push_back(sampled(
      "truncation-tail", config.sample.count, config.sample.seed, 0.0,
      [wide, lo = config.sample.lo, hi = config.sample.hi](SampleStream::Draw& d) {
        return SampleInputs{{d.vector(wide, lo, hi)}, {}};
      },
      [family, longer, n](const SampleInputs& in) {
        const Vector& u = in.vectors[0];
        const Vector head(std::vector<double>(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n)));
        return std::max(0.0, std::abs(longer.h(u) - family.h(head)) - std::ldexp(1.0, -static_cast<int>(n)));
      }));
  return checks;
}

}  // namespace tvscone::suites
