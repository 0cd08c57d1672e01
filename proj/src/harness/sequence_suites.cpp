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
#include "tvscone/ordered_space.hpp"
#include "tvscone/scalarization.hpp"
#include "tvscone/seminorm.hpp"

namespace tvscone::suites {
namespace {

constexpr std::size_t kTail = 8;

std::string rate_name(double rate) {
  std::string s = std::to_string(rate);
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  return "rate" + s;
}

std::size_t pick_dim(const SuiteConfig& config, SampleStream::Draw& d) {
  const auto& dims = config.sample.dimensions;
  return dims[d.index_below(dims.size())];
}

// x_n = x + rate^n v for n = 1..length.
std::vector<Vector> geometric_sequence(const Vector& x, const Vector& v, double rate, std::size_t length) {
  std::vector<Vector> seq;
  seq.reserve(length);
  double scale = 1.0;
  for (std::size_t n = 1; n <= length; ++n) {
    scale *= rate;
    seq.push_back(x + scale * v);
  }
  return seq;
}

// Direction with every coordinate of magnitude in [0.5, 1.5]; shifts the limit
// of a control sequence well away from the true one.
Vector shift(std::size_t m, SampleStream::Draw& d) {
  std::vector<double> w(m);
  for (double& s : w) s = (d.index_below(2) == 0 ? -1.0 : 1.0) * d.uniform(0.5, 1.5);
  return Vector(std::move(w));
}

Vector interior_point(std::size_t m, SampleStream::Draw& d, double lo, double hi) {
  std::vector<double> c(m);
  for (double& s : c) s = d.uniform(lo, hi);
  return Vector(std::move(c));
}

// Inputs: {x, v, w} and {rate, is_control}. The claimed limit is x + w; w = 0
// for convergent sequences.
Generator sequence_generator(const SuiteConfig& config, double rate) {
  return [config, rate](SampleStream::Draw& d) {
    const std::size_t m = pick_dim(config, d);
    Vector x = d.vector(m, config.sample.lo, config.sample.hi);
    Vector v = d.vector(m, -1.0, 1.0);
    const bool control = d.index_below(2) == 1;
    Vector w = control ? shift(m, d) : Vector::zeros(m);
    return SampleInputs{{x, v, w}, {rate, control ? 1.0 : 0.0}};
  };
}

struct Verdicts {
  bool cone = false;
  bool dp = false;
  bool ds = false;
};

// Each verdict asks for the last kTail terms to sit below the finest level of
// the ladder: p << e / 2^J, d_p < 2^-J, d_S < h(e / 2^J).
Verdicts verdicts(const SuiteConfig& config, const SeminormFamily& family, const SampleInputs& in) {
  const Vector& x = in.vectors[0];
  const std::size_t m = x.dim();
  const double rate = in.scalars[0];
  const std::size_t length = sequence_length(config, rate);
  const auto seq = geometric_sequence(x, in.vectors[1], rate, length);
  const Vector limit = x + in.vectors[2];
  const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(m);
  const Vector e = orthant_direction(m);
  const ScalarizationContext ctx(space.value_cone(), e, config.tol);
  const auto probes = dyadic_probes(e, config.probe_levels);
  const double eps = std::ldexp(1.0, -static_cast<int>(config.probe_levels));
  const double eta = family.h(probes.back());

  Verdicts out;
  out.cone = detect_cone_convergence(space, seq, limit, probes, length - kTail + 1, config.margin);
  out.dp = true;
  out.ds = true;
  for (std::size_t n = length - kTail; n < length; ++n) {
    out.dp = out.dp && dp_eval(space, ctx, seq[n], limit) < eps;
    out.ds = out.ds && dS_eval(space, family, seq[n], limit) < eta;
  }
  return out;
}

SeminormFamily coordinate_family(std::size_t m) { return SeminormFamily::coordinate(m); }

}  // namespace

std::vector<SampledCheck> convergence_transfer(const SuiteConfig& config) {
  std::vector<SampledCheck> checks;
  const std::size_t count = 2 * config.sequences;
  for (double rate : config.rates) {
    const std::string prefix = rate_name(rate) + ":";
    const auto gen = sequence_generator(config, rate);
    checks.push_back(sampled(prefix + "cone-dp-dS-agree", count, config.sample.seed, 0.0, gen,
                             [config](const SampleInputs& in) {
                               const auto v = verdicts(config, coordinate_family(in.vectors[0].dim()), in);
                               return static_cast<double>((v.cone != v.dp) + (v.cone != v.ds));
                             }));
    checks.push_back(sampled(prefix + "matches-construction", count, config.sample.seed, 0.0, gen,
                             [config](const SampleInputs& in) {
                               const auto v = verdicts(config, coordinate_family(in.vectors[0].dim()), in);
                               return defect_of(v.cone == (in.scalars[1] == 0.0));
                             }));
  }
  return checks;
}

std::vector<SampledCheck> topology_compare(const SuiteConfig& config) {
  std::vector<SampledCheck> checks;
  const auto seed = config.sample.seed;
  const double lo = config.sample.lo;
  const double hi = config.sample.hi;

  struct Named {
    std::string name;
    std::function<SeminormFamily(std::size_t)> make;
  };
  const std::vector<Named> families{{"coordinate", [](std::size_t m) { return SeminormFamily::coordinate(m); }},
                                    {"partial-sums", [](std::size_t m) { return SeminormFamily::partial_sums(m); }}};

  for (const auto& fam : families) {
    const std::string prefix = fam.name + ":";
    auto make = fam.make;

    // d_S(x, y) < min_k 2^-k c_k / (1 + c_k)  implies  p(x, y) << c.
    checks.push_back(sampled(
        prefix + "dS-ball-inside-cone-ball", config.sample.count, seed, 0.0,
        [config, lo, hi](SampleStream::Draw& d) {
          const std::size_t m = pick_dim(config, d);
          Vector x = d.vector(m, lo, hi);
          Vector c = interior_point(m, d, 0.01, 1.0);
          Vector u = d.vector(m, -1.0, 1.0);
          const double s = d.log_uniform(1e-3, 2.0);
          return SampleInputs{{x, x + s * hadamard(u, c), c}, {}};
        },
        [make](const SampleInputs& in) {
          const Vector& c = in.vectors[2];
          const std::size_t m = c.dim();
          const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(m);
          double radius = 1.0;
          for (std::size_t k = 0; k < m; ++k) {
            radius = std::min(radius, std::ldexp(c[k] / (1.0 + c[k]), -static_cast<int>(k + 1)));
          }
          const bool premise = dS_eval(space, make(m), in.vectors[0], in.vectors[1]) < radius;
          const Vector p = space.p(in.vectors[0], in.vectors[1]);
          return defect_of(!premise || space.value_cone().slack(c - p) > 0.0);
        }));

    // On the orthant the comparison reverses: p(x, y) << t e with h(t e) <= eps
    // gives d_S(x, y) < eps.
    checks.push_back(sampled(
        prefix + "cone-ball-inside-dS-ball", config.sample.count, seed, 0.0,
        [config, lo, hi](SampleStream::Draw& d) {
          const std::size_t m = pick_dim(config, d);
          Vector x = d.vector(m, lo, hi);
          Vector u = d.vector(m, -0.999, 0.999);
          return SampleInputs{{x, u}, {d.log_uniform(1e-4, 0.5)}};
        },
        [make](const SampleInputs& in) {
          const Vector& x = in.vectors[0];
          const std::size_t m = x.dim();
          const SeminormFamily family = make(m);
          const Vector e = orthant_direction(m);
          const double eps = in.scalars[0];
          double t_lo = 0.0;
          double t_hi = 1.0;
          while (family.h(t_hi * e) <= eps && t_hi < 1e12) t_hi *= 2.0;
          for (int i = 0; i < 200 && t_hi - t_lo > 1e-15 * t_hi; ++i) {
            const double mid = 0.5 * (t_lo + t_hi);
            (family.h(mid * e) <= eps ? t_lo : t_hi) = mid;
          }
          const Vector y = x + t_lo * hadamard(in.vectors[1], e);
          const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(m);
          return defect_of(dS_eval(space, family, x, y) < eps);
        }));

    // Along constructed sequences, d_S convergence and cone convergence coincide.
    const std::size_t count = 2 * config.sequences;
    for (double rate : config.rates) {
      checks.push_back(sampled(prefix + rate_name(rate) + ":dS-iff-cone", count, seed, 0.0,
                               sequence_generator(config, rate), [config, make](const SampleInputs& in) {
                                 const auto v = verdicts(config, make(in.vectors[0].dim()), in);
                                 return defect_of(v.cone == v.ds);
                               }));
    }
  }
  return checks;
}

std::vector<SampledCheck> continuity(const SuiteConfig& config) {
  std::vector<SampledCheck> checks;
  const auto seed = config.sample.seed;
  const auto rates = config.rates;
  auto gen = [config, rates](SampleStream::Draw& d) {
    const std::size_t m = pick_dim(config, d);
    const double lo = config.sample.lo;
    const double hi = config.sample.hi;
    std::vector<Vector> v{d.vector(m, lo, hi), d.vector(m, lo, hi), d.vector(m, -1.0, 1.0), d.vector(m, -1.0, 1.0)};
    return SampleInputs{std::move(v), {rates[d.index_below(rates.size())]}};
  };

  // -(p(x_n, x) + p(y_n, y)) <= p(x_n, y_n) - p(x, y) <= p(x_n, x) + p(y_n, y)
  checks.push_back(sampled("order-bound", config.sample.count, seed, 1e-12, gen, [](const SampleInputs& in) {
    const Vector& x = in.vectors[0];
    const Vector& y = in.vectors[1];
    const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(x.dim());
    const Cone& cone = space.value_cone();
    double worst = 0.0;
    double scale = 1.0;
    for (int n = 1; n <= 64; ++n) {
      scale *= in.scalars[0];
      const Vector xn = x + scale * in.vectors[2];
      const Vector yn = y + scale * in.vectors[3];
      const Vector bound = space.p(xn, x) + space.p(yn, y);
      const Vector change = space.p(xn, yn) - space.p(x, y);
      worst = std::max({worst, exclusion(cone, bound - change), exclusion(cone, bound + change)});
    }
    return worst;
  }));

  // Every seminorm of p(x_n, y_n) - p(x, y) falls below 1e-9 once rate^n < 1e-12.
  checks.push_back(sampled("seminorms-tend-to-zero", config.sample.count, seed, 1e-9, gen, [](const SampleInputs& in) {
    const Vector& x = in.vectors[0];
    const Vector& y = in.vectors[1];
    const std::size_t m = x.dim();
    const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(m);
    const double rate = in.scalars[0];
    const double n = std::ceil(std::log(1e-12) / std::log(rate));
    const double scale = std::pow(rate, n);
    const Vector change = space.p(x + scale * in.vectors[2], y + scale * in.vectors[3]) - space.p(x, y);
    double worst = 0.0;
    const SeminormFamily family = SeminormFamily::partial_sums(m);
    for (const auto& q : family.members()) worst = std::max(worst, q(change));
    return worst;
  }));

  // |d_p(x_n, y_n) - d_p(x, y)| <= d_p(x_n, x) + d_p(y_n, y)
  checks.push_back(sampled("dp-jointly-continuous", config.sample.count, seed, 1e-12, gen,
                           [tol = config.tol](const SampleInputs& in) {
                             const Vector& x = in.vectors[0];
                             const Vector& y = in.vectors[1];
                             const std::size_t m = x.dim();
                             const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(m);
                             const ScalarizationContext ctx(space.value_cone(), orthant_direction(m), tol);
                             double worst = 0.0;
                             double scale = 1.0;
                             for (int n = 1; n <= 64; ++n) {
                               scale *= in.scalars[0];
                               const Vector xn = x + scale * in.vectors[2];
                               const Vector yn = y + scale * in.vectors[3];
                               const double lhs = std::abs(dp_eval(space, ctx, xn, yn) - dp_eval(space, ctx, x, y));
                               const double rhs = dp_eval(space, ctx, xn, x) + dp_eval(space, ctx, yn, y);
                               worst = std::max(worst, (lhs - rhs) / std::max(1.0, dp_eval(space, ctx, x, y)));
                             }
                             return worst;
                           }));
  return checks;
}

std::vector<SampledCheck> closed_ball(const SuiteConfig& config) {
  std::vector<SampledCheck> checks;
  const auto seed = config.sample.seed;
  constexpr double kTol = 1e-12;

  // Inputs {x, c, s}: center, radius, and the offset y = x + s (.) c with one
  // coordinate of s on the boundary (+-1).
  auto ball_gen = [config](SampleStream::Draw& d) {
    const std::size_t m = pick_dim(config, d);
    Vector x = d.vector(m, config.sample.lo, config.sample.hi);
    Vector c = interior_point(m, d, 0.1, 2.0);
    const Vector raw = d.vector(m, -1.0, 1.0);
    std::vector<double> s(raw.begin(), raw.end());
    s[d.index_below(m)] = d.index_below(2) == 0 ? -1.0 : 1.0;
    return SampleInputs{{x, c, Vector(std::move(s))}, {config.rates[d.index_below(config.rates.size())]}};
  };
  const std::size_t count = config.sequences * config.rates.size();

  // z_n = x + (1 - rate^n)(y - x) stays in the closed ball and so does its limit y.
  checks.push_back(sampled("limit-stays-in-closed-ball", count, seed, 0.0, ball_gen, [config](const SampleInputs& in) {
    const Vector& x = in.vectors[0];
    const Vector& c = in.vectors[1];
    const Vector y = x + hadamard(in.vectors[2], c);
    const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(x.dim());
    const double rate = in.scalars[0];
    bool inside = true;
    double scale = 1.0;
    for (std::size_t n = 1; n <= sequence_length(config, rate); ++n) {
      scale *= rate;
      inside = inside && ball_membership(space, x, c, x + (1.0 - scale) * (y - x), true, kTol, config.margin);
    }
    return defect_of(inside && ball_membership(space, x, c, y, true, kTol, config.margin));
  }));

  // The same limit lies on the boundary, outside the open ball.
  checks.push_back(sampled("boundary-outside-open-ball", count, seed, 0.0, ball_gen, [config](const SampleInputs& in) {
    const Vector& x = in.vectors[0];
    const Vector& c = in.vectors[1];
    const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(x.dim());
    return defect_of(!ball_membership(space, x, c, x + hadamard(in.vectors[2], c), false, 0.0, config.margin));
  }));

  // For c1, c2 >> 0 the radius c = min(c1, c2) / 2 satisfies c << c1, c << c2
  // and B(x, c) lies in both larger balls.
  checks.push_back(sampled(
      "basis-refinement", config.sample.count, seed, 0.0,
      [config](SampleStream::Draw& d) {
        const std::size_t m = pick_dim(config, d);
        return SampleInputs{{d.vector(m, config.sample.lo, config.sample.hi), interior_point(m, d, 1e-3, 10.0),
                             interior_point(m, d, 1e-3, 10.0), d.vector(m, -0.999, 0.999)},
                            {}};
      },
      [config](const SampleInputs& in) {
        const Vector& x = in.vectors[0];
        const Vector& c1 = in.vectors[1];
        const Vector& c2 = in.vectors[2];
        const std::size_t m = x.dim();
        std::vector<double> c(m);
        for (std::size_t i = 0; i < m; ++i) c[i] = 0.5 * std::min(c1[i], c2[i]);
        const Vector radius(std::move(c));
        const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(m);
        const Cone& cone = space.value_cone();
        const Vector z = x + hadamard(in.vectors[3], radius);
        const bool smaller = order_ll(cone, radius, c1, config.margin) && order_ll(cone, radius, c2, config.margin);
        const bool nested = !ball_membership(space, x, radius, z, false, 0.0, config.margin) ||
                            (ball_membership(space, x, c1, z, false, 0.0, config.margin) &&
                             ball_membership(space, x, c2, z, false, 0.0, config.margin));
        return defect_of(smaller && nested);
      }));
  return checks;
}

std::vector<SampledCheck> boundedness(const SuiteConfig& config) {
  std::vector<SampledCheck> checks;
  constexpr double kTol = 1e-12;
  const ConeMetricSpace space = ConeMetricSpace::componentwise_abs(2);
  const SeminormFamily catalog({Seminorm::coordinate(1), Seminorm::coordinate(2), Seminorm::partial_abs_sum(1),
                                Seminorm::partial_abs_sum(2), Seminorm::weighted_abs_sum({0.3, 1.7})},
                               5);

  // A finite set of 1..10 points in R^2.
  auto gen = [config](SampleStream::Draw& d) {
    const std::size_t size = 1 + d.index_below(10);
    SampleInputs in;
    for (std::size_t i = 0; i < size; ++i) in.vectors.push_back(d.vector(2, config.sample.lo, config.sample.hi));
    return in;
  };
  const auto count = config.bounded_sets;
  const auto seed = config.sample.seed;

  checks.push_back(sampled("delta-is-upper-bound", count, seed, kTol, gen, [space, catalog](const SampleInputs& in) {
    const auto report = diameter(space, in.vectors, catalog);
    double worst = 0.0;
    for (const auto& x : in.vectors) {
      for (const auto& y : in.vectors) worst = std::max(worst, exclusion(space.value_cone(), *report.delta - space.p(x, y)));
    }
    return worst;
  }));

  // Least: every coordinate of delta is attained by some pair.
  checks.push_back(sampled("delta-is-least", count, seed, 0.0, gen, [space, catalog](const SampleInputs& in) {
    const auto report = diameter(space, in.vectors, catalog);
    double worst = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
      double attained = 0.0;
      for (const auto& x : in.vectors) {
        for (const auto& y : in.vectors) attained = std::max(attained, space.p(x, y)[i]);
      }
      worst = std::max(worst, std::abs((*report.delta)[i] - attained));
    }
    return worst;
  }));

  checks.push_back(sampled("delta-q-below-q-of-delta", count, seed, kTol, gen, [space, catalog](const SampleInputs& in) {
    const auto report = diameter(space, in.vectors, catalog);
    double worst = 0.0;
    for (std::size_t k = 0; k < catalog.members().size(); ++k) {
      worst = std::max(worst, report.delta_q[k] - catalog.members()[k](*report.delta));
    }
    return worst;
  }));

  checks.push_back(
      sampled("delta-q-below-q-of-witness", count, seed, kTol, gen, [space, catalog](const SampleInputs& in) {
        const auto report = diameter(space, in.vectors, catalog);
        double worst = defect_of(report.bounded_above && report.witness_bound.has_value());
        for (std::size_t k = 0; k < catalog.members().size(); ++k) {
          worst = std::max(worst, report.delta_q[k] - catalog.members()[k](*report.witness_bound));
        }
        return worst;
      }));
  return checks;
}

}  // namespace tvscone::suites
