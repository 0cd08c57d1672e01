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
#include <iomanip>
#include <limits>
#include <variant>

#include "tvscone/error.hpp"
#include "tvscone/fixed_point.hpp"
#include "tvscone/ordered_space.hpp"
#include "tvscone/random.hpp"

namespace tvscone {
namespace {

using Point = std::vector<Extended>;

constexpr double kOrderSlack = 1e-12;

Point widen(const Vector& x) { return Point(x.begin(), x.end()); }

Vector narrow(const Point& x, std::size_t step) {
  std::vector<double> out;
  out.reserve(x.size());
  for (Extended v : x) {
    const double d = static_cast<double>(v);
    if (!std::isfinite(d)) {
      throw Error(ErrorCode::kDivergence, "iterate " + std::to_string(step) + " is not finite");
    }
    out.push_back(d);
  }
  return Vector(std::move(out));
}

// p(x, y) with the coordinate differences taken before rounding to double.
Vector residual(const ConeMetricSpace& space, const Point& x, const Point& y, std::size_t step) {
  if (const auto* w = std::get_if<WeightedComponentwise>(&space.kind())) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      out[i] = static_cast<double>(static_cast<Extended>(w->weights[i]) * std::fabs(x[i] - y[i]));
    }
    return Vector(std::move(out));
  }
  if (std::holds_alternative<ComponentwiseAbs>(space.kind())) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<double>(std::fabs(x[i] - y[i]));
    return Vector(std::move(out));
  }
  return space.p(narrow(x, step), narrow(y, step));
}

void require_matching(const ConeMetricSpace& space, const ScalarizationContext& ctx, const MapDescriptor& map,
                      const Vector& x0) {
  if (!(ctx.cone() == space.value_cone())) {
    throw Error(ErrorCode::kConeMismatch,
                "context cone " + ctx.cone().label() + " differs from value cone " + space.value_cone().label());
  }
  if (x0.dim() != space.point_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "x0 must have dimension " + std::to_string(space.point_dim()));
  }
  if (!map.in_domain(x0.entries())) {
    throw Error(ErrorCode::kInvalidArgument, "x0 " + x0.to_string() + " is outside the domain of " + map.label());
  }
}

void require_options(const SolveOptions& options) {
  if (!(options.tol > 0.0) || !std::isfinite(options.tol)) {
    throw Error(ErrorCode::kInvalidArgument, "solver tolerance must be > 0");
  }
  if (options.max_iter == 0) throw Error(ErrorCode::kInvalidArgument, "max_iter must be >= 1");
}

std::string describe_failure(const PropertyReport& report) {
  std::string text;
  for (const auto& c : report.checks) {
    if (c.passed) continue;
    if (!text.empty()) text += "; ";
    text += c.name + " (violation " + std::to_string(c.max_violation) + ")";
    if (c.counterexample) {
      text += " at";
      for (const auto& v : c.counterexample->vectors) text += " " + v.to_string();
      for (double s : c.counterexample->scalars) text += " " + std::to_string(s);
    }
  }
  return text;
}

double exclusion(const Cone& cone, const Vector& v) {
  return std::max(0.0, -cone.slack(v)) / std::max(1.0, v.max_norm());
}

double max_ratio_second_half(const std::vector<double>& r) {
  double estimate = 0.0;
  for (std::size_t n = std::max<std::size_t>(1, r.size() / 2); n < r.size(); ++n) {
    if (r[n - 1] > 0.0) estimate = std::max(estimate, r[n] / r[n - 1]);
  }
  return estimate;
}

// Pairs (x, y) from T's domain. Finite spaces enumerate every pair instead.
SampledCheck pair_check(const ConeMetricSpace& space, const MapDescriptor& map, const SampleSpec& spec,
                        std::string name, double tolerance, std::function<double(const SampleInputs&)> defect) {
  if (space.is_finite()) {
    std::vector<SampleInputs> pairs;
    for (const auto& x : space.points()) {
      for (const auto& y : space.points()) pairs.push_back(SampleInputs{{x, y}, {}});
    }
    return fixed_case_check(std::move(name), std::move(pairs), tolerance, std::move(defect));
  }
  SampledCheck c;
  c.name = std::move(name);
  c.count = spec.count;
  c.tolerance = tolerance;
  SampleStream stream(spec.seed, c.name);
  c.generate = [stream, map, m = space.point_dim(), lo = spec.lo, hi = spec.hi](std::uint64_t i) {
    auto d = stream.at(i);
    Vector x = map.project_to_domain(d.vector(m, lo, hi));
    Vector y = map.project_to_domain(d.vector(m, lo, hi));
    return SampleInputs{{x, y}, {}};
  };
  c.defect = std::move(defect);
  return c;
}

struct Trace {
  FixedPointReport report;
  const ConeMetricSpace& space;
  const ScalarizationContext& ctx;
  const std::optional<SeminormFamily>& family;

  double record(const Vector& r) {
    const double d = xi(ctx, r);
    report.residual_history.push_back(d);
    if (family) report.residual_ds_history.push_back(family->h(r));
    return d;
  }
};

Point step(const MapDescriptor& map, const Point& x, std::size_t n) {
  Point next = map.apply<Extended>(x);
  for (Extended v : next) {
    if (!std::isfinite(static_cast<double>(v))) {
      throw Error(ErrorCode::kDivergence, "iterate " + std::to_string(n) + " is not finite");
    }
  }
  return next;
}

}  // namespace

void write_trace_csv(std::ostream& out, const FixedPointReport& report) {
  out << "n,residual_dp,residual_dS\n" << std::setprecision(17);
  for (std::size_t n = 0; n < report.residual_history.size(); ++n) {
    out << n + 1 << ',' << report.residual_history[n] << ',';
    if (n < report.residual_ds_history.size()) out << report.residual_ds_history[n];
    out << '\n';
  }
}

PropertyReport verify_contraction(const ConeMetricSpace& space, const MapDescriptor& map, double k,
                                  const SampleSpec& sampler) {
  sampler.validate();
  const Cone cone = space.value_cone();
  std::vector<SampledCheck> checks;
  checks.push_back(pair_check(space, map, sampler, "contraction", 1e-12, [space, map, cone, k](const SampleInputs& in) {
    const Vector& x = in.vectors[0];
    const Vector& y = in.vectors[1];
    return exclusion(cone, k * space.p(x, y) - space.p(map(x), map(y)));
  }));
  return run_checks(checks);
}

FixedPointReport banach_solve(const ConeMetricSpace& space, const ScalarizationContext& ctx,
                              const MapDescriptor& map, double k, const Vector& x0, const SolveOptions& options) {
  if (!(k >= 0.0 && k < 1.0)) throw Error(ErrorCode::kInvalidArgument, "contraction constant k must be in [0, 1)");
  require_matching(space, ctx, map, x0);
  require_options(options);
  if (options.verify) {
    const PropertyReport check = verify_contraction(space, map, k, options.sampler);
    if (!check.passed()) {
      throw Error(ErrorCode::kHypothesisViolated, "contraction p(Tx, Ty) <= k p(x, y) fails: " + describe_failure(check));
    }
  }

  Trace trace{{}, space, ctx, options.trace_family};
  const long double factor = static_cast<long double>(k) / (1.0L - k);
  Point x = widen(x0);
  for (std::size_t n = 1; n <= options.max_iter; ++n) {
    Point next = step(map, x, n);
    const double d = trace.record(residual(space, next, x, n));
    x = std::move(next);
    trace.report.iterations = n;
    if (factor * d <= options.tol) {
      trace.report.converged = true;
      break;
    }
  }
  trace.report.final_point = narrow(x, trace.report.iterations);
  trace.report.contraction_estimate = max_ratio_second_half(trace.report.residual_history);
  trace.report.certificate = options.verify ? Certificate::kBanachVerified : Certificate::kUnverified;
  return trace.report;
}

double scalarize_varphi(const ScalarizationContext& ctx, const VarphiDescriptor& varphi, double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw Error(ErrorCode::kInvalidArgument, "phi is scalarized on r >= 0 only");
  if (varphi.kind() == VarphiDescriptor::Kind::kScale) return xi(ctx, varphi(ctx.e())) * r;
  return xi(ctx, varphi(r * ctx.e()));
}

PropertyReport verify_nonlinear_hypotheses(const ConeMetricSpace& space, const ScalarizationContext& ctx,
                                           const MapDescriptor& map, const VarphiDescriptor& varphi,
                                           const SampleSpec& sampler) {
  sampler.validate();
  const Cone cone = ctx.cone();
  const double scale = std::max(std::abs(sampler.lo), std::abs(sampler.hi));
  std::vector<SampledCheck> checks;

  auto sampled = [&](const std::string& name, double tolerance, std::function<SampleInputs(SampleStream::Draw&)> gen,
                     std::function<double(const SampleInputs&)> defect) {
    SampledCheck c;
    c.name = name;
    c.count = sampler.count;
    c.tolerance = tolerance;
    SampleStream stream(sampler.seed, name);
    c.generate = [stream, gen](std::uint64_t i) {
      auto d = stream.at(i);
      return gen(d);
    };
    c.defect = std::move(defect);
    checks.push_back(std::move(c));
  };

  // u <= v in P implies phi(u) <= phi(v)
  sampled(
      "increasing", 1e-12,
      [cone, scale](SampleStream::Draw& d) {
        Vector u = sample_in_cone(cone, d, scale);
        Vector w = sample_in_cone(cone, d, scale);
        return SampleInputs{{u, u + w}, {}};
      },
      [cone, varphi](const SampleInputs& in) {
        return exclusion(cone, varphi(in.vectors[1]) - varphi(in.vectors[0]));
      });
  checks.push_back(fixed_case_check("zero", {SampleInputs{{Vector::zeros(cone.dim())}, {}}}, 0.0,
                                    [varphi](const SampleInputs& in) { return varphi(in.vectors[0]).max_norm(); }));

  if (varphi.kind() == VarphiDescriptor::Kind::kScale) {
    // phi(r e) <= r phi(e)
    sampled(
        "homogeneity-bound", 1e-12, [scale](SampleStream::Draw& d) { return SampleInputs{{}, {d.uniform(0.0, scale)}}; },
        [cone, varphi, e = ctx.e()](const SampleInputs& in) {
          const double r = in.scalars[0];
          return exclusion(cone, r * varphi(e) - varphi(r * e));
        });
    checks.push_back(fixed_case_check("scalar-modulus", {SampleInputs{}}, 0.0, [ctx, varphi](const SampleInputs&) {
      return defect_of(xi(ctx, varphi(ctx.e())) < 1.0);
    }));
  } else {
    // phi(r e) << r e for every r > 0
    sampled(
        "strict-drop", 0.0, [](SampleStream::Draw& d) { return SampleInputs{{}, {d.log_uniform(1e-6, 1e6)}}; },
        [cone, varphi, e = ctx.e()](const SampleInputs& in) {
          const double r = in.scalars[0];
          return defect_of(cone.slack(r * e - varphi(r * e)) > 0.0);
        });
  }

  // p(Tx, Ty) <= phi(p(x, y))
  checks.push_back(pair_check(space, map, sampler, "dominance", 1e-12, [space, map, varphi, cone](const SampleInputs& in) {
    const Vector& x = in.vectors[0];
    const Vector& y = in.vectors[1];
    return exclusion(cone, varphi(space.p(x, y)) - space.p(map(x), map(y)));
  }));
  return run_checks(checks);
}

FixedPointReport boyd_wong_solve(const ConeMetricSpace& space, const ScalarizationContext& ctx,
                                 const MapDescriptor& map, const VarphiDescriptor& varphi, const Vector& x0,
                                 const SolveOptions& options) {
  require_matching(space, ctx, map, x0);
  require_options(options);
  if (options.verify) {
    const PropertyReport check = verify_nonlinear_hypotheses(space, ctx, map, varphi, options.sampler);
    if (!check.passed()) throw Error(ErrorCode::kHypothesisViolated, describe_failure(check));
  }

  std::optional<long double> factor;
  if (varphi.kind() == VarphiDescriptor::Kind::kScale) {
    const double k = xi(ctx, varphi(ctx.e()));
    if (!(k < 1.0)) {
      throw Error(ErrorCode::kHypothesisViolated, "scalar-modulus: xi_e(phi(e)) = " + std::to_string(k) + " >= 1");
    }
    factor = static_cast<long double>(k) / (1.0L - k);
  }

  Trace trace{{}, space, ctx, options.trace_family};
  Point x = widen(x0);
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t n = 1; n <= options.max_iter; ++n) {
    Point next = step(map, x, n);
    const double d = trace.record(residual(space, next, x, n));
    x = std::move(next);
    trace.report.iterations = n;
    const bool done = factor ? *factor * d <= options.tol : (previous <= options.tol && d <= options.tol);
    if (done) {
      trace.report.converged = true;
      break;
    }
    previous = d;
  }
  trace.report.final_point = narrow(x, trace.report.iterations);
  trace.report.contraction_estimate = max_ratio_second_half(trace.report.residual_history);
  trace.report.certificate = options.verify ? Certificate::kBoydWongVerified : Certificate::kUnverified;
  return trace.report;
}

PropertyReport verify_weak_contraction(const ConeMetricSpace& space, const MapDescriptor& map,
                                       const VarphiDescriptor& varphi, const SampleSpec& sampler) {
  sampler.validate();
  const Cone cone = space.value_cone();
  std::vector<SampledCheck> checks;
  checks.push_back(
      pair_check(space, map, sampler, "weak-contraction", 1e-12, [space, map, varphi, cone](const SampleInputs& in) {
        const Vector& x = in.vectors[0];
        const Vector& y = in.vectors[1];
        const Vector d = space.p(x, y);
        const Vector lhs = space.p(map(x), map(y));
        return exclusion(cone, d - varphi(d) - lhs);
      }));
  return run_checks(checks);
}

FixedPointReport weak_contraction_iterate(const ConeMetricSpace& space, const ScalarizationContext& ctx,
                                          const MapDescriptor& map, const VarphiDescriptor& varphi,
                                          const Vector& x0, std::size_t budget, double stop_tol,
                                          const std::optional<SeminormFamily>& trace_family) {
  require_matching(space, ctx, map, x0);
  if (budget == 0) throw Error(ErrorCode::kInvalidArgument, "iteration budget must be >= 1");
  if (!(stop_tol >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "stop tolerance must be >= 0");
  const Cone& cone = ctx.cone();
  if (varphi(Vector::zeros(cone.dim())).max_norm() != 0.0) {
    throw Error(ErrorCode::kHypothesisViolated, "zero: phi(0) != 0");
  }

  Trace trace{{}, space, ctx, trace_family};
  Point x = widen(x0);
  std::optional<Vector> previous;
  for (std::size_t n = 1; n <= budget; ++n) {
    Point next = step(map, x, n);
    Vector r = residual(space, x, next, n);
    const double d = trace.record(r);
    x = std::move(next);
    trace.report.iterations = n;
    if (previous) {
      if (!order_leq(cone, r, *previous, kOrderSlack)) {
        trace.report.failure_step = n;
        trace.report.hypothesis_failure =
            "residual chain increases at step " + std::to_string(n) + ": " + r.to_string() + " vs " + previous->to_string();
        break;
      }
      if (!order_leq(cone, r, *previous - varphi(*previous), kOrderSlack)) {
        trace.report.failure_step = n;
        trace.report.hypothesis_failure = "weak contraction fails on the orbit pair at step " + std::to_string(n);
        break;
      }
    }
    if (d <= stop_tol) {
      trace.report.converged = true;
      break;
    }
    previous = std::move(r);
  }
  trace.report.final_point = narrow(x, trace.report.iterations);
  trace.report.contraction_estimate = max_ratio_second_half(trace.report.residual_history);
  trace.report.certificate =
      trace.report.failure_step ? Certificate::kUnverified : Certificate::kWeakContractionMonotone;
  return trace.report;
}

}  // namespace tvscone
