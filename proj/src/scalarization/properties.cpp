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

#include "tvscone/ordered_space.hpp"
#include "tvscone/random.hpp"
#include "tvscone/scalarization.hpp"

namespace tvscone {
namespace {

double level_slack(const ScalarizationContext& ctx, const Vector& y, double t) {
  return ctx.cone().slack(t * ctx.e() - y);
}

struct CheckBuilder {
  const ScalarizationContext& ctx;
  const SampleSpec& spec;
  std::string prefix;
  std::vector<SampledCheck>& out;

  template <class Generate, class Defect>
  void add(const std::string& name, double tolerance, Generate generate, Defect defect) {
    SampledCheck c;
    c.name = prefix + name;
    c.count = spec.count;
    c.tolerance = tolerance;
    SampleStream stream(spec.seed, c.name);
    const SampleSpec range = spec;
    c.generate = [stream, range, cone = ctx.cone(), generate](std::uint64_t i) {
      auto draw = stream.at(i);
      return generate(cone, range, draw);
    };
    c.defect = [context = ctx, defect](const SampleInputs& in) { return defect(context, in); };
    out.push_back(std::move(c));
  }
};

Vector sample_point(const Cone& cone, const SampleSpec& s, SampleStream::Draw& d) {
  return d.vector(cone.dim(), s.lo, s.hi);
}

double range_scale(const SampleSpec& s) { return std::max(std::abs(s.lo), std::abs(s.hi)); }

}  // namespace

std::vector<SampledCheck> scalarization_checks(const ScalarizationContext& ctx, const SampleSpec& spec) {
  spec.validate();
  std::vector<SampledCheck> checks;
  CheckBuilder b{ctx, spec, ctx.cone().label() + ":", checks};
  const double slack10 = 10.0 * ctx.tol();

  auto one_point = [](const Cone& k, const SampleSpec& s, SampleStream::Draw& d) {
    return SampleInputs{{sample_point(k, s, d)}, {}};
  };

  // xi(y) <= t  <=>  y in t e - P, probed just above the level.
  b.add("level-membership", 0.0, one_point, [slack10](const ScalarizationContext& c, const SampleInputs& in) {
    const double t = xi(c, in.vectors[0]) + slack10;
    return defect_of(level_slack(c, in.vectors[0], t) >= 0.0);
  });
  // xi(y) > t  <=>  y not in t e - P, probed just below the level.
  b.add("level-exclusion", 0.0, one_point, [slack10](const ScalarizationContext& c, const SampleInputs& in) {
    const double t = xi(c, in.vectors[0]) - slack10;
    return defect_of(level_slack(c, in.vectors[0], t) < 0.0);
  });
  // xi(y) < t  <=>  y in t e - int P
  b.add("interior-membership", 0.0, one_point,
        [slack10](const ScalarizationContext& c, const SampleInputs& in) {
          const double t = xi(c, in.vectors[0]) + slack10;
          return defect_of(level_slack(c, in.vectors[0], t) > 0.0);
        });
  // xi(y) >= t  <=>  y not in t e - int P
  b.add("interior-exclusion", 0.0, one_point,
        [slack10](const ScalarizationContext& c, const SampleInputs& in) {
          const double t = xi(c, in.vectors[0]) - slack10;
          return defect_of(!(level_slack(c, in.vectors[0], t) > 0.0));
        });

  // Membership is a step function of t with its jump at xi(y).
  b.add(
      "membership-step", 0.0,
      [](const Cone& k, const SampleSpec& s, SampleStream::Draw& d) {
        Vector y = sample_point(k, s, d);
        const double offset = d.log_uniform(1e-7, range_scale(s));
        const double side = d.index_below(2) == 0 ? -1.0 : 1.0;
        return SampleInputs{{y}, {side * offset}};
      },
      [slack10](const ScalarizationContext& c, const SampleInputs& in) {
        const double x = xi(c, in.vectors[0]);
        const double offset = in.scalars[0];
        if (std::abs(offset) <= slack10) return 0.0;
        const bool member = level_slack(c, in.vectors[0], x + offset) >= 0.0;
        return defect_of(member == (offset > 0.0));
      });

  b.add(
      "positive-homogeneity", ctx.tol(),
      [](const Cone& k, const SampleSpec& s, SampleStream::Draw& d) {
        Vector y = sample_point(k, s, d);
        const double lambda = d.index_below(32) == 0 ? 1.0 : d.log_uniform(1e-6, 1e3);
        return SampleInputs{{y}, {lambda}};
      },
      [](const ScalarizationContext& c, const SampleInputs& in) {
        const double lambda = in.scalars[0];
        const double base = xi(c, in.vectors[0]);
        const double scaled = xi(c, lambda * in.vectors[0]);
        return std::abs(scaled - lambda * base) / ((1.0 + lambda) * (1.0 + std::abs(base)));
      });

  // |xi(y + delta v) - xi(y)| <= delta * max(xi(v), xi(-v)) for a unit v.
  SampledCheck* stability = nullptr;
  b.add(
      "local-stability", slack10,
      [](const Cone& k, const SampleSpec& s, SampleStream::Draw& d) {
        Vector y = sample_point(k, s, d);
        Vector v = d.vector(k.dim(), -1.0, 1.0);
        if (v.max_norm() == 0.0) v = Vector::filled(k.dim(), 1.0);
        v *= 1.0 / v.max_norm();
        return SampleInputs{{y, v}, {d.log_uniform(1e-8, 1e-1)}};
      },
      [](const ScalarizationContext& c, const SampleInputs& in) {
        const Vector& y = in.vectors[0];
        const Vector& v = in.vectors[1];
        const double delta = in.scalars[0];
        const double lipschitz = std::max(xi(c, v), xi(c, -v));
        return std::abs(xi(c, y + delta * v) - xi(c, y)) - delta * lipschitz;
      });
  stability = &checks.back();
  stability->finalize = [gen = stability->generate, ctx](CheckResult& r) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < r.evaluated; ++i) {
      SampleInputs in = gen(i);
      worst = std::max(worst, std::max(xi(ctx, in.vectors[1]), xi(ctx, -in.vectors[1])));
    }
    r.metrics["lipschitz_estimate"] = worst;
  };

  b.add(
      "monotone", slack10,
      [](const Cone& k, const SampleSpec& s, SampleStream::Draw& d) {
        Vector y2 = sample_point(k, s, d);
        Vector p = sample_in_cone(k, d, range_scale(s));
        return SampleInputs{{y2 + p, y2}, {}};
      },
      [](const ScalarizationContext& c, const SampleInputs& in) {
        return xi(c, in.vectors[1]) - xi(c, in.vectors[0]);
      });

  b.add(
      "subadditive", slack10,
      [](const Cone& k, const SampleSpec& s, SampleStream::Draw& d) {
        return SampleInputs{{sample_point(k, s, d), sample_point(k, s, d)}, {}};
      },
      [](const ScalarizationContext& c, const SampleInputs& in) {
        const Vector& y1 = in.vectors[0];
        const Vector& y2 = in.vectors[1];
        return xi(c, y1 + y2) - xi(c, y1) - xi(c, y2);
      });

  b.add(
      "strictly-monotone", 0.0,
      [](const Cone& k, const SampleSpec& s, SampleStream::Draw& d) {
        Vector y2 = sample_point(k, s, d);
        Vector p = sample_in_interior(k, d, range_scale(s));
        return SampleInputs{{y2 + p, y2}, {}};
      },
      [](const ScalarizationContext& c, const SampleInputs& in) {
        return defect_of(xi(c, in.vectors[1]) < xi(c, in.vectors[0]));
      });

  b.add("closed-form-vs-bisection", slack10, one_point,
        [](const ScalarizationContext& c, const SampleInputs& in) {
          return std::abs(xi(c, in.vectors[0]) - xi_bisection(c, in.vectors[0]));
        });

  return checks;
}

PropertyReport check_scalarization_properties(const ScalarizationContext& ctx, const SampleSpec& sampler) {
  auto checks = scalarization_checks(ctx, sampler);
  return run_checks(checks);
}

}  // namespace tvscone
