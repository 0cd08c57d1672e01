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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "tvscone/error.hpp"
#include "tvscone/ordered_space.hpp"
#include "tvscone/random.hpp"
#include "tvscone/scalarization.hpp"

namespace tvscone {
namespace {

// Test-side oracle: bisection on t -> [t e - y in P] using membership written
// out by hand, independent of the library's slack functions.
double oracle_xi(const std::function<bool(const Vector&)>& member, const Vector& e, const Vector& y) {
  double lo = -1.0;
  double hi = 1.0;
  while (member(lo * e - y)) lo *= 2.0;
  while (!member(hi * e - y)) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    (member(mid * e - y) ? hi : lo) = mid;
  }
  return hi;
}

bool lorentz_member(const Vector& v) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < v.dim(); ++i) s += v[i] * v[i];
  return v[v.dim() - 1] >= std::sqrt(s);
}

TEST(Xi, Examples) {
  const ScalarizationContext ctx(Cone::orthant(2), Vector{1.0, 2.0});
  EXPECT_EQ(xi(ctx, Vector{3.0, 4.0}), 3.0);
  EXPECT_NEAR(xi_bisection(ctx, Vector{3.0, 4.0}), 3.0, 10 * ctx.tol());

  const ScalarizationContext lor(Cone::lorentz(3), Vector{0.1, -0.2, 1.0});
  const ScalarizationContext poly(Cone::polyhedral({{2.0, -1.0}, {-1.0, 2.0}}), Vector{1.0, 1.0});
  for (const auto* c : {&ctx, &lor, &poly}) {
    EXPECT_EQ(xi(*c, Vector::zeros(c->e().dim())), 0.0);
    EXPECT_NEAR(xi(*c, c->e()), 1.0, 1e-12);
  }
}

TEST(Xi, Errors) {
  EXPECT_EQ([] {
    try {
      ScalarizationContext(Cone::orthant(2), Vector{1.0, 0.0});
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kConfig;
  }(),
            ErrorCode::kNotInterior);
  EXPECT_THROW(ScalarizationContext(Cone::orthant(2), Vector{1.0, 1.0}, 0.1), Error);
  EXPECT_THROW(xi(ScalarizationContext(Cone::orthant(2), Vector{1.0, 1.0}), Vector{1.0}), Error);
}

TEST(XiBisection, Examples) {
  const ScalarizationContext one(Cone::orthant(1), Vector{2.0});
  EXPECT_NEAR(xi_bisection(one, Vector{5.0}), 2.5, one.tol());
  const ScalarizationContext lor(Cone::lorentz(3), Vector{0.0, 0.0, 1.0});
  EXPECT_NEAR(xi_bisection(lor, Vector{3.0, 4.0, 0.0}), 5.0, lor.tol());
  EXPECT_NEAR(xi(lor, Vector{3.0, 4.0, 0.0}), 5.0, 1e-12);
  for (const auto* c : {&one, &lor}) EXPECT_NEAR(xi_bisection(*c, -1.0 * c->e()), -1.0, c->tol());
}

TEST(Xi, LorentzClosedFormMatchesTestOracle) {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<double> raw(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) raw[i] = (i % 2 ? -0.3 : 0.3) / std::sqrt(double(n - 1));
    raw[n - 1] = 1.0;
    const Vector e(raw);
    const ScalarizationContext ctx(Cone::lorentz(n), e);
    const SampleStream stream(1, "lorentz-oracle");
    for (std::uint64_t i = 0; i < 500; ++i) {
      auto d = stream.at(i);
      const Vector y = d.vector(n, -10, 10);
      EXPECT_NEAR(xi(ctx, y), oracle_xi(lorentz_member, e, y), 1e-9) << y.to_string();
    }
  }
}

TEST(Xi, PolyhedralClosedFormMatchesTestOracle) {
  const Cone cone = Cone::polyhedral({{1.0, 0.0, 1.0}, {-1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}, {0.0, -1.0, 1.0}});
  const Vector e{0.2, -0.1, 1.0};
  const ScalarizationContext ctx(cone, e);
  auto member = [](const Vector& v) {
    return v[0] + v[2] >= 0 && -v[0] + v[2] >= 0 && v[1] + v[2] >= 0 && -v[1] + v[2] >= 0;
  };
  const SampleStream stream(2, "pyramid-oracle");
  for (std::uint64_t i = 0; i < 2000; ++i) {
    auto d = stream.at(i);
    const Vector y = d.vector(3, -10, 10);
    EXPECT_NEAR(xi(ctx, y), oracle_xi(member, e, y), 1e-9);
  }
}

TEST(Xi, SampledInvariants) {
  const ScalarizationContext ctx(Cone::lorentz(4), Vector{0.2, -0.2, 0.2, 1.0});
  const double tol = ctx.tol();
  const SampleStream stream(4, "xi-invariants");
  for (std::uint64_t i = 0; i < 3000; ++i) {
    auto d = stream.at(i);
    const Vector y = d.vector(4, -10, 10);
    const double t = xi(ctx, y);
    EXPECT_TRUE(cone_contains(ctx.cone(), (t + 10 * tol) * ctx.e() - y, 0.0));
    EXPECT_FALSE(cone_contains(ctx.cone(), (t - 10 * tol) * ctx.e() - y, 0.0));
    const double lambda = d.uniform(1e-3, 1e3);
    EXPECT_LE(std::abs(xi(ctx, lambda * y) - lambda * t), tol * (1 + lambda) * (1 + std::abs(t)));
    const Vector z = d.vector(4, -10, 10);
    EXPECT_LE(xi(ctx, y + z), t + xi(ctx, z) + tol);
    EXPECT_LE(std::abs(xi_bisection(ctx, y) - t), 10 * tol);
  }
}

TEST(CheckScalarizationProperties, OrthantPassesAtFullBudget) {
  const ScalarizationContext ctx(Cone::orthant(3), Vector{1.0, 1.25, 1.5});
  const auto report = check_scalarization_properties(ctx, SampleSpec{10000});
  EXPECT_TRUE(report.passed());
  for (const auto& c : report.checks) {
    EXPECT_EQ(c.evaluated, 10000u) << c.name;
    EXPECT_LE(c.max_violation, 1e-9) << c.name;
  }
}

TEST(CheckScalarizationProperties, TrivialCases) {
  const ScalarizationContext ctx(Cone::orthant(2), Vector{1.0, 2.0});
  const Vector y{-3.0, 7.0};
  EXPECT_EQ(xi(ctx, 1.0 * y), xi(ctx, y));
  EXPECT_LE(xi(ctx, y), xi(ctx, y));
}

TEST(NonStrongMonotonicity, OrthantWitness) {
  const ScalarizationContext ctx(Cone::orthant(2), Vector{1.0, 1.0});
  EXPECT_EQ(xi(ctx, Vector{1.0, 1.0}), 1.0);
  EXPECT_EQ(xi(ctx, Vector{1.0, 0.0}), 1.0);
  const auto w = non_strong_monotonicity_witness(ctx);
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(w->y1, w->y2);
  EXPECT_TRUE(order_leq(ctx.cone(), w->y2, w->y1, 0.0));
  EXPECT_EQ(w->xi_y1, w->xi_y2);
  EXPECT_FALSE(non_strong_monotonicity_witness(ScalarizationContext(Cone::orthant(1), Vector{1.0})).has_value());
}

}  // namespace
}  // namespace tvscone
