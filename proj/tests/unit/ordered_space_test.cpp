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
#include <vector>

#include "tvscone/error.hpp"
#include "tvscone/ordered_space.hpp"
#include "tvscone/random.hpp"
#include "tvscone/seminorm.hpp"

namespace tvscone {
namespace {

// Direct membership formulas, written independently of Cone::slack.
bool orthant_member(const Vector& v, double tol) {
  for (double x : v) {
    if (x < -tol) return false;
  }
  return true;
}

bool lorentz_member(const Vector& v, double tol) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < v.dim(); ++i) s += v[i] * v[i];
  return v[v.dim() - 1] >= std::sqrt(s) - tol;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(ConeContains, Examples) {
  EXPECT_TRUE(cone_contains(Cone::orthant(2), Vector{0.0, 0.0}, 0.0));
  EXPECT_TRUE(cone_contains(Cone::lorentz(3), Vector{3.0, 4.0, 5.0}, 0.0));
  EXPECT_FALSE(cone_contains(Cone::orthant(2), Vector{1.0, -1.0}, 1e-9));
}

TEST(ConeContains, ToleranceIsPerConstraintSlack) {
  EXPECT_TRUE(cone_contains(Cone::orthant(2), Vector{1.0, -1e-10}, 1e-9));
  EXPECT_FALSE(cone_contains(Cone::orthant(2), Vector{1.0, -1e-8}, 1e-9));
}

TEST(ConeContains, Errors) {
  EXPECT_EQ(code_of([] { cone_contains(Cone::orthant(2), Vector{1.0, 2.0, 3.0}, 0.0); }),
            ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([] { Vector{1.0, NAN}; }), ErrorCode::kNonFinite);
  EXPECT_EQ(code_of([] { Vector{1.0, INFINITY}; }), ErrorCode::kNonFinite);
}

TEST(ConeStrictlyContains, Examples) {
  EXPECT_TRUE(cone_strictly_contains(Cone::orthant(2), Vector{1.0, 1.0}, 1e-9));
  EXPECT_FALSE(cone_strictly_contains(Cone::orthant(2), Vector{1.0, 0.0}, 1e-9));
  EXPECT_TRUE(cone_strictly_contains(Cone::lorentz(3), Vector{0.0, 0.0, 1.0}, 1e-9));
  EXPECT_EQ(code_of([] { cone_strictly_contains(Cone::orthant(3), Vector{1.0, 1.0}, 1e-9); }),
            ErrorCode::kDimensionMismatch);
}

TEST(ConeStrictlyContains, MarginIsRelative) {
  // 1e-3 exceeds 1e-9 * 1 but not 1e-9 * 1e7.
  EXPECT_TRUE(cone_strictly_contains(Cone::orthant(2), Vector{1e-3, 1.0}, 1e-9));
  EXPECT_FALSE(cone_strictly_contains(Cone::orthant(2), Vector{1e-3, 1e7}, 1e-9));
}

TEST(Order, Examples) {
  const Cone p = Cone::orthant(2);
  EXPECT_TRUE(order_leq(p, Vector{1.0, 2.0}, Vector{1.0, 3.0}, 0.0));
  EXPECT_FALSE(order_ll(p, Vector{1.0, 2.0}, Vector{1.0, 3.0}, 1e-9));
  EXPECT_TRUE(order_ll(p, Vector{1.0, 2.0}, Vector{2.0, 3.0}, 1e-9));
}

TEST(Order, SampledReflexiveTransitiveAndStrictImpliesWeak) {
  for (const Cone& cone : {Cone::orthant(3), Cone::lorentz(3)}) {
    const SampleStream stream(7, "order-" + cone.label());
    for (std::uint64_t i = 0; i < 2000; ++i) {
      auto d = stream.at(i);
      const Vector x = d.vector(3, -5, 5);
      const Vector y = x + sample_in_cone(cone, d, 3.0);
      const Vector z = y + sample_in_cone(cone, d, 3.0);
      const Vector w = d.vector(3, -5, 5);
      EXPECT_TRUE(order_leq(cone, x, x, 0.0));
      EXPECT_TRUE(order_leq(cone, x, z, 1e-12));
      if (order_ll(cone, x, w, 1e-9)) EXPECT_TRUE(order_leq(cone, x, w, 0.0));
    }
  }
}

TEST(Membership, MatchesDirectFormulas) {
  const SampleStream stream(11, "membership");
  for (std::uint64_t i = 0; i < 5000; ++i) {
    auto d = stream.at(i);
    const Vector v = d.vector(4, -1, 1);
    EXPECT_EQ(cone_contains(Cone::orthant(4), v, 0.0), orthant_member(v, 0.0));
    EXPECT_EQ(cone_contains(Cone::lorentz(4), v, 0.0), lorentz_member(v, 0.0)) << v.to_string();
  }
}

TEST(Membership, AdditiveAndHomogeneousOnSamples) {
  const Cone poly = Cone::polyhedral({{2.0, -1.0}, {-1.0, 2.0}});
  for (const Cone& cone : {Cone::orthant(3), Cone::lorentz(4), poly}) {
    const SampleStream stream(3, "closure-" + cone.label());
    for (std::uint64_t i = 0; i < 2000; ++i) {
      auto d = stream.at(i);
      const Vector v = sample_in_cone(cone, d, 10.0);
      const Vector w = sample_in_cone(cone, d, 10.0);
      const double lambda = d.uniform(0.0, 100.0);
      EXPECT_TRUE(cone_contains(cone, v + w, 1e-12));
      EXPECT_TRUE(cone_contains(cone, lambda * v, 1e-12));
      const Vector vi = sample_in_interior(cone, d, 10.0);
      const Vector wi = sample_in_interior(cone, d, 10.0);
      EXPECT_TRUE(cone.slack(vi + wi) > 0.0);
      EXPECT_TRUE(cone.slack(d.uniform(1e-3, 1e3) * vi) > 0.0);
    }
  }
}

TEST(LeastUpperBound, Examples) {
  const std::vector<Vector> two{Vector{1.0, 3.0}, Vector{2.0, 1.0}};
  EXPECT_EQ(least_upper_bound(Cone::orthant(2), two), (Vector{2.0, 3.0}));
  const std::vector<Vector> one{Vector{5.0}};
  EXPECT_EQ(least_upper_bound(Cone::orthant(1), one), (Vector{5.0}));
  const std::vector<Vector> three{Vector{0.0, 0.0, 1.0}};
  EXPECT_EQ(code_of([&] { least_upper_bound(Cone::lorentz(3), three); }), ErrorCode::kNotStronglyMinihedral);
  EXPECT_EQ(code_of([] { least_upper_bound(Cone::orthant(2), std::vector<Vector>{}); }),
            ErrorCode::kInvalidArgument);
}

TEST(LeastUpperBound, IsLeastAmongSampledUpperBounds) {
  const Cone cone = Cone::orthant(3);
  const SampleStream stream(5, "lub");
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto d = stream.at(i);
    std::vector<Vector> pts;
    const std::size_t n = 1 + d.index_below(6);
    for (std::size_t k = 0; k < n; ++k) pts.push_back(d.vector(3, -4, 4));
    const Vector s = least_upper_bound(cone, pts);
    for (const auto& p : pts) EXPECT_TRUE(order_leq(cone, p, s, 0.0));
    const Vector u = s + sample_in_cone(cone, d, 2.0);
    EXPECT_TRUE(order_leq(cone, s, u, 0.0));
  }
}

TEST(Seminorm, Examples) {
  const SeminormFamily f = SeminormFamily::coordinate(2);
  EXPECT_DOUBLE_EQ(h_eval(f, Vector{1.0, 1.0}), 0.375);
  EXPECT_EQ(h_eval(f, Vector{0.0, 0.0}), 0.0);
  std::vector<double> c(20, 0.0);
  c[0] = 0.1;
  const double h = h_eval(SeminormFamily::coordinate(20), Vector(c));
  EXPECT_NEAR(h, 0.5 * (0.1 / 1.1), 1e-15);
  EXPECT_LT(h, 0.1);
}

TEST(Seminorm, CatalogValues) {
  const Vector v{1.0, -2.0, 3.0};
  EXPECT_EQ(seminorm_eval(Seminorm::coordinate(2), v), 2.0);
  EXPECT_EQ(seminorm_eval(Seminorm::partial_abs_sum(2), v), 3.0);
  EXPECT_EQ(seminorm_eval(Seminorm::weighted_abs_sum({0.5, 0.0, 1.0}), v), 3.5);
  EXPECT_THROW(seminorm_eval(Seminorm::coordinate(4), v), Error);
}

TEST(Seminorm, HBoundsSubadditivityAndMonotonicity) {
  const SeminormFamily families[] = {SeminormFamily::coordinate(4), SeminormFamily::partial_sums(4)};
  for (const auto& f : families) {
    const SampleStream stream(9, "h");
    for (std::uint64_t i = 0; i < 3000; ++i) {
      auto d = stream.at(i);
      const Vector u1 = d.vector(4, 0, 20);
      const Vector u2 = d.vector(4, 0, 20);
      const double h1 = f.h(u1);
      EXPECT_GE(h1, 0.0);
      EXPECT_LT(h1, 1.0);
      EXPECT_LE(f.h(u1 + u2), h1 + f.h(u2) + 1e-15);
      EXPECT_LE(h1, f.h(u1 + u2) + 1e-15);
    }
  }
}

TEST(ValidateCone, Examples) {
  const auto orth = validate_cone(Cone::orthant(3), 1000, 1);
  EXPECT_TRUE(orth.passed());
  EXPECT_EQ(orth.interior_witness, (Vector{1.0, 1.0, 1.0}));
  EXPECT_EQ(orth.rank, 3u);

  const auto ident = validate_cone(Cone::polyhedral({{1.0, 0.0}, {0.0, 1.0}}), 100, 1);
  EXPECT_TRUE(ident.passed());
  EXPECT_TRUE(cone_strictly_contains(Cone::orthant(2), ident.interior_witness, 1e-9));

  ConeDescriptor line{ConeKind::kPolyhedral, 2, {{1.0, 0.0}}};
  EXPECT_EQ(code_of([&] { validate_cone(line, 100, 1); }), ErrorCode::kPointednessUncertified);
}

TEST(ValidateCone, RejectsEmptyInterior) {
  // x1 >= 0 and -x1 >= 0 pin x1 = 0: rank 2 but no interior.
  EXPECT_EQ(code_of([] { Cone::polyhedral({{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}}); }), ErrorCode::kEmptyInterior);
}

TEST(ValidateCone, NormalConstantOnlyForOrthant) {
  EXPECT_EQ(Cone::orthant(2).normal_constant(), 1.0);
  EXPECT_FALSE(Cone::lorentz(2).normal_constant().has_value());
}

}  // namespace
}  // namespace tvscone
