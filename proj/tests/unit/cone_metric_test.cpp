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
#include <sstream>
#include <vector>

#include "../oracles.hpp"
#include "tvscone/cone_metric.hpp"
#include "tvscone/error.hpp"
#include "tvscone/ordered_space.hpp"
#include "tvscone/random.hpp"

namespace tvscone {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

ConeMetricSpace three_point() {
  const Vector z{0.0, 0.0}, ab{1.0, 0.0}, bc{0.0, 1.0}, ac{1.0, 1.0};
  return ConeMetricSpace::finite_table(Cone::orthant(2), {Vector{0.0}, Vector{1.0}, Vector{2.0}},
                                       {{z, ab, ac}, {ab, z, bc}, {ac, bc, z}});
}

TEST(PEval, Examples) {
  EXPECT_EQ(p_eval(ConeMetricSpace::componentwise_abs(2), Vector{1.0, 2.0}, Vector{3.0, 1.0}), (Vector{2.0, 1.0}));
  EXPECT_EQ(p_eval(ConeMetricSpace::weighted(Vector{2.0, 1.0}), Vector{0.0, 0.0}, Vector{1.0, 1.0}),
            (Vector{2.0, 1.0}));
  const auto t = three_point();
  for (const auto& x : t.points()) EXPECT_EQ(p_eval(t, x, x), Vector::zeros(2));
  EXPECT_EQ(p_eval(t, Vector{0.0}, Vector{2.0}), (Vector{1.0, 1.0}));
  EXPECT_EQ(code_of([&] { p_eval(t, Vector{0.5}, Vector{1.0}); }), ErrorCode::kUnknownPoint);
}

TEST(FiniteTable, RejectsTriangleViolation) {
  const Vector z{0.0}, big{3.0}, one{1.0};
  EXPECT_EQ(code_of([&] {
              ConeMetricSpace::finite_table(Cone::orthant(1), {Vector{0.0}, Vector{1.0}, Vector{2.0}},
                                            {{z, one, big}, {one, z, one}, {big, one, z}});
            }),
            ErrorCode::kAxiomViolated);
}

TEST(DpEval, Examples) {
  const auto s = ConeMetricSpace::componentwise_abs(2);
  const ScalarizationContext unit(Cone::orthant(2), Vector{1.0, 1.0});
  EXPECT_EQ(dp_eval(s, unit, Vector{0.0, 0.0}, Vector{2.0, 3.0}), 3.0);
  EXPECT_EQ(dp_eval(s, unit, Vector{2.0, 3.0}, Vector{2.0, 3.0}), 0.0);
  const ScalarizationContext e12(Cone::orthant(2), Vector{1.0, 2.0});
  EXPECT_EQ(dp_eval(s, e12, Vector{0.0, 0.0}, Vector{2.0, 3.0}), 2.0);
  const ScalarizationContext lor(Cone::lorentz(2), Vector{0.0, 1.0});
  EXPECT_EQ(code_of([&] { dp_eval(s, lor, Vector{0.0, 0.0}, Vector{1.0, 1.0}); }), ErrorCode::kConeMismatch);
}

TEST(DSEval, Examples) {
  const auto s = ConeMetricSpace::componentwise_abs(2);
  const auto f = SeminormFamily::coordinate(2);
  EXPECT_DOUBLE_EQ(dS_eval(s, f, Vector{0.0, 0.0}, Vector{1.0, 1.0}), 0.375);
  EXPECT_NEAR(testing::grid_inf_h(f, Vector{1.0, 1.0}, 4.0), 0.375, 1e-9);
  EXPECT_EQ(dS_eval(s, f, Vector{1.0, 1.0}, Vector{1.0, 1.0}), 0.0);

  std::vector<double> y(20, 0.0);
  y[0] = 0.1;
  EXPECT_NEAR(dS_eval(ConeMetricSpace::componentwise_abs(20), SeminormFamily::coordinate(20), Vector::zeros(20),
                      Vector(y)),
              0.1 / 2.2, 1e-15);
}

TEST(DSEval, Errors) {
  const auto s = ConeMetricSpace::componentwise_abs(2);
  const SeminormFamily undeclared({Seminorm::coordinate(1), Seminorm::coordinate(2)}, 2, false);
  EXPECT_EQ(code_of([&] { dS_eval(s, undeclared, Vector{0.0, 0.0}, Vector{1.0, 1.0}); }),
            ErrorCode::kMonotonicityRequired);
  const Vector z{0.0, 0.0}, d{0.0, 1.0};
  const auto lor = ConeMetricSpace::finite_table(Cone::lorentz(2), {Vector{0.0}, Vector{1.0}}, {{z, d}, {d, z}});
  EXPECT_EQ(code_of([&] { dS_eval(lor, SeminormFamily::coordinate(2), Vector{0.0}, Vector{1.0}); }),
            ErrorCode::kUnsupportedOrder);
}

TEST(DSEval, AgreesWithGridOracle) {
  const auto s = ConeMetricSpace::componentwise_abs(2);
  const SeminormFamily families[] = {SeminormFamily::coordinate(2), SeminormFamily::partial_sums(2)};
  const SampleStream stream(13, "grid-oracle");
  for (const auto& f : families) {
    for (std::uint64_t i = 0; i < 40; ++i) {
      auto d = stream.at(i);
      const Vector x = d.vector(2, -5, 5);
      const Vector y = d.vector(2, -5, 5);
      EXPECT_NEAR(dS_eval(s, f, x, y), testing::grid_inf_h(f, p_eval(s, x, y), 12.0), 1e-6);
    }
  }
}

TEST(ScalarMetrics, BruteForceOnThreePointTable) {
  const auto t = three_point();
  const ScalarizationContext ctx(Cone::orthant(2), Vector{1.0, 1.0});
  const auto f = SeminormFamily::coordinate(2);
  for (const auto& x : t.points()) {
    for (const auto& y : t.points()) {
      EXPECT_EQ(dp_eval(t, ctx, x, y) == 0.0, x == y);
      EXPECT_EQ(dS_eval(t, f, x, y), dS_eval(t, f, y, x));
      for (const auto& z : t.points()) {
        EXPECT_LE(dp_eval(t, ctx, x, y), dp_eval(t, ctx, x, z) + dp_eval(t, ctx, z, y));
        EXPECT_LE(dS_eval(t, f, x, y), dS_eval(t, f, x, z) + dS_eval(t, f, z, y));
      }
    }
  }
  EXPECT_TRUE(check_metric_axioms(t, SampleSpec{1}).passed());
  EXPECT_TRUE(check_metric_axioms(ConeMetricSpace::weighted(Vector{2.0, 1.0, 0.5}), SampleSpec{2000}).passed());
}

TEST(DetectConvergence, Examples) {
  const auto s = ConeMetricSpace::componentwise_abs(2);
  std::vector<Vector> seq;
  for (int n = 1; n <= 10; ++n) seq.push_back(Vector{1.0 / n, 1.0 / n});
  const std::vector<Vector> half{Vector{0.5, 0.5}};
  EXPECT_TRUE(detect_cone_convergence(s, seq, Vector{0.0, 0.0}, half, 3));
  EXPECT_FALSE(detect_cone_convergence(s, seq, Vector{0.0, 0.0}, half, 2));

  const std::vector<Vector> constant(5, Vector{1.0, 1.0});
  EXPECT_TRUE(detect_cone_convergence(s, constant, Vector{1.0, 1.0}, default_probes(Vector{1.0, 1.0}), 1));
  EXPECT_FALSE(detect_cone_convergence(s, constant, Vector{0.0, 0.0}, half, 1));

  const std::vector<Vector> bad{Vector{1.0, 0.0}};
  EXPECT_EQ(code_of([&] { detect_cone_convergence(s, seq, Vector{0.0, 0.0}, bad, 1); }), ErrorCode::kNotInterior);
}

TEST(DetectCauchy, Examples) {
  const auto s = ConeMetricSpace::componentwise_abs(2);
  std::vector<Vector> seq;
  for (int n = 1; n <= 10; ++n) seq.push_back(Vector{1.0 / n, 1.0 / n});
  const std::vector<Vector> unit{Vector{1.0, 1.0}};
  EXPECT_TRUE(detect_cone_cauchy(s, seq, unit, 2));
  EXPECT_TRUE(detect_cone_cauchy(s, std::vector<Vector>(4, Vector{3.0, 1.0}), unit, 1));
  std::vector<Vector> alt;
  for (int n = 0; n < 8; ++n) alt.push_back(n % 2 ? Vector{1.0, 1.0} : Vector{0.0, 0.0});
  EXPECT_FALSE(detect_cone_cauchy(s, alt, std::vector<Vector>{Vector{0.5, 0.5}}, 1));
}

TEST(DetectConvergence, ProbeLadderAgreesWithDp) {
  const auto s = ConeMetricSpace::componentwise_abs(3);
  const Vector e{1.0, 1.25, 1.5};
  const ScalarizationContext ctx(Cone::orthant(3), e);
  const auto probes = dyadic_probes(e, 12);
  const SampleStream stream(21, "ladder");
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto d = stream.at(i);
    const Vector x = d.vector(3, -5, 5);
    const Vector v = d.vector(3, -1, 1);
    std::vector<Vector> seq;
    for (int n = 1; n <= 80; ++n) seq.push_back(x + std::pow(0.5, n) * v);
    const bool cone = detect_cone_convergence(s, seq, x, probes, 73);
    const double tail_dp = dp_eval(s, ctx, seq[72], x);
    EXPECT_EQ(cone, tail_dp < std::ldexp(1.0, -12));
  }
}

TEST(Diameter, Examples) {
  const auto s = ConeMetricSpace::componentwise_abs(2);
  const std::vector<Vector> a{Vector{0.0, 0.0}, Vector{1.0, 0.0}, Vector{0.0, 2.0}};
  const SeminormFamily f({Seminorm::coordinate(1), Seminorm::coordinate(2)}, 2);
  const auto r = diameter(s, a, f);
  ASSERT_TRUE(r.delta.has_value());
  EXPECT_EQ(*r.delta, (Vector{1.0, 2.0}));
  EXPECT_EQ(r.delta_q[1], 2.0);
  EXPECT_TRUE(r.bounded_above);
  EXPECT_EQ(*r.witness_bound, (Vector{2.0, 3.0}));

  const auto single = diameter(s, std::vector<Vector>{Vector{4.0, 4.0}}, f);
  EXPECT_EQ(*single.delta, Vector::zeros(2));
  for (double q : single.delta_q) EXPECT_EQ(q, 0.0);
}

TEST(Diameter, NonOrthantHasWitnessOnly) {
  const Vector z{0.0, 0.0}, d{0.5, 1.0};
  const auto lor = ConeMetricSpace::finite_table(Cone::lorentz(2), {Vector{0.0}, Vector{1.0}}, {{z, d}, {d, z}});
  const auto r = diameter(lor, lor.points(), SeminormFamily::coordinate(2));
  EXPECT_FALSE(r.delta.has_value());
  ASSERT_TRUE(r.witness_bound.has_value());
  EXPECT_TRUE(cone_contains(lor.value_cone(), *r.witness_bound - d, 1e-12));
}

TEST(BallMembership, Examples) {
  const auto s = ConeMetricSpace::componentwise_abs(2);
  const Vector c{0.0, 0.0}, r{1.0, 1.0};
  EXPECT_TRUE(ball_membership(s, c, r, Vector{1.0, 1.0}, true));
  EXPECT_FALSE(ball_membership(s, c, r, Vector{1.0, 1.0}, false));
  EXPECT_TRUE(ball_membership(s, c, r, Vector{0.5, 0.5}, false));
  EXPECT_EQ(code_of([&] { ball_membership(s, c, Vector{1.0, 0.0}, c, true); }), ErrorCode::kNotInterior);
}

TEST(SequenceCsv, RoundTrip) {
  const std::vector<Vector> seq{Vector{0.1, -2.0}, Vector{1.0 / 3.0, 1e-300}};
  std::stringstream io;
  write_sequence_csv(io, seq);
  EXPECT_EQ(read_sequence_csv(io), seq);
}

}  // namespace
}  // namespace tvscone
