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

#include "tvscone/cone_metric.hpp"
#include "tvscone/error.hpp"
#include "tvscone/fixed_point.hpp"
#include "tvscone/random.hpp"

namespace tvscone {
namespace {

const ConeMetricSpace kPlane = ConeMetricSpace::componentwise_abs(2);
const ScalarizationContext kUnit(Cone::orthant(2), Vector{1.0, 1.0});

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

double sup_dist(const Vector& x, const Vector& y) { return (x - y).max_norm(); }

TEST(VerifyContraction, Examples) {
  const auto half = MapDescriptor::diagonal_affine(Vector{0.5, 0.5}, Vector{0.0, 0.0});
  EXPECT_TRUE(verify_contraction(kPlane, half, 0.5, SampleSpec{2000}).passed());
  const auto skew = MapDescriptor::diagonal_affine(Vector{0.9, 0.2}, Vector{0.0, 0.0});
  const auto bad = verify_contraction(kPlane, skew, 0.5, SampleSpec{2000});
  EXPECT_FALSE(bad.passed());
  ASSERT_TRUE(bad.checks.front().counterexample.has_value());
  EXPECT_FALSE(verify_contraction(kPlane, MapDescriptor::identity(2), 0.99, SampleSpec{2000}).passed());
}

TEST(BanachSolve, Examples) {
  const auto affine = MapDescriptor::diagonal_affine(Vector{0.5, 0.5}, Vector{1.0, 1.0});
  const auto r = banach_solve(kPlane, kUnit, affine, 0.5, Vector{0.0, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.certificate, Certificate::kBanachVerified);
  EXPECT_LE(sup_dist(r.final_point, Vector{2.0, 2.0}), 1e-10);

  const auto constant = MapDescriptor::diagonal_affine(Vector{0.0, 0.0}, Vector{3.0, -1.0});
  const auto c = banach_solve(kPlane, kUnit, constant, 0.0, Vector{7.0, 7.0});
  EXPECT_TRUE(c.converged);
  EXPECT_EQ(c.final_point, (Vector{3.0, -1.0}));
  EXPECT_LE(c.iterations, 2u);

  const auto slow = MapDescriptor::diagonal_affine(Vector{0.9, 0.9}, Vector{0.1, 0.2});
  const auto s = banach_solve(kPlane, kUnit, slow, 0.9, Vector{5.0, 5.0});
  EXPECT_TRUE(s.converged);
  EXPECT_LE(sup_dist(slow(s.final_point), s.final_point), 1e-9);
  EXPECT_LE(sup_dist(s.final_point, Vector{1.0, 2.0}), 1e-9);
}

TEST(BanachSolve, MaxIterAndHypothesis) {
  const auto slow = MapDescriptor::diagonal_affine(Vector{0.9, 0.9}, Vector{0.1, 0.2});
  SolveOptions few;
  few.max_iter = 5;
  EXPECT_FALSE(banach_solve(kPlane, kUnit, slow, 0.9, Vector{5.0, 5.0}, few).converged);
  EXPECT_EQ(code_of([&] { banach_solve(kPlane, kUnit, slow, 0.5, Vector{5.0, 5.0}); }),
            ErrorCode::kHypothesisViolated);
  SolveOptions trust;
  trust.verify = false;
  EXPECT_EQ(banach_solve(kPlane, kUnit, slow, 0.9, Vector{5.0, 5.0}, trust).certificate, Certificate::kUnverified);
}

TEST(BanachSolve, GeometricDecayAndAPosterioriBound) {
  const SampleStream stream(31, "banach-bound");
  for (std::uint64_t i = 0; i < 30; ++i) {
    auto d = stream.at(i);
    const Vector a = d.vector(2, -0.9, 0.9);
    const Vector b = d.vector(2, -1, 1);
    const Vector x0 = d.vector(2, -10, 10);
    const auto map = MapDescriptor::diagonal_affine(a, b);
    const double k = map.lipschitz_bound();
    const Vector star{b[0] / (1 - a[0]), b[1] / (1 - a[1])};
    const auto r = banach_solve(kPlane, kUnit, map, k, x0);
    ASSERT_TRUE(r.converged);
    for (std::size_t n = 0; n + 1 < r.residual_history.size(); ++n) {
      EXPECT_LE(r.residual_history[n + 1], k * r.residual_history[n] + 1e-12);
    }
    // Replay the orbit on the test side in the same precision as the solver.
    std::vector<long double> x{x0[0], x0[1]};
    for (std::size_t n = 0; n < r.residual_history.size(); ++n) {
      const std::vector<long double> next{a[0] * x[0] + b[0], a[1] * x[1] + b[1]};
      const long double step = std::max(std::abs(next[0] - x[0]), std::abs(next[1] - x[1]));
      const long double err = std::max(std::abs(next[0] - star[0]), std::abs(next[1] - star[1]));
      EXPECT_LE(static_cast<double>(err), k / (1 - k) * static_cast<double>(step) + 1e-12);
      EXPECT_NEAR(r.residual_history[n], static_cast<double>(step), 1e-12 * (1 + static_cast<double>(step)));
      x = next;
    }
  }
}

TEST(ScalarizeVarphi, Examples) {
  const ScalarizationContext lor(Cone::lorentz(3), Vector{0.1, 0.2, 1.0});
  EXPECT_NEAR(scalarize_varphi(lor, VarphiDescriptor::scale(0.5), 2.0), 1.0, 1e-12);
  EXPECT_EQ(scalarize_varphi(kUnit, VarphiDescriptor::coordinate_ratio(), 0.0), 0.0);
  EXPECT_EQ(scalarize_varphi(kUnit, VarphiDescriptor::scale(0.5), 0.0), 0.0);
  EXPECT_EQ(scalarize_varphi(kUnit, VarphiDescriptor::coordinate_ratio(), 1.0), 0.5);
  EXPECT_THROW(scalarize_varphi(kUnit, VarphiDescriptor::scale(0.5), -1.0), Error);
}

TEST(ScalarizeVarphi, RatioIsBelowIdentityNondecreasingSubadditive) {
  const auto phi = VarphiDescriptor::coordinate_ratio();
  const SampleStream stream(41, "phi-hat");
  for (std::uint64_t i = 0; i < 2000; ++i) {
    auto d = stream.at(i);
    const double r = d.log_uniform(1e-6, 1e6);
    const double s = d.log_uniform(1e-6, 1e6);
    const double fr = scalarize_varphi(kUnit, phi, r);
    EXPECT_LT(fr, r);
    EXPECT_NEAR(fr, r / (1 + r), 1e-15);
    if (r <= s) EXPECT_LE(fr, scalarize_varphi(kUnit, phi, s));
    EXPECT_LE(scalarize_varphi(kUnit, phi, r + s), fr + scalarize_varphi(kUnit, phi, s) + 1e-12);
  }
}

TEST(BoydWong, Examples) {
  SolveOptions opts;
  opts.tol = 1e-8;
  const auto ratio = boyd_wong_solve(kPlane, kUnit, MapDescriptor::coordinate_ratio(),
                                     VarphiDescriptor::coordinate_ratio(), Vector{1.0, 1.0}, opts);
  EXPECT_TRUE(ratio.converged);
  EXPECT_EQ(ratio.certificate, Certificate::kBoydWongVerified);
  EXPECT_LE(ratio.final_point.max_norm(), 2e-4);

  const auto affine = MapDescriptor::diagonal_affine(Vector{0.5, 0.5}, Vector{0.0, 0.0});
  const auto scaled = boyd_wong_solve(kPlane, kUnit, affine, VarphiDescriptor::scale(0.5), Vector{3.0, 4.0});
  EXPECT_TRUE(scaled.converged);
  EXPECT_LE(scaled.final_point.max_norm(), 1e-10);

  const auto err = code_of(
      [&] { boyd_wong_solve(kPlane, kUnit, affine, VarphiDescriptor::scale(1.0), Vector{3.0, 4.0}); });
  EXPECT_EQ(err, ErrorCode::kHypothesisViolated);
}

TEST(BoydWong, HypothesisReportNamesFailure) {
  const auto r = verify_nonlinear_hypotheses(kPlane, kUnit, MapDescriptor::identity(2),
                                             VarphiDescriptor::coordinate_ratio(), SampleSpec{500});
  EXPECT_FALSE(r.passed());
  ASSERT_NE(r.find("dominance"), nullptr);
  EXPECT_FALSE(r.find("dominance")->passed);
  EXPECT_TRUE(r.find("increasing")->passed);
}

TEST(WeakContraction, ClippedQuadraticOrbit) {
  const auto r = weak_contraction_iterate(kPlane, kUnit, MapDescriptor::clipped_quadratic(),
                                          VarphiDescriptor::half_square(), Vector{0.5, 0.5}, 100000, 1e-6);
  EXPECT_EQ(r.certificate, Certificate::kWeakContractionMonotone);
  EXPECT_FALSE(r.failure_step.has_value());
  ASSERT_FALSE(r.residual_history.empty());
  for (std::size_t n = 0; n + 1 < r.residual_history.size(); ++n) {
    EXPECT_LE(r.residual_history[n + 1], r.residual_history[n] + 1e-12);
  }
  EXPECT_LE(r.residual_history.back(), 1e-6);
}

TEST(WeakContraction, IdentityFailsInequality) {
  EXPECT_FALSE(verify_weak_contraction(kPlane, MapDescriptor::identity(2), VarphiDescriptor::coordinate_ratio(),
                                       SampleSpec{200})
                   .passed());
}

TEST(WeakContraction, FixedStartHasZeroResiduals) {
  const auto r = weak_contraction_iterate(kPlane, kUnit, MapDescriptor::clipped_quadratic(),
                                          VarphiDescriptor::half_square(), Vector{0.0, 0.0}, 50);
  EXPECT_EQ(r.certificate, Certificate::kWeakContractionMonotone);
  for (double v : r.residual_history) EXPECT_EQ(v, 0.0);
}

TEST(Maps, CatalogValues) {
  EXPECT_EQ(MapDescriptor::coordinate_ratio()(Vector{1.0, 3.0}), (Vector{0.5, 0.75}));
  EXPECT_EQ(MapDescriptor::clipped_quadratic()(Vector{0.5, 2.0, -1.0}), (Vector{0.375, 0.5, 0.0}));
  const auto comp = MapDescriptor::composite(
      {MapDescriptor::diagonal_affine(Vector{2.0}, Vector{0.0}), MapDescriptor::coordinate_ratio()});
  EXPECT_EQ(comp(Vector{1.0}), (Vector{2.0 / 3.0}));
  EXPECT_EQ(comp.lipschitz_bound(), 2.0);
  EXPECT_THROW(MapDescriptor::coordinate_ratio()(Vector{-1.0}), Error);
}

TEST(Trace, CsvLayout) {
  FixedPointReport r;
  r.residual_history = {0.5, 0.25};
  std::ostringstream out;
  write_trace_csv(out, r);
  EXPECT_EQ(out.str(), "n,residual_dp,residual_dS\n1,0.5,\n2,0.25,\n");
}

}  // namespace
}  // namespace tvscone
