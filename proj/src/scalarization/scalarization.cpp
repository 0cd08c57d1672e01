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

#include "tvscone/scalarization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tvscone/error.hpp"

namespace tvscone {
namespace {

constexpr int kMaxDoublings = 200;

// slack(t e - y); the sign decides membership of y in t e - P.
double level_slack(const Cone& cone, const Vector& e, const Vector& y, double t) {
  std::vector<double> v(y.dim());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = t * e[i] - y[i];
  return cone.slack(Vector(std::move(v)));
}

double xi_orthant(const Vector& e, const Vector& y) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < y.dim(); ++i) best = std::max(best, y[i] / e[i]);
  return best;
}

double xi_polyhedral(const Cone& cone, const Vector& e, const Vector& y) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& row : cone.constraints()) best = std::max(best, row.dot(y) / row.dot(e));
  return best;
}

// Membership of t e - y in the Lorentz cone, squared:
//   a t^2 - 2 b t + c >= 0  with  t e_n - y_n >= 0,
// a = e_n^2 - |e'|^2 > 0, b = e_n y_n - e'.y', c = y_n^2 - |y'|^2.
// The feasible t form the ray [t+, inf) above the larger root.
std::optional<double> xi_lorentz(const ScalarizationContext& ctx, const Vector& y) {
  const Vector& e = ctx.e();
  const std::size_t n = y.dim();
  double e_norm = 0.0;
  double y_norm = 0.0;
  double cross = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    e_norm = std::hypot(e_norm, e[i]);
    y_norm = std::hypot(y_norm, y[i]);
    cross += e[i] * y[i];
  }
  const double en = e[n - 1];
  const double yn = y[n - 1];
  const double a = (en - e_norm) * (en + e_norm);
  const double b = en * yn - cross;
  const double c = (yn - y_norm) * (yn + y_norm);
  // The true discriminant is nonnegative (reverse Cauchy-Schwarz for a
  // timelike e); negative values are rounding.
  const double disc = std::max(0.0, b * b - a * c);
  const double root = std::sqrt(disc);
  double t;
  if (b > 0.0) {
    t = (b + root) / a;
  } else if (b - root != 0.0) {
    t = c / (b - root);
  } else {
    t = 0.0;  // b == 0 and disc == 0 forces c == 0
  }
  if (!std::isfinite(t)) return std::nullopt;

  // Validate by substitution on both sides of the root.
  const double tol = ctx.tol();
  const double scale = std::max({1.0, std::abs(t), y.max_norm()});
  const bool member = level_slack(ctx.cone(), e, y, t) >= -tol * scale;
  const bool below_excluded = level_slack(ctx.cone(), e, y, t - 10.0 * tol * scale) < 0.0;
  if (!member || !below_excluded) return std::nullopt;
  return t;
}

}  // namespace

ScalarizationContext::ScalarizationContext(Cone cone, Vector e, double tol)
    : cone_(std::move(cone)), e_(std::move(e)), tol_(tol) {
  if (e_.dim() != cone_.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "e has dimension " + std::to_string(e_.dim()) + ", cone " + cone_.label());
  }
  if (!(tol_ > 0.0 && tol_ <= 1e-3)) throw Error(ErrorCode::kInvalidArgument, "tol must lie in (0, 1e-3]");
  if (!cone_.strictly_contains(e_, kDefaultMargin)) {
    throw Error(ErrorCode::kNotInterior, "e = " + e_.to_string() + " is not interior to " + cone_.label());
  }
}

double xi(const ScalarizationContext& ctx, const Vector& y) {
  if (y.dim() != ctx.cone().dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "y has dimension " + std::to_string(y.dim()) + ", cone " + ctx.cone().label());
  }
  switch (ctx.cone().kind()) {
    case ConeKind::kOrthant:
      return xi_orthant(ctx.e(), y);
    case ConeKind::kPolyhedral:
      return xi_polyhedral(ctx.cone(), ctx.e(), y);
    case ConeKind::kLorentz:
      if (auto t = xi_lorentz(ctx, y)) return *t;
      return xi_bisection(ctx, y);
  }
  return xi_bisection(ctx, y);
}

double xi_bisection(const ScalarizationContext& ctx, const Vector& y) {
  if (y.dim() != ctx.cone().dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "y dimension differs from the cone");
  }
  auto member = [&](double t) { return level_slack(ctx.cone(), ctx.e(), y, t) >= 0.0; };
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;
  int doublings = 0;
  if (member(0.0)) {
    hi = 0.0;
    lo = -step;
    while (member(lo)) {
      if (++doublings > kMaxDoublings) throw Error(ErrorCode::kBracketNotFound, "no lower bracket for xi");
      hi = lo;
      step *= 2.0;
      lo = -step;
    }
  } else {
    lo = 0.0;
    hi = step;
    while (!member(hi)) {
      if (++doublings > kMaxDoublings) throw Error(ErrorCode::kBracketNotFound, "no upper bracket for xi");
      lo = hi;
      step *= 2.0;
      hi = step;
    }
  }
  while (hi - lo > ctx.tol()) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (member(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<MonotonicityWitness> non_strong_monotonicity_witness(const ScalarizationContext& ctx) {
  if (ctx.cone().kind() != ConeKind::kOrthant || ctx.cone().dim() < 2) return std::nullopt;
  const Vector& e = ctx.e();
  std::vector<double> lowered(e.begin(), e.end());
  lowered.back() = 0.0;
  MonotonicityWitness w{e, Vector(std::move(lowered)), 0.0, 0.0};
  w.xi_y1 = xi(ctx, w.y1);
  w.xi_y2 = xi(ctx, w.y2);
  return w;
}

}  // namespace tvscone
