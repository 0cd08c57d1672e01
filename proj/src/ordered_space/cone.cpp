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

#include "tvscone/cone.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "tvscone/error.hpp"
#include "tvscone/random.hpp"

namespace tvscone {

std::string to_string(ConeKind kind) {
  switch (kind) {
    case ConeKind::kOrthant:
      return "orthant";
    case ConeKind::kLorentz:
      return "lorentz";
    case ConeKind::kPolyhedral:
      return "polyhedral";
  }
  return "unknown";
}

Cone Cone::orthant(std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::kInvalidArgument, "orthant dimension must be positive");
  Cone cone(ConeKind::kOrthant, dim);
  cone.witness_ = Vector::filled(dim, 1.0);
  return cone;
}

Cone Cone::lorentz(std::size_t dim) {
  if (dim < 2) throw Error(ErrorCode::kInvalidArgument, "Lorentz cone needs dimension >= 2");
  Cone cone(ConeKind::kLorentz, dim);
  std::vector<double> w(dim, 0.0);
  w.back() = 1.0;
  cone.witness_ = Vector(std::move(w));
  return cone;
}

Cone Cone::polyhedral(const std::vector<std::vector<double>>& rows, std::size_t search_budget, std::uint64_t seed) {
  if (rows.empty()) throw Error(ErrorCode::kInvalidArgument, "polyhedral cone needs at least one constraint row");
  const std::size_t n = rows.front().size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "polyhedral constraint rows are empty");
  Cone cone(ConeKind::kPolyhedral, n);
  Eigen::MatrixXd a(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "polyhedral row " + std::to_string(r) + " has length " +
                                                     std::to_string(rows[r].size()) + ", expected " +
                                                     std::to_string(n));
    }
    Vector row(rows[r]);
    const double norm = row.euclidean_norm();
    if (norm == 0.0) throw Error(ErrorCode::kInvalidArgument, "polyhedral row " + std::to_string(r) + " is zero");
    row *= 1.0 / norm;
    for (std::size_t c = 0; c < n; ++c) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c];
    cone.rows_.push_back(std::move(row));
  }

  // P ∩ -P = {v : Av = 0} is trivial iff A has full column rank.
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  const double largest = sv.size() > 0 ? sv(0) : 0.0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRankThreshold * largest) ++rank;
  }
  if (rank < n) {
    throw Error(ErrorCode::kPointednessUncertified,
                "constraint matrix has numerical rank " + std::to_string(rank) + " < " + std::to_string(n));
  }

  // Interior witness: best normalized slack among the row sum and sampled
  // directions on the unit sphere.
  auto score = [&cone](const Vector& v) {
    const double norm = v.max_norm();
    return norm > 0.0 ? cone.slack(v) / norm : -std::numeric_limits<double>::infinity();
  };
  Vector best = Vector::zeros(n);
  for (const auto& row : cone.rows_) best += row;
  double best_score = score(best);
  SampleStream stream(seed, "polyhedral-interior-witness");
  for (std::size_t i = 0; i < search_budget; ++i) {
    auto draw = stream.at(i);
    Vector candidate = draw.vector(n, -1.0, 1.0);
    const double s = score(candidate);
    if (s > best_score) {
      best_score = s;
      best = std::move(candidate);
    }
  }
  if (!(best_score > 1e-9)) {
    throw Error(ErrorCode::kEmptyInterior,
                "no interior point found in " + std::to_string(search_budget) + " samples");
  }
  best *= 1.0 / best.max_norm();
  cone.witness_ = std::move(best);
  return cone;
}

Cone Cone::from_descriptor(const ConeDescriptor& d) {
  switch (d.kind) {
    case ConeKind::kOrthant:
      return orthant(d.dim);
    case ConeKind::kLorentz:
      return lorentz(d.dim);
    case ConeKind::kPolyhedral:
      if (d.dim != 0 && !d.rows.empty() && d.rows.front().size() != d.dim) {
        throw Error(ErrorCode::kDimensionMismatch, "polyhedral rows do not match declared dimension");
      }
      return polyhedral(d.rows);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown cone kind");
}

std::optional<double> Cone::normal_constant() const {
  if (kind_ == ConeKind::kOrthant) return 1.0;
  return std::nullopt;
}

ConeDescriptor Cone::descriptor() const {
  ConeDescriptor d;
  d.kind = kind_;
  d.dim = dim_;
  for (const auto& r : rows_) d.rows.push_back(r.data());
  return d;
}

std::string Cone::label() const { return to_string(kind_) + std::to_string(dim_); }

double Cone::slack(const Vector& v) const {
  if (v.dim() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "vector of dimension " + std::to_string(v.dim()) + " vs cone " +
                                                   label());
  }
  switch (kind_) {
    case ConeKind::kOrthant:
      return *std::min_element(v.begin(), v.end());
    case ConeKind::kLorentz: {
      double norm = 0.0;
      for (std::size_t i = 0; i + 1 < dim_; ++i) norm = std::hypot(norm, v[i]);
      return v[dim_ - 1] - norm;
    }
    case ConeKind::kPolyhedral: {
      double s = std::numeric_limits<double>::infinity();
      for (const auto& row : rows_) s = std::min(s, row.dot(v));
      return s;
    }
  }
  return 0.0;
}

bool Cone::contains(const Vector& v, double tol) const {
  if (!(tol >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "membership tolerance must be >= 0");
  return slack(v) >= -tol;
}

bool Cone::strictly_contains(const Vector& v, double margin) const {
  if (!(margin > 0.0)) throw Error(ErrorCode::kInvalidArgument, "interior margin must be > 0");
  return slack(v) > margin * std::max(1.0, v.max_norm());
}

bool operator==(const Cone& a, const Cone& b) {
  return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.rows_ == b.rows_;
}

}  // namespace tvscone
