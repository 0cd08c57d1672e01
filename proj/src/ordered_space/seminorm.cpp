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

#include "tvscone/seminorm.hpp"

#include <algorithm>
#include <cmath>

#include "tvscone/error.hpp"

namespace tvscone {

Seminorm Seminorm::coordinate(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "seminorm index is 1-based");
  return Seminorm(Kind::kCoordinate, k, {});
}

Seminorm Seminorm::partial_abs_sum(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "seminorm index is 1-based");
  return Seminorm(Kind::kPartialAbsSum, k, {});
}

Seminorm Seminorm::weighted_abs_sum(std::vector<double> weights) {
  if (weights.empty()) throw Error(ErrorCode::kInvalidArgument, "weighted seminorm needs weights");
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw Error(ErrorCode::kInvalidArgument, "seminorm weights must be >= 0");
  }
  return Seminorm(Kind::kWeightedAbsSum, 0, std::move(weights));
}

std::size_t Seminorm::min_dim() const noexcept {
  return kind_ == Kind::kWeightedAbsSum ? weights_.size() : index_;
}

std::string Seminorm::label() const {
  switch (kind_) {
    case Kind::kCoordinate:
      return "coordinate" + std::to_string(index_);
    case Kind::kPartialAbsSum:
      return "partial_abs_sum" + std::to_string(index_);
    case Kind::kWeightedAbsSum:
      return "weighted_abs_sum" + std::to_string(weights_.size());
  }
  return "seminorm";
}

double Seminorm::operator()(const Vector& v) const {
  if (v.dim() < min_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                label() + " needs dimension >= " + std::to_string(min_dim()) + ", got " + std::to_string(v.dim()));
  }
  switch (kind_) {
    case Kind::kCoordinate:
      return std::abs(v[index_ - 1]);
    case Kind::kPartialAbsSum: {
      double s = 0.0;
      for (std::size_t i = 0; i < index_; ++i) s += std::abs(v[i]);
      return s;
    }
    case Kind::kWeightedAbsSum: {
      double s = 0.0;
      for (std::size_t i = 0; i < weights_.size(); ++i) s += weights_[i] * std::abs(v[i]);
      return s;
    }
  }
  return 0.0;
}

double seminorm_eval(const Seminorm& q, const Vector& v) { return q(v); }

SeminormFamily::SeminormFamily(std::vector<Seminorm> members, std::size_t truncation, bool declared_monotone)
    : members_(std::move(members)), truncation_(truncation), monotone_(declared_monotone) {
  if (members_.empty()) throw Error(ErrorCode::kInvalidArgument, "seminorm family is empty");
  if (truncation_ == 0) throw Error(ErrorCode::kInvalidArgument, "truncation level must be positive");
}

SeminormFamily SeminormFamily::coordinate(std::size_t n) {
  std::vector<Seminorm> members;
  for (std::size_t k = 1; k <= n; ++k) members.push_back(Seminorm::coordinate(k));
  return SeminormFamily(std::move(members), n);
}

SeminormFamily SeminormFamily::partial_sums(std::size_t n) {
  std::vector<Seminorm> members;
  for (std::size_t k = 1; k <= n; ++k) members.push_back(Seminorm::partial_abs_sum(k));
  return SeminormFamily(std::move(members), n);
}

std::size_t SeminormFamily::active_count() const noexcept { return std::min(truncation_, members_.size()); }

std::size_t SeminormFamily::min_dim() const noexcept {
  std::size_t d = 0;
  for (std::size_t k = 0; k < active_count(); ++k) d = std::max(d, members_[k].min_dim());
  return d;
}

double SeminormFamily::h(const Vector& u) const {
  double sum = 0.0;
  double weight = 0.5;
  for (std::size_t k = 0; k < active_count(); ++k, weight *= 0.5) {
    const double q = members_[k](u);
    sum += weight * (q / (1.0 + q));
  }
  return sum;
}

double h_eval(const SeminormFamily& family, const Vector& u) { return family.h(u); }

}  // namespace tvscone
