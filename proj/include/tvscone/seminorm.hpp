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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tvscone/vector.hpp"

namespace tvscone {

// Catalog seminorms on R^n. Indices are 1-based. Every kind is monotone for the
// orthant order: 0 <= v <= w implies q(v) <= q(w).
class Seminorm {
 public:
  enum class Kind { kCoordinate, kPartialAbsSum, kWeightedAbsSum };

  // q(v) = |v_k|
  static Seminorm coordinate(std::size_t k);
  // q(v) = sum_{i <= k} |v_i|
  static Seminorm partial_abs_sum(std::size_t k);
  // q(v) = sum_i w_i |v_i|, w_i >= 0
  static Seminorm weighted_abs_sum(std::vector<double> weights);

  Kind kind() const noexcept { return kind_; }
  std::size_t index() const noexcept { return index_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  // Smallest vector dimension this seminorm can be evaluated on.
  std::size_t min_dim() const noexcept;
  std::string label() const;

  double operator()(const Vector& v) const;

  friend bool operator==(const Seminorm&, const Seminorm&) = default;

 private:
  Seminorm(Kind kind, std::size_t index, std::vector<double> weights)
      : kind_(kind), index_(index), weights_(std::move(weights)) {}

  Kind kind_;
  std::size_t index_;
  std::vector<double> weights_;
};

double seminorm_eval(const Seminorm& q, const Vector& v);

// Ordered seminorm family q_1, q_2, ... with the aggregate
//   h(u) = sum_{k=1}^{min(K, len)} 2^-k q_k(u) / (1 + q_k(u)),
// which lies in [0, 1). Truncating an infinite family at K changes h by at
// most 2^-K.
class SeminormFamily {
 public:
  SeminormFamily(std::vector<Seminorm> members, std::size_t truncation, bool declared_monotone = true);

  // {Coordinate{k}}_{k=1..n}: the coordinate form sum 2^-k |u_k| / (1 + |u_k|).
  static SeminormFamily coordinate(std::size_t n);
  // {PartialAbsSum{k}}_{k=1..n}.
  static SeminormFamily partial_sums(std::size_t n);

  const std::vector<Seminorm>& members() const noexcept { return members_; }
  std::size_t truncation() const noexcept { return truncation_; }
  std::size_t active_count() const noexcept;
  // True only when declared monotone and every member is a catalog kind.
  bool monotone() const noexcept { return monotone_; }
  std::size_t min_dim() const noexcept;

  double h(const Vector& u) const;

 private:
  std::vector<Seminorm> members_;
  std::size_t truncation_;
  bool monotone_;
};

double h_eval(const SeminormFamily& family, const Vector& u);

}  // namespace tvscone
