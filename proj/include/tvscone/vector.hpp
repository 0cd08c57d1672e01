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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tvscone {

// A finite-valued element of R^n. Every constructor rejects NaN and infinity,
// and arithmetic that overflows throws instead of producing a non-finite entry.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<double> entries);
  Vector(std::initializer_list<double> entries);

  static Vector zeros(std::size_t dim);
  static Vector filled(std::size_t dim, double value);

  std::size_t dim() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  double at(std::size_t i) const;
  std::span<const double> entries() const noexcept { return entries_; }
  const std::vector<double>& data() const noexcept { return entries_; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  double max_norm() const noexcept;
  double euclidean_norm() const noexcept;
  double dot(const Vector& other) const;

  Vector operator-() const;
  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(double scale);

  friend bool operator==(const Vector&, const Vector&) = default;

  std::string to_string() const;

 private:
  std::vector<double> entries_;
};

Vector operator+(Vector lhs, const Vector& rhs);
Vector operator-(Vector lhs, const Vector& rhs);
Vector operator*(double scale, Vector v);
Vector operator*(Vector v, double scale);
Vector hadamard(const Vector& lhs, const Vector& rhs);
Vector abs(const Vector& v);

// Throws kDimensionMismatch naming `what` when the dimensions differ.
void require_same_dim(const Vector& lhs, const Vector& rhs, const char* what);

// Parses "1.5,-2,3e-4". Whitespace around entries is ignored.
Vector parse_vector(std::string_view text);

}  // namespace tvscone
