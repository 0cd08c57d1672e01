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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvscone/vector.hpp"

namespace tvscone {

enum class ConeKind { kOrthant, kLorentz, kPolyhedral };

std::string to_string(ConeKind kind);

// Plain description of a cone, as read from a config file. Building a Cone
// from it certifies pointedness and a nonempty interior.
struct ConeDescriptor {
  ConeKind kind = ConeKind::kOrthant;
  std::size_t dim = 0;
  std::vector<std::vector<double>> rows;  // polyhedral constraint matrix A, P = {v : Av >= 0}
};

// Numerical rank threshold for polyhedral pointedness, relative to the largest
// singular value.
inline constexpr double kRankThreshold = 1e-10;

// A pointed closed convex cone with nonempty interior in R^n.
//
// Membership is expressed through a single slack function: for the orthant the
// smallest coordinate, for the Lorentz cone v_n - |(v_1..v_{n-1})|_2, and for a
// polyhedral cone the smallest row product with the row-normalized constraint
// matrix. v is in P iff slack(v) >= 0 and in int P iff slack(v) > 0.
class Cone {
 public:
  static Cone orthant(std::size_t dim);
  static Cone lorentz(std::size_t dim);
  // Throws kPointednessUncertified if rank(A) < n, kEmptyInterior if no
  // interior witness is found within `search_budget` samples.
  static Cone polyhedral(const std::vector<std::vector<double>>& rows, std::size_t search_budget = 4096,
                         std::uint64_t seed = 0x5EED);
  static Cone from_descriptor(const ConeDescriptor& descriptor);

  ConeKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }
  // Only the orthant carries a known normal constant (K = 1).
  std::optional<double> normal_constant() const;
  // A point of int P; (1,..,1) for the orthant, (0,..,0,1) for the Lorentz cone.
  const Vector& interior_witness() const noexcept { return witness_; }
  // Row-normalized constraints of a polyhedral cone; empty otherwise.
  const std::vector<Vector>& constraints() const noexcept { return rows_; }
  ConeDescriptor descriptor() const;
  std::string label() const;

  double slack(const Vector& v) const;
  bool contains(const Vector& v, double tol) const;
  // Every constraint must exceed margin * max(1, |v|_inf).
  bool strictly_contains(const Vector& v, double margin) const;

  friend bool operator==(const Cone& a, const Cone& b);

 private:
  Cone(ConeKind kind, std::size_t dim) : kind_(kind), dim_(dim) {}

  ConeKind kind_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  Vector witness_;
};

}  // namespace tvscone
