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
#include <span>
#include <vector>

#include "tvscone/cone.hpp"
#include "tvscone/property.hpp"
#include "tvscone/random.hpp"
#include "tvscone/seminorm.hpp"
#include "tvscone/vector.hpp"

namespace tvscone {

bool cone_contains(const Cone& cone, const Vector& v, double tol);
// 0 << v, with the relative margin margin * max(1, |v|_inf).
bool cone_strictly_contains(const Cone& cone, const Vector& v, double margin);

// x <= y  iff  y - x in P
bool order_leq(const Cone& cone, const Vector& x, const Vector& y, double tol);
// x << y  iff  y - x in int P
bool order_ll(const Cone& cone, const Vector& x, const Vector& y, double margin);

// Componentwise maximum. Only the orthant is strongly minihedral in this
// catalog; other kinds throw kNotStronglyMinihedral.
Vector least_upper_bound(const Cone& cone, std::span<const Vector> points);

struct ConeValidationReport {
  PropertyReport checks;
  Vector interior_witness;
  std::size_t rank = 0;

  bool passed() const { return checks.passed(); }
};

// Sampled certification of the cone axioms. Building the cone from the
// descriptor throws kPointednessUncertified for rank-deficient polyhedra.
ConeValidationReport validate_cone(const ConeDescriptor& descriptor, std::size_t sample_budget,
                                   std::uint64_t rng_seed);
ConeValidationReport validate_cone(const Cone& cone, std::size_t sample_budget, std::uint64_t rng_seed);
std::vector<SampledCheck> cone_validation_checks(const Cone& cone, std::size_t sample_budget,
                                                 std::uint64_t rng_seed);

// Sampling helpers shared by the property suites. `scale` bounds the sup norm
// of the generated points (up to the cone's geometry).
Vector sample_in_cone(const Cone& cone, SampleStream::Draw& draw, double scale);
// Points whose normalized slack is at least a fixed fraction of the witness's.
Vector sample_in_interior(const Cone& cone, SampleStream::Draw& draw, double scale);

}  // namespace tvscone
