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

#include <algorithm>
#include <cstddef>
#include <limits>
#include <vector>

#include "tvscone/seminorm.hpp"
#include "tvscone/vector.hpp"

namespace tvscone::testing {

// Brute-force inf { h(u) : u >= p, u in [0, box]^n } by grid search with
// successive refinement around the best feasible node. Makes no use of
// monotonicity of h.
inline double grid_inf_h(const SeminormFamily& family, const Vector& p, double box) {
  const std::size_t n = p.dim();
  constexpr std::size_t kNodes = 41;
  std::vector<double> lo(n, 0.0);
  std::vector<double> hi(n, box);
  std::vector<double> best_u(n, box);
  double best = family.h(Vector(best_u));
  for (int level = 0; level < 40; ++level) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::vector<double> u(n);
      bool feasible = true;
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = lo[i] + (hi[i] - lo[i]) * static_cast<double>(idx[i]) / (kNodes - 1);
        feasible = feasible && u[i] >= p[i];
      }
      if (feasible) {
        const double h = family.h(Vector(u));
        if (h < best) {
          best = h;
          best_u = u;
        }
      }
      std::size_t k = 0;
      while (k < n && ++idx[k] == kNodes) idx[k++] = 0;
      if (k == n) break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double step = (hi[i] - lo[i]) / (kNodes - 1);
      lo[i] = std::max(0.0, best_u[i] - 2 * step);
      hi[i] = std::min(box, best_u[i] + 2 * step);
    }
  }
  return best;
}

}  // namespace tvscone::testing
