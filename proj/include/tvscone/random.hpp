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
#include <string_view>

#include "tvscone/vector.hpp"

namespace tvscone {

// Counter-based sample source. Every draw is a pure function of
// (seed, stream name, sample index, lane), so streams never interfere and a
// sample can be regenerated from its index alone.
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::string_view name);

  class Draw {
   public:
    std::uint64_t bits();
    // Uniform on [0, 1) with 53 random bits.
    double unit();
    double uniform(double lo, double hi);
    // Log-uniform on [lo, hi], lo > 0.
    double log_uniform(double lo, double hi);
    std::size_t index_below(std::size_t n);
    Vector vector(std::size_t dim, double lo, double hi);

   private:
    friend class SampleStream;
    Draw(std::uint64_t key, std::uint64_t index) : key_(key), index_(index) {}
    std::uint64_t key_;
    std::uint64_t index_;
    std::uint64_t lane_ = 0;
  };

  Draw at(std::uint64_t index) const { return Draw(key_, index); }
  std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
};

std::uint64_t mix64(std::uint64_t x) noexcept;
std::uint64_t fnv1a64(std::string_view text) noexcept;

}  // namespace tvscone
