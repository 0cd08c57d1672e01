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

#include "tvscone/random.hpp"

#include <cmath>
#include <vector>

#include "tvscone/error.hpp"

namespace tvscone {

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

SampleStream::SampleStream(std::uint64_t seed, std::string_view name) : key_(mix64(seed ^ mix64(fnv1a64(name)))) {}

std::uint64_t SampleStream::Draw::bits() {
  std::uint64_t x = mix64(key_ ^ mix64(index_));
  x = mix64(x + 0xD1B54A32D192ED03ULL * (++lane_));
  return x;
}

double SampleStream::Draw::unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

double SampleStream::Draw::uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

double SampleStream::Draw::log_uniform(double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) throw Error(ErrorCode::kInvalidArgument, "log_uniform needs 0 < lo <= hi");
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

std::size_t SampleStream::Draw::index_below(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "index_below(0)");
  return static_cast<std::size_t>(bits() % n);
}

Vector SampleStream::Draw::vector(std::size_t dim, double lo, double hi) {
  std::vector<double> out(dim);
  for (double& v : out) v = uniform(lo, hi);
  return Vector(std::move(out));
}

}  // namespace tvscone
