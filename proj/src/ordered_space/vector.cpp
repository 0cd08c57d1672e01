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

#include "tvscone/vector.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "tvscone/error.hpp"

namespace tvscone {
namespace {

void require_finite(std::span<const double> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!std::isfinite(entries[i])) {
      throw Error(ErrorCode::kNonFinite, "vector entry " + std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) { require_finite(entries_); }

Vector::Vector(std::initializer_list<double> entries) : entries_(entries) { require_finite(entries_); }

Vector Vector::zeros(std::size_t dim) { return Vector(std::vector<double>(dim, 0.0)); }

Vector Vector::filled(std::size_t dim, double value) { return Vector(std::vector<double>(dim, value)); }

double Vector::at(std::size_t i) const {
  if (i >= entries_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim()));
  }
  return entries_[i];
}

double Vector::max_norm() const noexcept {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

double Vector::euclidean_norm() const noexcept {
  double s = 0.0;
  for (double v : entries_) s = std::hypot(s, v);
  return s;
}

double Vector::dot(const Vector& other) const {
  require_same_dim(*this, other, "dot product");
  double s = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) s += entries_[i] * other.entries_[i];
  return s;
}

Vector Vector::operator-() const {
  Vector out = *this;
  for (double& v : out.entries_) v = -v;
  return out;
}

Vector& Vector::operator+=(const Vector& other) {
  require_same_dim(*this, other, "vector addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  require_finite(entries_);
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  require_same_dim(*this, other, "vector subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  require_finite(entries_);
  return *this;
}

Vector& Vector::operator*=(double scale) {
  for (double& v : entries_) v *= scale;
  require_finite(entries_);
  return *this;
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
Vector operator*(double scale, Vector v) { return v *= scale; }
Vector operator*(Vector v, double scale) { return v *= scale; }

Vector hadamard(const Vector& lhs, const Vector& rhs) {
  require_same_dim(lhs, rhs, "hadamard product");
  std::vector<double> out(lhs.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs[i] * rhs[i];
  return Vector(std::move(out));
}

Vector abs(const Vector& v) {
  std::vector<double> out(v.begin(), v.end());
  for (double& x : out) x = std::abs(x);
  return Vector(std::move(out));
}

void require_same_dim(const Vector& lhs, const Vector& rhs, const char* what) {
  if (lhs.dim() != rhs.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, std::string(what) + ": dimension " + std::to_string(lhs.dim()) +
                                                   " vs " + std::to_string(rhs.dim()));
  }
}

Vector parse_vector(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(start, comma - start);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::kInvalidArgument, "cannot parse vector entry '" + std::string(field) + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return Vector(std::move(out));
}

}  // namespace tvscone
