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

#include <algorithm>
#include <cmath>

#include "tvscone/error.hpp"
#include "tvscone/fixed_point.hpp"

namespace tvscone {

MapDescriptor MapDescriptor::diagonal_affine(Vector a, Vector b) {
  require_same_dim(a, b, "affine map coefficients");
  if (a.empty()) throw Error(ErrorCode::kInvalidArgument, "affine map needs a positive dimension");
  MapDescriptor m(Kind::kDiagonalAffine);
  m.a_ = std::move(a);
  m.b_ = std::move(b);
  return m;
}

MapDescriptor MapDescriptor::identity(std::size_t dim) {
  return diagonal_affine(Vector::filled(dim, 1.0), Vector::zeros(dim));
}

MapDescriptor MapDescriptor::coordinate_ratio() { return MapDescriptor(Kind::kCoordinateRatio); }

MapDescriptor MapDescriptor::clipped_quadratic() { return MapDescriptor(Kind::kClippedQuadratic); }

MapDescriptor MapDescriptor::composite(std::vector<MapDescriptor> maps) {
  if (maps.empty()) throw Error(ErrorCode::kInvalidArgument, "composite map needs at least one part");
  MapDescriptor m(Kind::kComposite);
  m.parts_ = std::move(maps);
  return m;
}

std::string MapDescriptor::label() const {
  switch (kind_) {
    case Kind::kDiagonalAffine:
      return "diagonal_affine";
    case Kind::kCoordinateRatio:
      return "coordinate_ratio";
    case Kind::kClippedQuadratic:
      return "clipped_quadratic";
    case Kind::kComposite: {
      std::string s = "composite(";
      for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + parts_[i].label();
      return s + ")";
    }
  }
  return "map";
}

std::optional<std::size_t> MapDescriptor::fixed_dim() const {
  if (kind_ == Kind::kDiagonalAffine) return a_.dim();
  for (const auto& p : parts_) {
    if (auto d = p.fixed_dim()) return d;
  }
  return std::nullopt;
}

bool MapDescriptor::in_domain(std::span<const double> x) const {
  if (auto d = fixed_dim(); d && *d != x.size()) return false;
  switch (kind_) {
    case Kind::kCoordinateRatio:
      return std::all_of(x.begin(), x.end(), [](double s) { return s >= 0.0; });
    case Kind::kComposite: {
      std::vector<double> current(x.begin(), x.end());
      for (const auto& part : parts_) {
        if (!part.in_domain(current)) return false;
        current = part.apply<double>(current);
      }
      return true;
    }
    default:
      return true;
  }
}

Vector MapDescriptor::project_to_domain(const Vector& x) const {
  if (kind_ == Kind::kCoordinateRatio) return abs(x);
  if (kind_ == Kind::kComposite) return parts_.front().project_to_domain(x);
  return x;
}

template <class Real>
std::vector<Real> MapDescriptor::apply(std::span<const Real> x) const {
  std::vector<Real> out(x.begin(), x.end());
  switch (kind_) {
    case Kind::kDiagonalAffine:
      if (x.size() != a_.dim()) {
        throw Error(ErrorCode::kDimensionMismatch, "affine map of dimension " + std::to_string(a_.dim()) +
                                                       " applied to dimension " + std::to_string(x.size()));
      }
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Real>(a_[i]) * x[i] + static_cast<Real>(b_[i]);
      break;
    case Kind::kCoordinateRatio:
      for (auto& s : out) {
        if (!(s >= 0)) throw Error(ErrorCode::kInvalidArgument, "coordinate ratio map needs nonnegative input");
        s = s / (1 + s);
      }
      break;
    case Kind::kClippedQuadratic:
      for (auto& s : out) {
        const Real c = std::clamp<Real>(s, 0, 1);
        s = c - c * c / 2;
      }
      break;
    case Kind::kComposite:
      for (const auto& part : parts_) out = part.apply<Real>(out);
      break;
  }
  return out;
}

template std::vector<double> MapDescriptor::apply<double>(std::span<const double>) const;
template std::vector<Extended> MapDescriptor::apply<Extended>(std::span<const Extended>) const;

Vector MapDescriptor::operator()(const Vector& x) const { return Vector(apply<double>(x.entries())); }

double MapDescriptor::lipschitz_bound() const {
  switch (kind_) {
    case Kind::kDiagonalAffine: {
      double k = 0.0;
      for (double v : a_) k = std::max(k, std::abs(v));
      return k;
    }
    case Kind::kCoordinateRatio:
    case Kind::kClippedQuadratic:
      return 1.0;
    case Kind::kComposite: {
      double k = 1.0;
      for (const auto& p : parts_) k *= p.lipschitz_bound();
      return k;
    }
  }
  return 1.0;
}

VarphiDescriptor VarphiDescriptor::scale(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0) throw Error(ErrorCode::kInvalidArgument, "scale alpha must be >= 0");
  return VarphiDescriptor(Kind::kScale, alpha);
}

VarphiDescriptor VarphiDescriptor::coordinate_ratio() { return VarphiDescriptor(Kind::kCoordinateRatio, 0.0); }

VarphiDescriptor VarphiDescriptor::half_square() { return VarphiDescriptor(Kind::kHalfSquare, 0.0); }

std::string VarphiDescriptor::label() const {
  switch (kind_) {
    case Kind::kScale:
      return "scale";
    case Kind::kCoordinateRatio:
      return "coordinate_ratio";
    case Kind::kHalfSquare:
      return "half_square";
  }
  return "varphi";
}

Vector VarphiDescriptor::operator()(const Vector& u) const {
  std::vector<double> out(u.begin(), u.end());
  switch (kind_) {
    case Kind::kScale:
      for (double& s : out) s *= alpha_;
      break;
    case Kind::kCoordinateRatio:
      for (double& s : out) {
        if (!(s > -1.0)) throw Error(ErrorCode::kInvalidArgument, "coordinate ratio phi needs entries > -1");
        s = s / (1.0 + s);
      }
      break;
    case Kind::kHalfSquare:
      for (double& s : out) s = 0.5 * s * s;
      break;
  }
  return Vector(std::move(out));
}

std::string to_string(Certificate certificate) {
  switch (certificate) {
    case Certificate::kBanachVerified:
      return "BanachVerified";
    case Certificate::kBoydWongVerified:
      return "BoydWongVerified";
    case Certificate::kWeakContractionMonotone:
      return "WeakContractionMonotone";
    case Certificate::kUnverified:
      return "Unverified";
  }
  return "Unverified";
}

}  // namespace tvscone
