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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tvscone/cone.hpp"
#include "tvscone/cone_metric.hpp"
#include "tvscone/fixed_point.hpp"
#include "tvscone/harness.hpp"
#include "tvscone/scalarization.hpp"
#include "tvscone/seminorm.hpp"

namespace tvscone {

struct SolverConfig {
  std::optional<Vector> x0;
  // Contraction constant for the Banach solver; defaults to the map's known
  // Lipschitz bound.
  std::optional<double> k;
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  // Iteration budget and stopping residual of the weak-contraction run.
  std::size_t budget = 100000;
  double stop_tol = 0.0;
};

// One problem instance read from TOML. Missing sections fall back to defaults
// derived from the ones present: the cone defaults to the space's value cone,
// e to the cone's interior witness, the space to componentwise |.| on the
// orthant.
struct InstanceConfig {
  Cone cone = Cone::orthant(2);
  Vector e;
  SeminormFamily family = SeminormFamily::coordinate(2);
  // "coordinate" (sum 2^-k |u_k| / (1 + |u_k|)) or "family" (general members).
  std::string h_variant = "coordinate";
  std::optional<ConeMetricSpace> space;
  std::optional<MapDescriptor> map;
  std::optional<VarphiDescriptor> varphi;
  SolverConfig solver;
  double tol = kDefaultTol;
  double margin = kDefaultMargin;
  std::vector<Vector> probes;
  SuiteConfig suite;
  // fnv1a64 of the source text, as 16 hex digits.
  std::string digest;

  ScalarizationContext context() const { return ScalarizationContext(cone, e, tol); }
  // Throws kConfig naming the missing section.
  const ConeMetricSpace& require_space() const;
  const MapDescriptor& require_map() const;
  const VarphiDescriptor& require_varphi() const;
};

// Every failure, including TOML syntax errors, unknown keys, wrong types,
// dimension disagreements and a non-interior e, throws Error(kConfig) whose
// message names the offending field.
InstanceConfig parse_config(std::string_view text, std::string_view source = "config");
InstanceConfig load_config(const std::filesystem::path& path);

// The configuration used when no file is given.
InstanceConfig default_config();

}  // namespace tvscone
