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

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "tvscone/error.hpp"
#include "tvscone/ordered_space.hpp"

namespace tvscone {
namespace {

// Relative amount by which v misses the cone.
double exclusion(const Cone& cone, const Vector& v) {
  return std::max(0.0, -cone.slack(v)) / std::max(1.0, v.max_norm());
}

std::size_t numerical_rank(const Cone& cone) {
  if (cone.kind() != ConeKind::kPolyhedral) return cone.dim();
  const auto& rows = cone.constraints();
  Eigen::MatrixXd a(rows.size(), cone.dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cone.dim(); ++c) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& sv = svd.singularValues();
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > kRankThreshold * sv(0)) ++rank;
  }
  return rank;
}

}  // namespace

ConeValidationReport validate_cone(const ConeDescriptor& descriptor, std::size_t sample_budget,
                                   std::uint64_t rng_seed) {
  return validate_cone(Cone::from_descriptor(descriptor), sample_budget, rng_seed);
}

std::vector<SampledCheck> cone_validation_checks(const Cone& cone, std::size_t sample_budget,
                                                 std::uint64_t rng_seed) {
  if (sample_budget < 1) throw Error(ErrorCode::kInvalidArgument, "sample budget must be >= 1");
  constexpr double kScale = 10.0;
  const std::string prefix = cone.label() + ":";
  std::vector<SampledCheck> checks;

  auto sampled = [&](std::string name, double tolerance, auto generate, auto defect) {
    SampledCheck c;
    c.name = prefix + name;
    c.count = sample_budget;
    c.tolerance = tolerance;
    SampleStream stream(rng_seed, c.name);
    c.generate = [stream, cone, generate](std::uint64_t i) {
      auto draw = stream.at(i);
      return generate(cone, draw);
    };
    c.defect = [cone, defect](const SampleInputs& in) { return defect(cone, in); };
    checks.push_back(std::move(c));
  };

  sampled(
      "additive-closure", 1e-12,
      [](const Cone& k, SampleStream::Draw& d) {
        return SampleInputs{{sample_in_cone(k, d, kScale), sample_in_cone(k, d, kScale)}, {}};
      },
      [](const Cone& k, const SampleInputs& in) { return exclusion(k, in.vectors[0] + in.vectors[1]); });

  sampled(
      "positive-homogeneity", 1e-12,
      [](const Cone& k, SampleStream::Draw& d) {
        double lambda = d.index_below(16) == 0 ? 0.0 : d.log_uniform(1e-6, 1e6);
        return SampleInputs{{sample_in_cone(k, d, kScale)}, {lambda}};
      },
      [](const Cone& k, const SampleInputs& in) { return exclusion(k, in.scalars[0] * in.vectors[0]); });

  sampled(
      "interior-closure", 0.0,
      [](const Cone& k, SampleStream::Draw& d) {
        return SampleInputs{{sample_in_interior(k, d, kScale), sample_in_interior(k, d, kScale)},
                            {d.log_uniform(1e-3, 1e3)}};
      },
      [](const Cone& k, const SampleInputs& in) {
        const bool sum_inside = k.slack(in.vectors[0] + in.vectors[1]) > 0.0;
        const bool scaled_inside = k.slack(in.scalars[0] * in.vectors[0]) > 0.0;
        return defect_of(sum_inside && scaled_inside);
      });

  sampled(
      "pointedness", 0.0,
      [](const Cone& k, SampleStream::Draw& d) { return SampleInputs{{sample_in_cone(k, d, kScale)}, {}}; },
      [](const Cone& k, const SampleInputs& in) {
        const Vector& v = in.vectors[0];
        const bool nonzero = v.max_norm() > 1e-12;
        return defect_of(!(nonzero && k.contains(-v, 1e-12 * v.max_norm())));
      });

  const Vector witness = cone.interior_witness();
  checks.push_back(fixed_case_check(prefix + "interior-witness", {SampleInputs{{witness}, {}}}, 0.0,
                                    [cone](const SampleInputs& in) {
                                      return defect_of(cone.strictly_contains(in.vectors[0], 1e-9));
                                    }));
  checks.push_back(fixed_case_check(prefix + "full-rank",
                                    {SampleInputs{{}, {static_cast<double>(numerical_rank(cone))}}}, 0.0,
                                    [n = cone.dim()](const SampleInputs& in) {
                                      return defect_of(in.scalars[0] == static_cast<double>(n));
                                    }));
  return checks;
}

ConeValidationReport validate_cone(const Cone& cone, std::size_t sample_budget, std::uint64_t rng_seed) {
  const auto checks = cone_validation_checks(cone, sample_budget, rng_seed);
  ConeValidationReport report;
  report.checks = run_checks(checks);
  report.interior_witness = cone.interior_witness();
  report.rank = numerical_rank(cone);
  return report;
}

}  // namespace tvscone
