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

#include <iomanip>
#include <sstream>

#include "tvscone/cone_metric.hpp"
#include "tvscone/error.hpp"

namespace tvscone {

std::vector<Vector> read_sequence_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kInvalidArgument, "sequence CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::size_t columns = 0;
  {
    std::stringstream header(line);
    std::string name;
    while (std::getline(header, name, ',')) {
      ++columns;
      if (name != "x" + std::to_string(columns)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "sequence CSV header column " + std::to_string(columns) + " must be x" + std::to_string(columns));
      }
    }
  }
  if (columns == 0) throw Error(ErrorCode::kInvalidArgument, "sequence CSV header has no columns");

  std::vector<Vector> sequence;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Vector v = parse_vector(line);
    if (v.dim() != columns) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "sequence CSV row " + std::to_string(row) + " has " + std::to_string(v.dim()) + " entries");
    }
    sequence.push_back(std::move(v));
  }
  return sequence;
}

void write_sequence_csv(std::ostream& out, std::span<const Vector> sequence) {
  if (sequence.empty()) return;
  const std::size_t m = sequence.front().dim();
  for (std::size_t i = 1; i <= m; ++i) out << (i > 1 ? "," : "") << 'x' << i;
  out << '\n' << std::setprecision(17);
  for (const auto& v : sequence) {
    for (std::size_t i = 0; i < v.dim(); ++i) out << (i ? "," : "") << v[i];
    out << '\n';
  }
}

}  // namespace tvscone
