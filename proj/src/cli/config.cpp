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
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "toml.hpp"
#include "tvscone/config.hpp"
#include "tvscone/error.hpp"
#include "tvscone/random.hpp"

namespace tvscone {
namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kConfig, "field '" + field + "': " + what);
}

std::string join(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

// Runs f, turning library errors into configuration errors about `field`.
template <class F>
auto guarded(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfig) throw;
    fail(field, e.what());
  }
}

void check_keys(const toml::table& t, const std::string& path, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, node] : t) {
    if (std::find(allowed.begin(), allowed.end(), key.str()) == allowed.end()) {
      fail(join(path, key.str()), "unknown key");
    }
  }
}

const toml::table* section(const toml::table& t, std::string_view key) {
  const toml::node* n = t.get(key);
  if (!n) return nullptr;
  if (!n->is_table()) fail(std::string(key), "expected a table");
  return n->as_table();
}

double to_double(const toml::node& n, const std::string& field) {
  if (auto v = n.value<double>(); v && (n.is_floating_point() || n.is_integer())) {
    if (!std::isfinite(*v)) fail(field, "must be finite");
    return *v;
  }
  fail(field, "expected a number");
}

std::optional<double> get_double(const toml::table& t, std::string_view key, const std::string& path) {
  const toml::node* n = t.get(key);
  if (!n) return std::nullopt;
  return to_double(*n, join(path, key));
}

std::optional<std::int64_t> get_int(const toml::table& t, std::string_view key, const std::string& path) {
  const toml::node* n = t.get(key);
  if (!n) return std::nullopt;
  if (!n->is_integer()) fail(join(path, key), "expected an integer");
  return n->value<std::int64_t>();
}

std::optional<std::size_t> get_count(const toml::table& t, std::string_view key, const std::string& path) {
  auto v = get_int(t, key, path);
  if (!v) return std::nullopt;
  if (*v < 0) fail(join(path, key), "must be >= 0");
  return static_cast<std::size_t>(*v);
}

std::optional<std::string> get_string(const toml::table& t, std::string_view key, const std::string& path) {
  const toml::node* n = t.get(key);
  if (!n) return std::nullopt;
  if (!n->is_string()) fail(join(path, key), "expected a string");
  return *n->value<std::string>();
}

std::optional<bool> get_bool(const toml::table& t, std::string_view key, const std::string& path) {
  const toml::node* n = t.get(key);
  if (!n) return std::nullopt;
  if (!n->is_boolean()) fail(join(path, key), "expected true or false");
  return *n->value<bool>();
}

const toml::array& as_array(const toml::node& n, const std::string& field) {
  if (!n.is_array()) fail(field, "expected an array");
  return *n.as_array();
}

Vector to_vector(const toml::node& n, const std::string& field) {
  const auto& arr = as_array(n, field);
  std::vector<double> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(to_double(arr[i], field + "[" + std::to_string(i) + "]"));
  if (out.empty()) fail(field, "must not be empty");
  return Vector(std::move(out));
}

std::optional<Vector> get_vector(const toml::table& t, std::string_view key, const std::string& path) {
  const toml::node* n = t.get(key);
  if (!n) return std::nullopt;
  return to_vector(*n, join(path, key));
}

std::string require_kind(const toml::table& t, const std::string& path) {
  auto kind = get_string(t, "kind", path);
  if (!kind) fail(join(path, "kind"), "missing");
  return *kind;
}

void require_dim(const Vector& v, std::size_t dim, const std::string& field) {
  if (v.dim() != dim) {
    fail(field, "has dimension " + std::to_string(v.dim()) + ", expected " + std::to_string(dim));
  }
}

Cone parse_cone(const toml::table& t) {
  check_keys(t, "cone", {"kind", "dim", "rows"});
  const std::string kind = require_kind(t, "cone");
  ConeDescriptor d;
  if (kind == "orthant" || kind == "lorentz") {
    d.kind = kind == "orthant" ? ConeKind::kOrthant : ConeKind::kLorentz;
    auto dim = get_count(t, "dim", "cone");
    if (!dim) fail("cone.dim", "missing");
    d.dim = *dim;
    if (t.get("rows")) fail("cone.rows", "only polyhedral cones take rows");
    return guarded("cone.dim", [&] { return Cone::from_descriptor(d); });
  }
  if (kind == "polyhedral") {
    d.kind = ConeKind::kPolyhedral;
    const toml::node* rows = t.get("rows");
    if (!rows) fail("cone.rows", "missing");
    const auto& arr = as_array(*rows, "cone.rows");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const Vector row = to_vector(arr[i], "cone.rows[" + std::to_string(i) + "]");
      d.rows.emplace_back(row.begin(), row.end());
    }
    if (d.rows.empty()) fail("cone.rows", "must not be empty");
    d.dim = d.rows.front().size();
    if (auto dim = get_count(t, "dim", "cone"); dim && *dim != d.dim) fail("cone.dim", "disagrees with the rows");
    return guarded("cone.rows", [&] { return Cone::from_descriptor(d); });
  }
  fail("cone.kind", "unknown cone kind '" + kind + "'");
}

ConeMetricSpace parse_space(const toml::table& t, const std::optional<Cone>& cone) {
  check_keys(t, "space", {"kind", "dim", "weights", "points", "table"});
  const std::string kind = require_kind(t, "space");
  if (kind == "componentwise_abs") {
    auto dim = get_count(t, "dim", "space");
    if (!dim) fail("space.dim", "missing");
    return guarded("space.dim", [&] { return ConeMetricSpace::componentwise_abs(*dim); });
  }
  if (kind == "weighted") {
    auto w = get_vector(t, "weights", "space");
    if (!w) fail("space.weights", "missing");
    return guarded("space.weights", [&] { return ConeMetricSpace::weighted(*w); });
  }
  if (kind == "finite_table") {
    const toml::node* pts = t.get("points");
    const toml::node* tab = t.get("table");
    if (!pts) fail("space.points", "missing");
    if (!tab) fail("space.table", "missing");
    std::vector<Vector> points;
    const auto& parr = as_array(*pts, "space.points");
    for (std::size_t i = 0; i < parr.size(); ++i) points.push_back(to_vector(parr[i], "space.points[" + std::to_string(i) + "]"));
    std::vector<std::vector<Vector>> table;
    const auto& tarr = as_array(*tab, "space.table");
    for (std::size_t i = 0; i < tarr.size(); ++i) {
      const std::string row_field = "space.table[" + std::to_string(i) + "]";
      const auto& row = as_array(tarr[i], row_field);
      table.emplace_back();
      for (std::size_t j = 0; j < row.size(); ++j) {
        table.back().push_back(to_vector(row[j], row_field + "[" + std::to_string(j) + "]"));
      }
    }
    if (table.empty() || table.front().empty()) fail("space.table", "must not be empty");
    const Cone value_cone = cone ? *cone : Cone::orthant(table.front().front().dim());
    return guarded("space.table", [&] { return ConeMetricSpace::finite_table(value_cone, points, table); });
  }
  fail("space.kind", "unknown space kind '" + kind + "'");
}

Seminorm parse_member(const toml::table& t, const std::string& path) {
  check_keys(t, path, {"kind", "index", "weights"});
  const std::string kind = require_kind(t, path);
  if (kind == "coordinate" || kind == "partial_abs_sum") {
    auto index = get_count(t, "index", path);
    if (!index) fail(join(path, "index"), "missing");
    return guarded(join(path, "index"), [&] {
      return kind == "coordinate" ? Seminorm::coordinate(*index) : Seminorm::partial_abs_sum(*index);
    });
  }
  if (kind == "weighted_abs_sum") {
    auto w = get_vector(t, "weights", path);
    if (!w) fail(join(path, "weights"), "missing");
    return guarded(join(path, "weights"), [&] { return Seminorm::weighted_abs_sum({w->begin(), w->end()}); });
  }
  fail(join(path, "kind"), "unknown seminorm kind '" + kind + "'");
}

SeminormFamily parse_family(const toml::table* t, std::size_t dim, std::string& variant) {
  if (!t) return SeminormFamily::coordinate(dim);
  check_keys(*t, "seminorms", {"variant", "truncation", "monotone", "members"});
  variant = get_string(*t, "variant", "seminorms").value_or("coordinate");
  const std::size_t truncation = get_count(*t, "truncation", "seminorms").value_or(dim);
  const bool monotone = get_bool(*t, "monotone", "seminorms").value_or(true);
  if (variant == "coordinate") {
    if (t->get("members")) fail("seminorms.members", "the coordinate variant has fixed members");
    if (truncation > dim) fail("seminorms.truncation", "exceeds the dimension " + std::to_string(dim));
    return guarded("seminorms.truncation", [&] { return SeminormFamily::coordinate(truncation); });
  }
  if (variant != "family") fail("seminorms.variant", "expected 'coordinate' or 'family'");
  std::vector<Seminorm> members;
  if (const toml::node* m = t->get("members")) {
    const auto& arr = as_array(*m, "seminorms.members");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "seminorms.members[" + std::to_string(i) + "]";
      if (!arr[i].is_table()) fail(path, "expected a table");
      members.push_back(parse_member(*arr[i].as_table(), path));
    }
  } else {
    for (std::size_t k = 1; k <= dim; ++k) members.push_back(Seminorm::partial_abs_sum(k));
  }
  SeminormFamily family = guarded("seminorms", [&] { return SeminormFamily(members, truncation, monotone); });
  if (family.min_dim() > dim) fail("seminorms.members", "need dimension " + std::to_string(family.min_dim()));
  return family;
}

MapDescriptor parse_map(const toml::table& t, const std::string& path, std::size_t dim) {
  check_keys(t, path, {"kind", "a", "b", "dim", "maps"});
  const std::string kind = require_kind(t, path);
  if (kind == "diagonal_affine") {
    const toml::node* a = t.get("a");
    if (!a) fail(join(path, "a"), "missing");
    Vector av = a->is_array() ? to_vector(*a, join(path, "a")) : Vector::filled(dim, to_double(*a, join(path, "a")));
    Vector bv = get_vector(t, "b", path).value_or(Vector::zeros(dim));
    require_dim(av, dim, join(path, "a"));
    require_dim(bv, dim, join(path, "b"));
    return MapDescriptor::diagonal_affine(av, bv);
  }
  if (kind == "identity") return MapDescriptor::identity(dim);
  if (kind == "coordinate_ratio") return MapDescriptor::coordinate_ratio();
  if (kind == "clipped_quadratic") return MapDescriptor::clipped_quadratic();
  if (kind == "composite") {
    const toml::node* maps = t.get("maps");
    if (!maps) fail(join(path, "maps"), "missing");
    const auto& arr = as_array(*maps, join(path, "maps"));
    std::vector<MapDescriptor> parts;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string sub = join(path, "maps") + "[" + std::to_string(i) + "]";
      if (!arr[i].is_table()) fail(sub, "expected a table");
      parts.push_back(parse_map(*arr[i].as_table(), sub, dim));
    }
    return guarded(join(path, "maps"), [&] { return MapDescriptor::composite(parts); });
  }
  fail(join(path, "kind"), "unknown map kind '" + kind + "'");
}

VarphiDescriptor parse_varphi(const toml::table& t) {
  check_keys(t, "varphi", {"kind", "alpha"});
  const std::string kind = require_kind(t, "varphi");
  if (kind == "scale") {
    auto alpha = get_double(t, "alpha", "varphi");
    if (!alpha) fail("varphi.alpha", "missing");
    return guarded("varphi.alpha", [&] { return VarphiDescriptor::scale(*alpha); });
  }
  if (t.get("alpha")) fail("varphi.alpha", "only the scale kind takes alpha");
  if (kind == "coordinate_ratio") return VarphiDescriptor::coordinate_ratio();
  if (kind == "half_square") return VarphiDescriptor::half_square();
  fail("varphi.kind", "unknown varphi kind '" + kind + "'");
}

void parse_sample(const toml::table& t, SampleSpec& s) {
  check_keys(t, "sample", {"count", "seed", "range", "dimensions"});
  if (auto v = get_count(t, "count", "sample")) {
    if (*v == 0) fail("sample.count", "must be >= 1");
    s.count = *v;
  }
  if (auto v = get_count(t, "seed", "sample")) s.seed = *v;
  if (auto r = get_vector(t, "range", "sample")) {
    if (r->dim() != 2 || !((*r)[0] < (*r)[1])) fail("sample.range", "expected [lo, hi] with lo < hi");
    s.lo = (*r)[0];
    s.hi = (*r)[1];
  }
  if (const toml::node* d = t.get("dimensions")) {
    const auto& arr = as_array(*d, "sample.dimensions");
    s.dimensions.clear();
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string field = "sample.dimensions[" + std::to_string(i) + "]";
      if (!arr[i].is_integer() || *arr[i].value<std::int64_t>() < 1) fail(field, "expected a positive integer");
      s.dimensions.push_back(static_cast<std::size_t>(*arr[i].value<std::int64_t>()));
    }
    if (s.dimensions.empty()) fail("sample.dimensions", "must not be empty");
  }
  guarded("sample", [&] { s.validate(); });
}

void parse_suite(const toml::table& t, SuiteConfig& s) {
  check_keys(t, "suite", {"sequences", "sequence_length", "rates", "probe_levels", "bounded_sets", "solver_instances",
                          "orbits", "epsilon", "truncation"});
  if (auto v = get_count(t, "sequences", "suite")) s.sequences = *v;
  if (auto v = get_count(t, "sequence_length", "suite")) s.sequence_length = *v;
  if (auto v = get_vector(t, "rates", "suite")) s.rates.assign(v->begin(), v->end());
  if (auto v = get_count(t, "probe_levels", "suite")) s.probe_levels = *v;
  if (auto v = get_count(t, "bounded_sets", "suite")) s.bounded_sets = *v;
  if (auto v = get_count(t, "solver_instances", "suite")) s.solver_instances = *v;
  if (auto v = get_count(t, "orbits", "suite")) s.orbits = *v;
  if (auto v = get_double(t, "epsilon", "suite")) s.epsilon = *v;
  if (auto v = get_count(t, "truncation", "suite")) s.truncation = *v;
}

void parse_solver(const toml::table& t, SolverConfig& s, std::size_t dim) {
  check_keys(t, "solver", {"x0", "k", "tol", "max_iter", "budget", "stop_tol"});
  if (auto x0 = get_vector(t, "x0", "solver")) {
    require_dim(*x0, dim, "solver.x0");
    s.x0 = *x0;
  }
  if (auto k = get_double(t, "k", "solver")) {
    if (!(*k >= 0.0 && *k < 1.0)) fail("solver.k", "must be in [0, 1)");
    s.k = *k;
  }
  if (auto v = get_double(t, "tol", "solver")) {
    if (!(*v > 0.0)) fail("solver.tol", "must be > 0");
    s.tol = *v;
  }
  if (auto v = get_count(t, "max_iter", "solver")) {
    if (*v == 0) fail("solver.max_iter", "must be >= 1");
    s.max_iter = *v;
  }
  if (auto v = get_count(t, "budget", "solver")) {
    if (*v == 0) fail("solver.budget", "must be >= 1");
    s.budget = *v;
  }
  if (auto v = get_double(t, "stop_tol", "solver")) {
    if (!(*v >= 0.0)) fail("solver.stop_tol", "must be >= 0");
    s.stop_tol = *v;
  }
}

std::string hex_digest(std::string_view text) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
  return buf;
}

}  // namespace

const ConeMetricSpace& InstanceConfig::require_space() const {
  if (!space) fail("space", "this command needs a [space] section (or an orthant cone)");
  return *space;
}

const MapDescriptor& InstanceConfig::require_map() const {
  if (!map) fail("map", "this command needs a [map] section");
  return *map;
}

const VarphiDescriptor& InstanceConfig::require_varphi() const {
  if (!varphi) fail("varphi", "this command needs a [varphi] section");
  return *varphi;
}

InstanceConfig parse_config(std::string_view text, std::string_view source) {
  toml::table root;
  try {
    root = toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream where;
    where << e.source().begin;
    fail("(syntax)", std::string(e.description()) + " at " + where.str());
  }
  check_keys(root, "", {"e", "probes", "cone", "seminorms", "space", "map", "varphi", "solver", "tolerances", "sample",
                        "suite"});

  InstanceConfig cfg;
  cfg.digest = hex_digest(text);

  if (const auto* t = section(root, "tolerances")) {
    check_keys(*t, "tolerances", {"tol", "margin"});
    if (auto v = get_double(*t, "tol", "tolerances")) {
      if (!(*v > 0.0 && *v <= 1e-3)) fail("tolerances.tol", "must be in (0, 1e-3]");
      cfg.tol = *v;
    }
    if (auto v = get_double(*t, "margin", "tolerances")) {
      if (!(*v > 0.0)) fail("tolerances.margin", "must be > 0");
      cfg.margin = *v;
    }
  }

  const auto* cone_table = section(root, "cone");
  std::optional<Cone> cone;
  if (cone_table) cone = parse_cone(*cone_table);
  const auto* space_table = section(root, "space");
  if (space_table) cfg.space = parse_space(*space_table, cone);
  const std::optional<Vector> e = get_vector(root, "e", "");

  if (cone) {
    cfg.cone = *cone;
  } else if (cfg.space) {
    cfg.cone = cfg.space->value_cone();
  } else if (e) {
    cfg.cone = Cone::orthant(e->dim());
  }
  if (cfg.space && !(cfg.space->value_cone() == cfg.cone)) {
    fail("cone", cfg.cone.label() + " differs from the space's value cone " + cfg.space->value_cone().label());
  }
  if (!cfg.space && cfg.cone.kind() == ConeKind::kOrthant) {
    cfg.space = ConeMetricSpace::componentwise_abs(cfg.cone.dim());
  }

  cfg.e = e ? *e : cfg.cone.interior_witness();
  require_dim(cfg.e, cfg.cone.dim(), "e");
  if (!cfg.cone.strictly_contains(cfg.e, cfg.margin)) fail("e", cfg.e.to_string() + " is not interior to " + cfg.cone.label());

  cfg.family = parse_family(section(root, "seminorms"), cfg.cone.dim(), cfg.h_variant);

  const std::size_t point_dim = cfg.space ? cfg.space->point_dim() : cfg.cone.dim();
  if (const auto* t = section(root, "map")) cfg.map = parse_map(*t, "map", point_dim);
  if (const auto* t = section(root, "varphi")) cfg.varphi = parse_varphi(*t);
  if (const auto* t = section(root, "solver")) parse_solver(*t, cfg.solver, point_dim);
  if (cfg.map && cfg.solver.x0 && !cfg.map->in_domain(cfg.solver.x0->entries())) {
    fail("solver.x0", "outside the domain of " + cfg.map->label());
  }

  if (const toml::node* p = root.get("probes")) {
    const auto& arr = as_array(*p, "probes");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string field = "probes[" + std::to_string(i) + "]";
      Vector c = to_vector(arr[i], field);
      require_dim(c, cfg.cone.dim(), field);
      if (!cfg.cone.strictly_contains(c, cfg.margin)) fail(field, "is not interior to " + cfg.cone.label());
      cfg.probes.push_back(std::move(c));
    }
  } else {
    cfg.probes = default_probes(cfg.e);
  }

  cfg.suite.tol = cfg.tol;
  cfg.suite.margin = cfg.margin;
  if (const auto* t = section(root, "sample")) parse_sample(*t, cfg.suite.sample);
  if (const auto* t = section(root, "suite")) parse_suite(*t, cfg.suite);
  if (cone_table || e) cfg.suite.extra_contexts.push_back(cfg.context());
  if (space_table) cfg.suite.extra_spaces.push_back(*cfg.space);
  guarded("suite", [&] { cfg.suite.validate(); });
  return cfg;
}

InstanceConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("--config", "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

InstanceConfig default_config() { return parse_config(""); }

}  // namespace tvscone
