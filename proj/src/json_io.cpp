#include "skewcat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace skewcat {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InvalidInput(path + ": " + what);
}

const json& require_field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing required field \"" + key + "\"");
  return *it;
}

int read_int(const json& j, const std::string& path, int lo, int hi) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  long long v = j.get<long long>();
  if (v < lo || v > hi)
    fail(path, "value " + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " +
                   std::to_string(hi) + "]");
  return static_cast<int>(v);
}

const json& read_array(const json& j, const std::string& path, std::size_t size) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != size)
    fail(path, "expected " + std::to_string(size) + " entries, found " +
                   std::to_string(j.size()));
  return j;
}

std::vector<int> read_int_vector(const json& j, const std::string& path, std::size_t size,
                                 int lo, int hi) {
  read_array(j, path, size);
  std::vector<int> out(size);
  for (std::size_t i = 0; i < size; ++i)
    out[i] = read_int(j[i], path + "[" + std::to_string(i) + "]", lo, hi);
  return out;
}

std::vector<Elt> read_table(const json& j, const std::string& path, int n) {
  read_array(j, path, static_cast<std::size_t>(n));
  std::vector<Elt> table;
  table.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto row = read_int_vector(j[static_cast<std::size_t>(i)], path + "[" + std::to_string(i) + "]",
                               static_cast<std::size_t>(n), 0, n - 1);
    table.insert(table.end(), row.begin(), row.end());
  }
  return table;
}

}  // namespace

nlohmann::json algebra_to_json(const SkewLattice& s) {
  json meet = json::array();
  json join = json::array();
  for (Elt x = 0; x < s.size(); ++x) {
    json mrow = json::array();
    json jrow = json::array();
    for (Elt y = 0; y < s.size(); ++y) {
      mrow.push_back(s.meet(x, y));
      jrow.push_back(s.join(x, y));
    }
    meet.push_back(std::move(mrow));
    join.push_back(std::move(jrow));
  }
  return json{{"size", s.size()}, {"zero", s.zero()}, {"meet", std::move(meet)},
              {"join", std::move(join)}};
}

SkewLattice algebra_from_json(const nlohmann::json& j) {
  int n = read_int(require_field(j, "size", "$"), "$.size", 1, 1 << 20);
  int zero = read_int(require_field(j, "zero", "$"), "$.zero", 0, n - 1);
  auto meet = read_table(require_field(j, "meet", "$"), "$.meet", n);
  auto join = read_table(require_field(j, "join", "$"), "$.join", n);
  return SkewLattice(n, zero, std::move(meet), std::move(join));
}

nlohmann::json hom_to_json(const SkewHom& h) { return json{{"map", h.map}}; }

SkewHom hom_from_json(const nlohmann::json& j, const SkewLattice& source,
                      const SkewLattice& target) {
  auto map = read_int_vector(require_field(j, "map", "$"), "$.map",
                             static_cast<std::size_t>(source.size()), 0, target.size() - 1);
  return SkewHom{source, target, std::move(map)};
}

nlohmann::json poset_to_json(const Poset& p) {
  json leq = json::array();
  for (int x = 0; x < p.points(); ++x) {
    json row = json::array();
    for (int y = 0; y < p.points(); ++y) row.push_back(p.leq(x, y));
    leq.push_back(std::move(row));
  }
  return json{{"points", p.points()}, {"leq", std::move(leq)}};
}

namespace {

Poset read_poset(const nlohmann::json& j, const std::string& base) {
  int m = read_int(require_field(j, "points", base), base + ".points", 0, 30);
  const json& rows = read_array(require_field(j, "leq", base), base + ".leq",
                                static_cast<std::size_t>(m));
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int x = 0; x < m; ++x) {
    const std::string row_path = base + ".leq[" + std::to_string(x) + "]";
    const json& row = read_array(rows[static_cast<std::size_t>(x)], row_path,
                                 static_cast<std::size_t>(m));
    for (int y = 0; y < m; ++y) {
      const json& cell = row[static_cast<std::size_t>(y)];
      if (!cell.is_boolean()) fail(row_path + "[" + std::to_string(y) + "]", "expected a boolean");
      leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(m) +
          static_cast<std::size_t>(y)] = cell.get<bool>() ? 1 : 0;
    }
  }
  try {
    return Poset(m, std::move(leq));
  } catch (const InvalidInput& e) {
    fail(base + ".leq", e.what());
  }
}

}  // namespace

Poset poset_from_json(const nlohmann::json& j) { return read_poset(j, "$"); }

nlohmann::json bundle_to_json(const Bundle& b) {
  return json{{"poset", poset_to_json(b.base)}, {"stalks", b.stalks}};
}

Bundle bundle_from_json(const nlohmann::json& j) {
  Poset base = read_poset(require_field(j, "poset", "$"), "$.poset");
  auto stalks = read_int_vector(require_field(j, "stalks", "$"), "$.stalks",
                                static_cast<std::size_t>(base.points()), 1, 1 << 20);
  return Bundle{std::move(base), std::move(stalks)};
}

nlohmann::json section_to_json(const Section& s) {
  json domain = json::array();
  json values = json::object();
  for (int x = 0; x < static_cast<int>(s.values.size()); ++x) {
    if (!((s.domain >> x) & 1u)) continue;
    domain.push_back(x);
    values[std::to_string(x)] = s.values[static_cast<std::size_t>(x)];
  }
  return json{{"domain", std::move(domain)}, {"values", std::move(values)}};
}

Section section_from_json(const nlohmann::json& j, const Bundle& b) {
  const json& domain = require_field(j, "domain", "$");
  if (!domain.is_array()) fail("$.domain", "expected an array");
  Section out = empty_section(b);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    int x = read_int(domain[i], "$.domain[" + std::to_string(i) + "]", 0, b.base.points() - 1);
    if ((out.domain >> x) & 1u)
      fail("$.domain[" + std::to_string(i) + "]", "duplicate point " + std::to_string(x));
    out.domain |= PointSet{1} << x;
  }
  if (!is_downset(b.base, out.domain)) fail("$.domain", "not a downset of the base poset");
  const json& values = require_field(j, "values", "$");
  if (!values.is_object()) fail("$.values", "expected an object keyed by point id");
  for (const auto& [key, value] : values.items()) {
    int x = -1;
    try {
      std::size_t used = 0;
      x = std::stoi(key, &used);
      if (used != key.size()) x = -1;
    } catch (const std::exception&) {
      x = -1;
    }
    if (x < 0 || x >= b.base.points()) fail("$.values", "key \"" + key + "\" is not a point id");
    if (!((out.domain >> x) & 1u))
      fail("$.values", "key \"" + key + "\" lies outside the declared domain");
    out.values[static_cast<std::size_t>(x)] =
        read_int(value, "$.values[\"" + key + "\"]", 0, b.stalks[static_cast<std::size_t>(x)] - 1);
  }
  for (int x = 0; x < b.base.points(); ++x)
    if (((out.domain >> x) & 1u) && out.values[static_cast<std::size_t>(x)] < 0)
      fail("$.values", "missing value for point " + std::to_string(x));
  return out;
}

nlohmann::json sheaf_morphism_to_json(const SheafMorphism& m) {
  return json{{"base_map", m.base_map}, {"fiber_maps", m.fiber_maps}};
}

SheafMorphism sheaf_morphism_from_json(const nlohmann::json& j, const Bundle& source,
                                       const Bundle& target) {
  auto base_map = read_int_vector(require_field(j, "base_map", "$"), "$.base_map",
                                  static_cast<std::size_t>(source.base.points()), 0,
                                  target.base.points() - 1);
  const json& fibers = read_array(require_field(j, "fiber_maps", "$"), "$.fiber_maps",
                                  static_cast<std::size_t>(source.base.points()));
  std::vector<std::vector<int>> fiber_maps(static_cast<std::size_t>(source.base.points()));
  for (int x = 0; x < source.base.points(); ++x) {
    int y = base_map[static_cast<std::size_t>(x)];
    fiber_maps[static_cast<std::size_t>(x)] = read_int_vector(
        fibers[static_cast<std::size_t>(x)], "$.fiber_maps[" + std::to_string(x) + "]",
        static_cast<std::size_t>(target.stalks[static_cast<std::size_t>(y)]), 0,
        source.stalks[static_cast<std::size_t>(x)] - 1);
  }
  SheafMorphism m{source, target, std::move(base_map), std::move(fiber_maps)};
  validate_sheaf_morphism(m);
  return m;
}

nlohmann::json dual_bundle_to_json(const DualBundle& db) {
  json out = bundle_to_json(db.bundle);
  json labels = json::array();
  for (const auto& h : db.homs) labels.push_back(h.map);
  out["hom_labels"] = std::move(labels);
  out["class_reps"] = db.class_reps;
  return out;
}

nlohmann::json spectrum_to_json(const SpectrumResult& s) {
  return json{{"poset", poset_to_json(s.poset)}, {"filters", s.filters},
              {"generators", s.generators}};
}

nlohmann::json generator_config_to_json(const GeneratorConfig& cfg) {
  return json{{"seed", cfg.seed},
              {"caps",
               {{"max_base_points", cfg.max_base_points},
                {"max_stalk", cfg.max_stalk},
                {"max_generators", cfg.max_generators},
                {"max_closure_size", cfg.max_closure_size}}}};
}

GeneratorConfig generator_config_from_json(const nlohmann::json& j) {
  GeneratorConfig cfg;
  const json& seed = require_field(j, "seed", "$");
  if (!seed.is_number_unsigned() && !seed.is_number_integer())
    fail("$.seed", "expected an unsigned integer");
  cfg.seed = seed.get<std::uint64_t>();
  if (j.contains("caps")) {
    const json& caps = j["caps"];
    if (!caps.is_object()) fail("$.caps", "expected an object");
    if (caps.contains("max_base_points"))
      cfg.max_base_points = read_int(caps["max_base_points"], "$.caps.max_base_points", 1, 30);
    if (caps.contains("max_stalk"))
      cfg.max_stalk = read_int(caps["max_stalk"], "$.caps.max_stalk", 1, 1 << 20);
    if (caps.contains("max_generators"))
      cfg.max_generators = read_int(caps["max_generators"], "$.caps.max_generators", 1, 1 << 20);
    if (caps.contains("max_closure_size"))
      cfg.max_closure_size =
          read_int(caps["max_closure_size"], "$.caps.max_closure_size", 1, 1 << 20);
  }
  validate_generator_config(cfg);
  return cfg;
}

nlohmann::json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace skewcat
