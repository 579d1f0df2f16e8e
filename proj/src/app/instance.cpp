#include "instance.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "homspace/families.hpp"

namespace homspace::app {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& what) { throw ParseError(field + ": " + what); }

const Json& require(const Json& obj, const char* key, const std::string& field) {
  if (!obj.is_object() || !obj.contains(key)) fail(field, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::size_t require_count(const Json& obj, const char* key, const std::string& field) {
  const Json& v = require(obj, key, field);
  if (!v.is_number_unsigned()) fail(field + "." + key, "expected a non-negative integer, got " + v.dump());
  return v.get<std::size_t>();
}

NamedGroup parse_family(const Json& g, const std::string& field) {
  const Json& fam = require(g, "family", field);
  if (!fam.is_string()) fail(field + ".family", "expected a string");
  const std::string name = fam.get<std::string>();
  try {
    if (name == "cyclic") return cyclic(require_count(g, "n", field));
    if (name == "dihedral") return dihedral(require_count(g, "n", field));
    if (name == "symmetric") return symmetric(require_count(g, "n", field));
    if (name == "quaternion8") return quaternion8();
  } catch (const std::invalid_argument& e) {
    fail(field, e.what());
  }
  if (name == "product") {
    const Json& factors = require(g, "factors", field);
    if (!factors.is_array() || factors.empty()) fail(field + ".factors", "expected a non-empty array");
    NamedGroup acc = parse_family(factors[0], field + ".factors[0]");
    for (std::size_t i = 1; i < factors.size(); ++i)
      acc = direct_product(acc, parse_family(factors[i], field + ".factors[" + std::to_string(i) + "]"));
    return acc;
  }
  fail(field + ".family", "unknown family \"" + name + "\"");
}

std::vector<std::vector<std::uint32_t>> parse_table(const Json& t, const std::string& field) {
  if (!t.is_array() || t.empty()) fail(field, "expected a non-empty array of rows");
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string rf = field + "[" + std::to_string(i) + "]";
    if (!t[i].is_array()) fail(rf, "expected an array");
    std::vector<std::uint32_t> row;
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      if (!t[i][j].is_number_unsigned())
        fail(rf + "[" + std::to_string(j) + "]", "expected a non-negative integer, got " + t[i][j].dump());
      row.push_back(t[i][j].get<std::uint32_t>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::shared_ptr<const FiniteGroup> parse_group(const Json& g, const std::string& field) {
  if (!g.is_object()) fail(field, "expected an object");
  if (g.contains("family")) return std::make_shared<const FiniteGroup>(build(parse_family(g, field)));
  if (g.contains("table")) {
    auto rows = parse_table(g.at("table"), field + ".table");
    return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(rows)));
  }
  if (g.contains("degree")) {
    const std::size_t degree = require_count(g, "degree", field);
    if (degree == 0) fail(field + ".degree", "must be positive");
    const Json& gens = require(g, "generators", field);
    if (!gens.is_array()) fail(field + ".generators", "expected an array");
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < gens.size(); ++i)
      perms.push_back(parse_permutation(gens[i], degree, field + ".generators[" + std::to_string(i) + "]"));
    return std::make_shared<const FiniteGroup>(group_from_generators(degree, perms));
  }
  fail(field, "expected \"family\", \"degree\" with \"generators\", or \"table\"");
}

Subgroup parse_subgroup(const FiniteGroup& g, const Json& spec, const std::string& field) {
  if (spec.is_string()) {
    const std::string s = spec.get<std::string>();
    if (s == "center") return center(g);
    if (s == "trivial") return trivial_subgroup(g);
    if (s == "whole") return whole_group(g);
    fail(field, "unknown subgroup \"" + s + "\"");
  }
  const Json& gens = require(spec, "subgroup_generators", field);
  if (!gens.is_array()) fail(field + ".subgroup_generators", "expected an array");
  std::vector<ElementId> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string ef = field + ".subgroup_generators[" + std::to_string(i) + "]";
    if (gens[i].is_number_unsigned()) {
      const auto idx = gens[i].get<std::size_t>();
      if (idx >= g.order()) fail(ef, "element index " + std::to_string(idx) + " out of range");
      seeds.push_back(static_cast<ElementId>(idx));
      continue;
    }
    if (!g.has_labels()) fail(ef, "the group has no permutation labels; use element indices");
    const Permutation p = parse_permutation(gens[i], g.label_degree(), ef);
    const auto found = g.find(p);
    if (!found) fail(ef, p.to_cycle_string() + " is not an element of the group");
    seeds.push_back(*found);
  }
  return subgroup_generated(g, seeds);
}

GroupAction parse_action(const std::shared_ptr<const FiniteGroup>& g, const Json& a, const std::string& field) {
  if (a.is_string()) {
    const std::string kind = a.get<std::string>();
    if (kind == "regular") return regular_action(g);
    if (kind == "natural") {
      if (!g->has_labels()) fail(field, "\"natural\" needs a group given by permutations");
      return natural_action(g);
    }
    fail(field, "unknown action \"" + kind + "\"");
  }
  if (a.is_object() && a.contains("coset")) return coset_action(g, parse_subgroup(*g, a.at("coset"), field + ".coset"));
  if (a.is_object() && a.contains("table")) {
    auto rows = parse_table(a.at("table"), field + ".table");
    const std::size_t degree = rows.front().size();
    return make_action(g, degree, std::move(rows));
  }
  fail(field, "expected \"natural\", \"regular\", {\"coset\": ...} or {\"table\": ...}");
}

}  // namespace

Permutation parse_cycles(const std::string& text, std::size_t degree, const std::string& field) {
  std::vector<PointId> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<PointId>(i);
  std::vector<bool> used(degree, false);
  std::vector<PointId> cycle;
  std::size_t open_at = 0;
  bool inside = false;

  auto close_cycle = [&] {
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    cycle.clear();
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(') {
      if (inside) fail(field, "nested '(' at offset " + std::to_string(i) + " in \"" + text + "\"");
      inside = true;
      open_at = i++;
    } else if (c == ')') {
      if (!inside) fail(field, "unmatched ')' at offset " + std::to_string(i) + " in \"" + text + "\"");
      inside = false;
      close_cycle();
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const std::string token = text.substr(i, j - i);
      if (!inside) fail(field, "point \"" + token + "\" outside a cycle in \"" + text + "\"");
      if (token.size() > 9) fail(field, "point \"" + token + "\" out of range for degree " + std::to_string(degree));
      const auto p = static_cast<std::size_t>(std::stoul(token));
      if (p >= degree) fail(field, "point " + token + " out of range for degree " + std::to_string(degree));
      if (used[p]) fail(field, "point " + token + " appears twice in \"" + text + "\"");
      used[p] = true;
      cycle.push_back(static_cast<PointId>(p));
      i = j;
    } else {
      fail(field, std::string("unexpected character '") + c + "' at offset " + std::to_string(i) + " in \"" + text +
                      "\"");
    }
  }
  if (inside) fail(field, "unterminated cycle \"" + text.substr(open_at) + "\"");
  return Permutation(std::move(images));
}

Permutation parse_permutation(const nlohmann::ordered_json& value, std::size_t degree, const std::string& field) {
  if (value.is_string()) return parse_cycles(value.get<std::string>(), degree, field);
  if (!value.is_array()) fail(field, "expected a cycle string or an image array");
  if (value.size() != degree)
    fail(field, "image array has length " + std::to_string(value.size()) + ", expected " + std::to_string(degree));
  std::vector<PointId> images;
  for (const auto& v : value) {
    if (!v.is_number_unsigned()) fail(field, "image " + v.dump() + " is not a non-negative integer");
    images.push_back(v.get<PointId>());
  }
  try {
    return Permutation(std::move(images));
  } catch (const std::invalid_argument&) {
    fail(field, value.dump() + " is not a bijection of 0.." + std::to_string(degree - 1));
  }
}

Instance parse_instance(const nlohmann::ordered_json& spec, const std::string& origin) {
  if (!spec.is_object()) fail(origin, "top level must be an object");
  auto group = parse_group(require(spec, "group", origin), "group");
  GroupAction action = parse_action(group, require(spec, "action", origin), "action");
  std::string name = origin;
  if (spec.contains("name")) {
    if (!spec.at("name").is_string()) fail("name", "expected a string");
    name = spec.at("name").get<std::string>();
  }
  return Instance{std::move(name), spec, std::move(group), std::move(action)};
}

Instance parse_instance_text(const std::string& text, const std::string& origin) {
  Json spec;
  try {
    spec = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  return parse_instance(spec, origin);
}

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str(), path);
}

}  // namespace homspace::app
