#include "homspace/action.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace homspace {

std::optional<AxiomViolation> find_axiom_violation(const FiniteGroup& g, std::size_t degree,
                                                   const std::vector<std::vector<PointId>>& table) {
  const ElementId e = g.identity();
  for (std::size_t x = 0; x < degree; ++x)
    if (table[e][x] != x) return AxiomViolation(1, e, e, x);
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId b = 0; b < g.order(); ++b) {
      const auto& ab = table[g.mul(a, b)];
      for (std::size_t x = 0; x < degree; ++x)
        if (table[a][table[b][x]] != ab[x]) return AxiomViolation(2, a, b, x);
    }
  return std::nullopt;
}

GroupAction::GroupAction(std::shared_ptr<const FiniteGroup> group, std::size_t degree,
                         std::vector<std::vector<PointId>> table)
    : group_(std::move(group)), degree_(degree) {
  if (!group_) throw std::invalid_argument("action needs a group");
  if (degree_ == 0) throw std::invalid_argument("action degree must be positive");
  if (table.size() != group_->order())
    throw std::invalid_argument("action table has " + std::to_string(table.size()) + " rows, expected " +
                                std::to_string(group_->order()));
  for (const auto& row : table) {
    if (row.size() != degree_) throw std::invalid_argument("action table row has wrong length");
    for (PointId y : row)
      if (y >= degree_) throw std::invalid_argument("action table entry out of range");
  }
  if (auto v = find_axiom_violation(*group_, degree_, table)) throw *v;
  table_.reserve(group_->order() * degree_);
  for (const auto& row : table) table_.insert(table_.end(), row.begin(), row.end());
}

Permutation GroupAction::point_map(ElementId a) const {
  auto first = table_.begin() + static_cast<std::ptrdiff_t>(std::size_t{a} * degree_);
  return Permutation(std::vector<PointId>(first, first + static_cast<std::ptrdiff_t>(degree_)));
}

GroupAction make_action(std::shared_ptr<const FiniteGroup> g, std::size_t degree,
                        std::vector<std::vector<PointId>> table) {
  return GroupAction(std::move(g), degree, std::move(table));
}

std::vector<std::size_t> orbit_ids(const GroupAction& a) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id(a.degree(), unset);
  std::size_t next = 0;
  for (PointId x = 0; x < a.degree(); ++x) {
    if (id[x] != unset) continue;
    for (ElementId g = 0; g < a.group().order(); ++g) id[a.act(g, x)] = next;
    ++next;
  }
  return id;
}

std::vector<PointId> orbit(const GroupAction& a, PointId x) {
  if (x >= a.degree()) throw std::out_of_range("point out of range");
  std::vector<bool> in(a.degree(), false);
  for (ElementId g = 0; g < a.group().order(); ++g) in[a.act(g, x)] = true;
  std::vector<PointId> out;
  for (PointId y = 0; y < a.degree(); ++y)
    if (in[y]) out.push_back(y);
  return out;
}

ActionProfile classify(const GroupAction& a) {
  ActionProfile p;
  const auto ids = orbit_ids(a);
  p.orbit_count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  p.transitive = p.orbit_count == 1;
  p.free = true;
  p.faithful = true;
  const FiniteGroup& g = a.group();
  for (ElementId h = 0; h < g.order(); ++h) {
    if (h == g.identity()) continue;
    std::size_t fixed = 0;
    for (PointId x = 0; x < a.degree(); ++x)
      if (a.act(h, x) == x) ++fixed;
    if (fixed > 0) p.free = false;
    if (fixed == a.degree()) p.faithful = false;
  }
  return p;
}

Subgroup stabilizer(const GroupAction& a, PointId x) {
  if (x >= a.degree()) throw std::out_of_range("point " + std::to_string(x) + " out of range");
  std::vector<ElementId> members;
  for (ElementId g = 0; g < a.group().order(); ++g)
    if (a.act(g, x) == x) members.push_back(g);
  return Subgroup{std::move(members)};
}

void require_transitive(const GroupAction& a) {
  const auto ids = orbit_ids(a);
  const std::size_t count = *std::max_element(ids.begin(), ids.end()) + 1;
  if (count != 1) throw NotTransitive(count);
}

GroupAction regular_action(std::shared_ptr<const FiniteGroup> g) {
  const std::size_t n = g->order();
  std::vector<std::vector<PointId>> table(n, std::vector<PointId>(n));
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) table[a][b] = g->mul(a, b);
  return GroupAction(std::move(g), n, std::move(table));
}

GroupAction coset_action(std::shared_ptr<const FiniteGroup> g, const Subgroup& h) {
  validate_subgroup(*g, h);
  const CosetSpace cs = left_cosets(*g, h);
  const std::size_t n = cs.cosets.size();
  std::vector<std::vector<PointId>> table(g->order(), std::vector<PointId>(n));
  for (ElementId a = 0; a < g->order(); ++a)
    for (std::size_t c = 0; c < n; ++c)
      table[a][c] = static_cast<PointId>(cs.coset_of[g->mul(a, cs.representatives[c])]);
  return GroupAction(std::move(g), n, std::move(table));
}

GroupAction natural_action(std::shared_ptr<const FiniteGroup> g) {
  if (!g->has_labels()) throw std::invalid_argument("natural action needs a permutation group");
  const std::size_t n = g->label_degree();
  std::vector<std::vector<PointId>> table(g->order());
  for (ElementId a = 0; a < g->order(); ++a) {
    auto img = g->label(a).images();
    table[a].assign(img.begin(), img.end());
  }
  return GroupAction(std::move(g), n, std::move(table));
}

}  // namespace homspace
