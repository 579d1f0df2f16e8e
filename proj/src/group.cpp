#include "homspace/group.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include <boost/functional/hash.hpp>
#include <unordered_map>

#include "homspace/errors.hpp"

namespace homspace {

AxiomViolation::AxiomViolation(int axiom, std::size_t alpha, std::size_t beta, std::size_t x)
    : Error("action axiom (" + std::to_string(axiom) + ") violated at alpha=" + std::to_string(alpha) +
            " beta=" + std::to_string(beta) + " x=" + std::to_string(x)),
      axiom_(axiom),
      alpha_(alpha),
      beta_(beta),
      x_(x) {}

NotTransitive::NotTransitive(std::size_t orbit_count)
    : Error("action is not transitive (" + std::to_string(orbit_count) + " orbits)"),
      orbit_count_(orbit_count) {}

DecompositionStalled::DecompositionStalled(int max_rounds)
    : Error("decomposition did not reach minimal pieces within " + std::to_string(max_rounds) + " rounds"),
      max_rounds_(max_rounds) {}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<PointId> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (PointId y : images_) {
    if (y >= images_.size() || seen[y])
      throw std::invalid_argument("not a bijection: " + to_string());
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<PointId> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<PointId>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<PointId>(i);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in composition");
  Permutation p;
  p.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) p.images_[i] = a.images_[b.images_[i]];
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      os << (first ? "" : " ") << x;
      first = false;
      x = images_[x];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

// ---------------------------------------------------------------- FiniteGroup

namespace {

struct ImagesHash {
  std::size_t operator()(const Permutation& p) const {
    return boost::hash_range(p.images().begin(), p.images().end());
  }
};

}  // namespace

FiniteGroup group_from_generators(std::size_t degree, std::span<const Permutation> generators) {
  if (degree == 0) throw std::invalid_argument("degree must be positive");
  for (const auto& s : generators)
    if (s.degree() != degree)
      throw std::invalid_argument("generator " + s.to_string() + " is not a bijection on 0.." +
                                  std::to_string(degree - 1));

  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_map<Permutation, ElementId, ImagesHash> index{{elements.front(), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      Permutation next = elements[head] * s;
      if (index.try_emplace(next, static_cast<ElementId>(elements.size())).second)
        elements.push_back(std::move(next));
    }
  }

  FiniteGroup g;
  g.order_ = elements.size();
  g.identity_ = 0;
  g.mul_.resize(g.order_ * g.order_);
  g.inv_.resize(g.order_);
  for (std::size_t a = 0; a < g.order_; ++a) {
    for (std::size_t b = 0; b < g.order_; ++b) g.mul_[a * g.order_ + b] = index.at(elements[a] * elements[b]);
    g.inv_[a] = index.at(elements[a].inverse());
  }
  g.labels_ = std::move(elements);
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<ElementId>> table, std::uint64_t assoc_budget,
                                    std::uint64_t seed) {
  const std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("group table is empty");
  FiniteGroup g;
  g.order_ = n;
  g.mul_.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("group table is not square");
    for (ElementId v : row) {
      if (v >= n) throw std::invalid_argument("group table entry out of range");
      g.mul_.push_back(v);
    }
  }
  // identity: the element whose row and column are both the identity map
  std::optional<ElementId> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = g.mul(a, b) == b && g.mul(b, a) == b;
    if (ok) e = static_cast<ElementId>(a);
  }
  if (!e) throw std::invalid_argument("group table has no identity element");
  g.identity_ = *e;
  g.inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (g.mul(a, b) == *e) {
        g.inv_[a] = static_cast<ElementId>(b);
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
  }
  auto report = g.check_axioms(assoc_budget, seed);
  if (!report.ok()) throw std::invalid_argument(*report.failure);
  return g;
}

GroupAxiomReport FiniteGroup::check_axioms(std::uint64_t assoc_budget, std::uint64_t seed) const {
  GroupAxiomReport report;
  const std::size_t n = order_;
  for (ElementId g = 0; g < n; ++g) {
    if (mul(identity_, g) != g || mul(g, identity_) != g) {
      report.failure = "identity law fails at element " + std::to_string(g);
      return report;
    }
    if (mul(g, inv_[g]) != identity_ || mul(inv_[g], g) != identity_) {
      report.failure = "inverse law fails at element " + std::to_string(g);
      return report;
    }
  }
  auto check = [&](ElementId a, ElementId b, ElementId c) {
    ++report.triples_checked;
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      report.failure = "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + ")";
      return false;
    }
    return true;
  };
  const auto total = static_cast<std::uint64_t>(n) * n * n;
  if (total <= assoc_budget) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        for (ElementId c = 0; c < n; ++c)
          if (!check(a, b, c)) return report;
  } else {
    report.associativity_exhaustive = false;
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < assoc_budget; ++t) {
      auto a = static_cast<ElementId>(rng() % n);
      auto b = static_cast<ElementId>(rng() % n);
      auto c = static_cast<ElementId>(rng() % n);
      if (!check(a, b, c)) return report;
    }
  }
  return report;
}

std::optional<ElementId> FiniteGroup::find(const Permutation& p) const {
  for (std::size_t a = 0; a < labels_.size(); ++a)
    if (labels_[a] == p) return static_cast<ElementId>(a);
  return std::nullopt;
}

// ---------------------------------------------------------------- subgroups

bool Subgroup::contains(ElementId g) const { return std::binary_search(members.begin(), members.end(), g); }

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const ElementId> seeds) {
  for (ElementId s : seeds)
    if (s >= g.order()) throw std::out_of_range("element index " + std::to_string(s) + " out of range");
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> found{g.identity()};
  in[g.identity()] = true;
  // closure under right multiplication by seeds suffices in a finite group
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (ElementId s : seeds) {
      ElementId next = g.mul(found[head], s);
      if (!in[next]) {
        in[next] = true;
        found.push_back(next);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup{std::move(found)};
}

void validate_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!std::is_sorted(h.members.begin(), h.members.end()) ||
      std::adjacent_find(h.members.begin(), h.members.end()) != h.members.end())
    throw std::invalid_argument("subgroup members must be sorted and distinct");
  for (ElementId a : h.members)
    if (a >= g.order()) throw std::invalid_argument("subgroup member out of range");
  if (!h.contains(g.identity())) throw std::invalid_argument("subgroup lacks the identity");
  for (ElementId a : h.members) {
    if (!h.contains(g.inv(a))) throw std::invalid_argument("subgroup not closed under inverses");
    for (ElementId b : h.members)
      if (!h.contains(g.mul(a, b))) throw std::invalid_argument("subgroup not closed under multiplication");
  }
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId a : h.members)
      if (!h.contains(g.mul(g.mul(x, a), g.inv(x)))) return false;
  return true;
}

CosetSpace left_cosets(const FiniteGroup& g, const Subgroup& h) {
  CosetSpace cs;
  cs.subgroup = h;
  constexpr auto unset = static_cast<std::size_t>(-1);
  cs.coset_of.assign(g.order(), unset);
  // ascending scan makes the first unseen element the smallest of its coset
  for (ElementId a = 0; a < g.order(); ++a) {
    if (cs.coset_of[a] != unset) continue;
    std::vector<ElementId> coset;
    coset.reserve(h.order());
    for (ElementId s : h.members) coset.push_back(g.mul(a, s));
    std::sort(coset.begin(), coset.end());
    for (ElementId b : coset) cs.coset_of[b] = cs.cosets.size();
    cs.representatives.push_back(a);
    cs.cosets.push_back(std::move(coset));
  }
  return cs;
}

Subgroup normal_core(const FiniteGroup& g, const Subgroup& h) {
  std::vector<ElementId> core;
  for (ElementId a : h.members) {
    bool in_all = true;
    // a lies in xHx^-1 iff x^-1 a x lies in H
    for (ElementId x = 0; x < g.order() && in_all; ++x) in_all = h.contains(g.mul(g.mul(g.inv(x), a), x));
    if (in_all) core.push_back(a);
  }
  return Subgroup{std::move(core)};
}

Subgroup center(const FiniteGroup& g) {
  std::vector<ElementId> z;
  for (ElementId a = 0; a < g.order(); ++a) {
    bool central = true;
    for (ElementId b = 0; b < g.order() && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return Subgroup{std::move(z)};
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<ElementId> all(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) all[a] = static_cast<ElementId>(a);
  return Subgroup{std::move(all)};
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

}  // namespace homspace
