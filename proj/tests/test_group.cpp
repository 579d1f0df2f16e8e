#include <doctest.h>

#include "homspace/group.hpp"
#include "support.hpp"

using namespace homspace;

namespace {

Permutation perm(std::vector<PointId> v) { return Permutation(std::move(v)); }

std::set<oracle::Perm> labels_of(const FiniteGroup& g) {
  std::set<oracle::Perm> out;
  for (ElementId e = 0; e < g.order(); ++e) out.insert(support::to_oracle(g.label(e)));
  return out;
}

ElementId index_of(const FiniteGroup& g, std::vector<PointId> images) { return g.find(perm(std::move(images))).value(); }

}  // namespace

TEST_CASE("permutations validate, compose right to left and print") {
  CHECK_THROWS_AS(perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 3, 1}), std::invalid_argument);
  const Permutation a = perm({1, 0, 2});
  const Permutation b = perm({0, 2, 1});
  CHECK((a * b) == perm({1, 2, 0}));  // a(b(0)) = a(0) = 1
  CHECK(a.to_string() == "[1,0,2]");
  CHECK(perm({1, 2, 0, 3}).to_cycle_string() == "(0 1 2)");
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("generation matches brute-force closure") {
  const std::vector<Permutation> s3 = {perm({1, 0, 2}), perm({1, 2, 0})};
  const FiniteGroup g = group_from_generators(3, s3);
  CHECK(g.order() == 6);
  CHECK(labels_of(g) == oracle::all_permutations(3));

  const std::vector<Permutation> none;
  CHECK(group_from_generators(5, none).order() == 1);

  const std::vector<Permutation> c4 = {perm({1, 2, 3, 0})};
  CHECK(group_from_generators(4, c4).order() == 4);

  CHECK_THROWS_AS(group_from_generators(0, none), std::invalid_argument);
  const std::vector<Permutation> wrong = {perm({1, 0})};
  CHECK_THROWS_AS(group_from_generators(3, wrong), std::invalid_argument);
}

TEST_CASE("generation is breadth first from the identity and deterministic") {
  const std::vector<Permutation> gens = {perm({1, 2, 3, 0})};
  const FiniteGroup g = group_from_generators(4, gens);
  CHECK(g.identity() == 0);
  CHECK(g.label(0).is_identity());
  for (ElementId i = 0; i < 4; ++i) CHECK(g.label(i)(0) == i);  // element i is the rotation by i
  const FiniteGroup h = group_from_generators(4, gens);
  for (ElementId a = 0; a < 4; ++a)
    for (ElementId b = 0; b < 4; ++b) CHECK(g.mul(a, b) == h.mul(a, b));
}

TEST_CASE("named families have the expected orders") {
  CHECK(build(cyclic(12)).order() == 12);
  CHECK(build(dihedral(4)).order() == 8);
  CHECK(build(dihedral(5)).order() == 10);
  CHECK(build(symmetric(4)).order() == 24);
  CHECK(build(cyclic(1)).order() == 1);
  const FiniteGroup q8 = build(quaternion8());
  CHECK(q8.order() == 8);
  CHECK(center(q8).order() == 2);
  std::size_t involutions = 0;
  for (ElementId e = 0; e < 8; ++e)
    if (e != q8.identity() && q8.mul(e, e) == q8.identity()) ++involutions;
  CHECK(involutions == 1);  // only -1, unlike D4
  CHECK(build(direct_product(cyclic(2), cyclic(3))).order() == 6);
  CHECK_THROWS_AS(dihedral(2), std::invalid_argument);
}

TEST_CASE("from_table validates the group axioms") {
  const FiniteGroup z3 = FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(z3.order() == 3);
  CHECK(z3.inv(1) == 2);
  CHECK_FALSE(z3.has_labels());
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), std::invalid_argument);
  CHECK(z3.check_axioms().ok());
  CHECK(z3.check_axioms().associativity_exhaustive);
}

TEST_CASE("associativity beyond the budget is sampled") {
  const FiniteGroup s4 = build(symmetric(4));
  const GroupAxiomReport r = s4.check_axioms(1000, 7);
  CHECK(r.ok());
  CHECK_FALSE(r.associativity_exhaustive);
  CHECK(r.triples_checked == 1000);
}

TEST_CASE("subgroups, normality and cosets on S3") {
  const FiniteGroup g = build(symmetric(3));
  const ElementId rot = index_of(g, {1, 2, 0});
  const ElementId swap = index_of(g, {1, 0, 2});

  const std::vector<ElementId> rs = {rot};
  const Subgroup a3 = subgroup_generated(g, rs);
  CHECK(a3.order() == 3);
  CHECK(is_normal(g, a3));

  const std::vector<ElementId> ts = {swap};
  const Subgroup t = subgroup_generated(g, ts);
  CHECK(t.order() == 2);
  CHECK_FALSE(is_normal(g, t));
  CHECK(normal_core(g, t) == trivial_subgroup(g));
  CHECK(normal_core(g, a3) == a3);
  CHECK(normal_core(g, whole_group(g)) == whole_group(g));

  const CosetSpace cs = left_cosets(g, t);
  CHECK(cs.cosets.size() == 3);
  CHECK(cs.representatives.front() == g.identity());
  CHECK(left_cosets(g, whole_group(g)).cosets.size() == 1);
  CHECK(left_cosets(g, trivial_subgroup(g)).cosets.size() == 6);

  const std::vector<ElementId> empty;
  CHECK(subgroup_generated(g, empty) == trivial_subgroup(g));
  const std::vector<ElementId> every = {0, 1, 2, 3, 4, 5};
  CHECK(subgroup_generated(g, every) == whole_group(g));
  const std::vector<ElementId> bad = {6};
  CHECK_THROWS_AS(subgroup_generated(g, bad), std::out_of_range);
  CHECK(is_normal(g, trivial_subgroup(g)));
  CHECK_THROWS_AS(validate_subgroup(g, Subgroup{{0, swap, rot}}), std::invalid_argument);
}

TEST_CASE("property: random permutation groups against the oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    CAPTURE(trial);
    const NamedGroup named = support::random_group(rng);
    const FiniteGroup g = build(named);
    std::vector<oracle::Perm> gens;
    for (const auto& p : named.generators) gens.push_back(support::to_oracle(p));
    const auto ref = oracle::closure(named.degree, gens);
    REQUIRE(g.order() == ref.size());
    CHECK(labels_of(g) == ref);
    CHECK(g.check_axioms().ok());

    // table agrees with composition of labels
    for (ElementId a = 0; a < g.order(); ++a)
      for (ElementId b = 0; b < g.order(); ++b) REQUIRE(g.label(g.mul(a, b)) == g.label(a) * g.label(b));

    // a random cyclic subgroup: normality, core and Lagrange
    const std::vector<ElementId> seeds = {static_cast<ElementId>(rng() % g.order())};
    const Subgroup h = subgroup_generated(g, seeds);
    std::set<oracle::Perm> href;
    for (ElementId m : h.members) href.insert(support::to_oracle(g.label(m)));
    CHECK(is_normal(g, h) == oracle::is_normal(ref, href));
    CHECK(is_normal(g, h) == (normal_core(g, h) == h));
    CHECK(is_normal(g, normal_core(g, h)));
    const CosetSpace cs = left_cosets(g, h);
    CHECK(cs.cosets.size() * h.order() == g.order());
    std::vector<ElementId> all;
    for (const auto& c : cs.cosets) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    CHECK(all.size() == g.order());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}
