#include <doctest.h>

#include "homspace/action.hpp"
#include "support.hpp"

using namespace homspace;

namespace {

std::vector<std::vector<PointId>> table_of(const GroupAction& a) {
  std::vector<std::vector<PointId>> t(a.group().order(), std::vector<PointId>(a.degree()));
  for (ElementId g = 0; g < a.group().order(); ++g)
    for (PointId x = 0; x < a.degree(); ++x) t[g][x] = a.act(g, x);
  return t;
}

}  // namespace

TEST_CASE("make_action rejects axiom violations with the offending triple") {
  auto z4 = support::make(cyclic(4));
  auto t = table_of(regular_action(z4));
  CHECK_NOTHROW(make_action(z4, 4, t));

  auto broken = t;
  broken[z4->identity()][2] = 3;
  broken[z4->identity()][3] = 2;
  try {
    make_action(z4, 4, broken);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& v) {
    CHECK(v.axiom() == 1);
    CHECK(v.x() == 2);
  }

  // swap two non-identity rows: identity holds, compatibility fails
  auto swapped = t;
  std::swap(swapped[1], swapped[2]);
  try {
    make_action(z4, 4, swapped);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& v) {
    CHECK(v.axiom() == 2);
    CHECK(swapped[z4->mul(static_cast<ElementId>(v.alpha()), static_cast<ElementId>(v.beta()))][v.x()] !=
          swapped[v.alpha()][swapped[v.beta()][v.x()]]);
  }

  CHECK_THROWS_AS(make_action(z4, 4, {{0, 1, 2, 3}}), std::invalid_argument);
  auto out_of_range = t;
  out_of_range[1][0] = 9;
  CHECK_THROWS_AS(make_action(z4, 4, out_of_range), std::invalid_argument);
}

TEST_CASE("classification of the standard instances") {
  auto s3 = support::make(symmetric(3));
  const ActionProfile nat = classify(natural_action(s3));
  CHECK(nat.transitive);
  CHECK(nat.faithful);
  CHECK_FALSE(nat.free);

  const ActionProfile reg = classify(regular_action(support::make(cyclic(4))));
  CHECK(reg.transitive);
  CHECK(reg.free);
  CHECK(reg.faithful);

  auto q8 = support::make(quaternion8());
  const GroupAction q = coset_action(q8, center(*q8));
  const ActionProfile qp = classify(q);
  CHECK(q.degree() == 4);
  CHECK(qp.transitive);
  CHECK_FALSE(qp.faithful);
  CHECK_FALSE(qp.free);

  auto z2 = std::make_shared<const FiniteGroup>(
      build(NamedGroup{4, {Permutation(std::vector<PointId>{1, 0, 3, 2})}}));
  const ActionProfile two = classify(natural_action(z2));
  CHECK_FALSE(two.transitive);
  CHECK(two.orbit_count == 2);
  CHECK_THROWS_AS(require_transitive(natural_action(z2)), NotTransitive);
}

TEST_CASE("stabilizers") {
  auto s3 = support::make(symmetric(3));
  const GroupAction nat = natural_action(s3);
  const Subgroup s0 = stabilizer(nat, 0);
  CHECK(s0.order() == 2);
  for (ElementId e : s0.members) CHECK(s3->label(e)(0) == 0);
  CHECK_THROWS_AS(stabilizer(nat, 3), std::out_of_range);

  const GroupAction reg = regular_action(s3);
  for (PointId x = 0; x < 6; ++x) CHECK(stabilizer(reg, x) == trivial_subgroup(*s3));

  const std::vector<ElementId> seed = {s3->find(Permutation(std::vector<PointId>{1, 0, 2})).value()};
  const Subgroup h = subgroup_generated(*s3, seed);
  const GroupAction cos = coset_action(s3, h);
  CHECK(cos.degree() == 3);
  CHECK(classify(cos).transitive);
  CHECK(stabilizer(cos, 0) == h);
}

TEST_CASE("regular and coset actions of trivial data") {
  auto one = support::make(cyclic(1));
  const GroupAction r = regular_action(one);
  CHECK(r.degree() == 1);
  CHECK(classify(r).transitive);
  auto z6 = support::make(cyclic(6));
  const ActionProfile p = classify(regular_action(z6));
  CHECK((p.transitive && p.free && p.faithful));
  const GroupAction c = coset_action(z6, trivial_subgroup(*z6));
  CHECK(c.degree() == 6);
  CHECK(classify(c).free);
  CHECK(coset_action(z6, whole_group(*z6)).degree() == 1);
}

TEST_CASE("property: action invariants on random groups") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    CAPTURE(trial);
    auto g = support::make(support::random_group(rng));
    const std::vector<ElementId> seeds = {static_cast<ElementId>(rng() % g->order())};
    const Subgroup h = subgroup_generated(*g, seeds);
    for (const GroupAction& a : {natural_action(g), regular_action(g), coset_action(g, h)}) {
      CHECK_FALSE(find_axiom_violation(*g, a.degree(), table_of(a)).has_value());
      const ActionProfile p = classify(a);
      const auto images = support::image_set(a);
      CHECK(p.orbit_count == oracle::orbit_count(a.degree(), images));
      CHECK(p.transitive == (p.orbit_count == 1));
      CHECK((!p.free || p.faithful));
      CHECK(p.faithful == (images.size() == g->order()));
      for (PointId x = 0; x < a.degree(); ++x) {
        const Subgroup sx = stabilizer(a, x);
        CHECK(orbit(a, x).size() * sx.order() == g->order());
        for (ElementId alpha = 0; alpha < g->order(); ++alpha) {
          std::vector<ElementId> conj;
          for (ElementId s : sx.members) conj.push_back(g->mul(g->mul(alpha, s), g->inv(alpha)));
          std::sort(conj.begin(), conj.end());
          CHECK(stabilizer(a, a.act(alpha, x)).members == conj);
        }
      }
    }
    const GroupAction c = coset_action(g, h);
    CHECK(classify(c).transitive);
    CHECK(stabilizer(c, 0) == h);
  }
}
