#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "homspace/measure.hpp"
#include "support.hpp"

using namespace homspace;

namespace {

InvariantMeasure weights(std::vector<Rational> w) { return InvariantMeasure{std::move(w)}; }

}  // namespace

TEST_CASE("Haar measure is uniform and bi-invariant") {
  const FiniteGroup z4 = build(cyclic(4));
  CHECK(haar(z4).to_strings() == std::vector<std::string>{"1/4", "1/4", "1/4", "1/4"});
  CHECK(haar(build(cyclic(1))).to_strings() == std::vector<std::string>{"1/1"});
  const FiniteGroup s3 = build(symmetric(3));
  CHECK(bi_invariant_and_symmetric(s3, haar(s3)));
  std::vector<Rational> skew(6, Rational(1, 6));
  skew[0] = Rational(1, 3);
  skew[1] = Rational(0);
  CHECK_FALSE(bi_invariant_and_symmetric(s3, weights(skew)));
}

TEST_CASE("invariant measure from every base point") {
  auto s3 = support::make(symmetric(3));
  const GroupAction nat = natural_action(s3);
  for (PointId x = 0; x < 3; ++x) {
    const InvariantMeasure mu = invariant_measure(nat, x);
    CHECK(mu.to_strings() == std::vector<std::string>{"1/3", "1/3", "1/3"});
    CHECK(verify_invariance(mu, nat));
  }
  const GroupAction one = regular_action(support::make(cyclic(1)));
  CHECK(invariant_measure(one, 0).to_strings() == std::vector<std::string>{"1/1"});
  CHECK(to_fraction_string(Rational(6, 4)) == "3/2");
}

TEST_CASE("verify_invariance detects a non-invariant measure") {
  auto s3 = support::make(symmetric(3));
  const GroupAction nat = natural_action(s3);
  CHECK_FALSE(verify_invariance(weights({Rational(1, 2), Rational(1, 4), Rational(1, 4)}), nat));
  const GroupAction triv = natural_action(
      std::make_shared<const FiniteGroup>(group_from_generators(3, std::span<const Permutation>{})));
  CHECK(verify_invariance(weights({Rational(1, 2), Rational(1, 4), Rational(1, 4)}), triv));
}

TEST_CASE("dimension of invariant measures equals the orbit count") {
  auto z2 = std::make_shared<const FiniteGroup>(
      build(NamedGroup{4, {Permutation(std::vector<PointId>{1, 0, 3, 2})}}));
  CHECK(invariant_measure_space_dim(natural_action(z2)) == 2);
  CHECK_THROWS_AS(invariant_measure(natural_action(z2), 0), NotTransitive);
  CHECK(invariant_measure_space_dim(natural_action(support::make(symmetric(4)))) == 1);
  const GroupAction triv = natural_action(
      std::make_shared<const FiniteGroup>(group_from_generators(5, std::span<const Permutation>{})));
  CHECK(invariant_measure_space_dim(triv) == 5);
  CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rational_rank({{Rational(1, 3), 1}, {1, Rational(1, 3)}}) == 2);
}

TEST_CASE("norms and inner products under uniform measure") {
  auto z4 = support::make(cyclic(4));
  const GroupAction reg = regular_action(z4);
  const InvariantMeasure mu = invariant_measure(reg, 0);
  const Function one = Function::Ones(4);
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (double p : {1.0, 2.0, 3.5, inf}) CHECK(lp_norm(one, p, mu) == doctest::Approx(1.0).epsilon(1e-15));
  Function delta = Function::Zero(4);
  delta(2) = 1.0;
  CHECK(lp_norm(delta, 2.0, mu) == doctest::Approx(0.5));
  CHECK(lp_norm(delta, inf, mu) == 1.0);

  // characters of Z4 indexed by the rotation each element performs
  const double pi = std::acos(-1.0);
  auto character = [&](int k) {
    Function chi(4);
    for (PointId y = 0; y < 4; ++y) chi(y) = std::polar(1.0, 2.0 * pi * k * z4->label(y)(0) / 4.0);
    return chi;
  };
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      const std::complex<double> ip = inner_product(character(j), character(k), mu);
      CHECK(std::abs(ip - (j == k ? 1.0 : 0.0)) < 1e-15);
    }
  CHECK_THROWS(lp_norm(one, 0.5, mu));
}

TEST_CASE("property: measures on random actions") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    CAPTURE(trial);
    auto g = support::make(support::random_group(rng));
    const GroupAction nat = natural_action(g);
    const ActionProfile p = classify(nat);
    CHECK(invariant_measure_space_dim(nat) == p.orbit_count);
    CHECK(bi_invariant_and_symmetric(*g, haar(*g)));
    const GroupAction reg = regular_action(g);
    const InvariantMeasure mu = invariant_measure(reg, 0);
    CHECK(verify_invariance(mu, reg));
    Rational total = 0;
    for (const auto& w : mu.weights) total += w;
    CHECK(total == 1);
    if (p.transitive) {
      for (PointId x = 0; x < nat.degree(); ++x) {
        const InvariantMeasure m = invariant_measure(nat, x);
        for (const auto& w : m.weights) CHECK(w == Rational(1, static_cast<long long>(nat.degree())));
      }
    }
  }
}
