#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "homspace/action.hpp"

namespace homspace {

using Rational = boost::multiprecision::cpp_rational;

/// Complex function on the point set, an element of C(X) = L^2(mu).
using Function = Eigen::VectorXcd;

/// Exact probability weights on a finite set (points of X, or elements of G).
struct InvariantMeasure {
  std::vector<Rational> weights;

  std::size_t size() const noexcept { return weights.size(); }
  std::vector<double> as_doubles() const;
  /// Weights as "p/q" strings; integers are written "p/1".
  std::vector<std::string> to_strings() const;
  friend bool operator==(const InvariantMeasure&, const InvariantMeasure&) = default;
};

std::string to_fraction_string(const Rational& r);

/// Uniform probability on the group elements.
InvariantMeasure haar(const FiniteGroup& g);

/// True iff m(g) = m(a g) = m(g a) = m(g^-1) for all a, g (m is a measure on
/// the group elements).
bool bi_invariant_and_symmetric(const FiniteGroup& g, const InvariantMeasure& m);

/// Pushforward of Haar measure along gamma -> gamma * base:
/// weight(y) = |{gamma : gamma base = y}| / |G|. Throws NotTransitive.
InvariantMeasure invariant_measure(const GroupAction& a, PointId base);

/// True iff mu(alpha^-1 {y}) = mu({y}) for every alpha and every point y.
bool verify_invariance(const InvariantMeasure& mu, const GroupAction& a);

/// Dimension of the space of signed measures w with w(alpha y) = w(y) for all
/// alpha, y; computed by exact rational elimination. A value of 1 means the
/// invariant probability measure is unique.
std::size_t invariant_measure_space_dim(const GroupAction& a);

/// Rank of a rational matrix by fraction-exact Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

// The sums below add their terms in sorted order, so relabelling the points
// (e.g. precomposing with a measure-preserving permutation) cannot change the
// rounded result.

/// Sum of f(x) conj(g(x)) w(x).
std::complex<double> inner_product(const Function& f, const Function& g, const InvariantMeasure& mu);
/// Sum of f(x) w(x).
std::complex<double> integral(const Function& f, const InvariantMeasure& mu);
/// (sum |f|^p w)^(1/p), or the essential sup over positive-weight points when
/// p is infinite. Requires p >= 1.
double lp_norm(const Function& f, double p, const InvariantMeasure& mu);

}  // namespace homspace
