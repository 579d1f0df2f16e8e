#include "homspace/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace homspace {

namespace {

double sorted_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

void require_length(const Function& f, const InvariantMeasure& mu) {
  if (static_cast<std::size_t>(f.size()) != mu.size())
    throw std::invalid_argument("function length does not match the measure");
}

}  // namespace

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::vector<double> InvariantMeasure::as_doubles() const {
  std::vector<double> out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(w.convert_to<double>());
  return out;
}

std::vector<std::string> InvariantMeasure::to_strings() const {
  std::vector<std::string> out;
  out.reserve(weights.size());
  for (const auto& w : weights) out.push_back(to_fraction_string(w));
  return out;
}

InvariantMeasure haar(const FiniteGroup& g) {
  return InvariantMeasure{std::vector<Rational>(g.order(), Rational(1, static_cast<long long>(g.order())))};
}

bool bi_invariant_and_symmetric(const FiniteGroup& g, const InvariantMeasure& m) {
  if (m.size() != g.order()) return false;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (m.weights[g.inv(x)] != m.weights[x]) return false;
    for (ElementId a = 0; a < g.order(); ++a)
      if (m.weights[g.mul(a, x)] != m.weights[x] || m.weights[g.mul(x, a)] != m.weights[x]) return false;
  }
  return true;
}

InvariantMeasure invariant_measure(const GroupAction& a, PointId base) {
  require_transitive(a);
  if (base >= a.degree()) throw std::out_of_range("base point out of range");
  const FiniteGroup& g = a.group();
  std::vector<long long> hits(a.degree(), 0);
  for (ElementId gamma = 0; gamma < g.order(); ++gamma) ++hits[a.act(gamma, base)];
  InvariantMeasure mu;
  mu.weights.reserve(a.degree());
  for (long long h : hits) mu.weights.emplace_back(h, static_cast<long long>(g.order()));
  return mu;
}

bool verify_invariance(const InvariantMeasure& mu, const GroupAction& a) {
  if (mu.size() != a.degree()) return false;
  // pushforward of mu by phi_alpha evaluated on {y} is mu(phi_alpha^-1 {y})
  for (ElementId alpha = 0; alpha < a.group().order(); ++alpha) {
    const ElementId inv = a.group().inv(alpha);
    for (PointId y = 0; y < a.degree(); ++y)
      if (mu.weights[a.act(inv, y)] != mu.weights[y]) return false;
  }
  return true;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t invariant_measure_space_dim(const GroupAction& a) {
  const std::size_t n = a.degree();
  std::vector<std::vector<Rational>> rows;
  // constraints w(alpha y) - w(y) = 0; generators would suffice but all of G is exact and cheap
  for (ElementId alpha = 0; alpha < a.group().order(); ++alpha) {
    for (PointId y = 0; y < n; ++y) {
      const PointId z = a.act(alpha, y);
      if (z == y) continue;
      std::vector<Rational> row(n, Rational(0));
      row[z] = 1;
      row[y] = -1;
      rows.push_back(std::move(row));
    }
  }
  return n - rational_rank(std::move(rows));
}

std::complex<double> inner_product(const Function& f, const Function& g, const InvariantMeasure& mu) {
  require_length(f, mu);
  require_length(g, mu);
  const auto w = mu.as_doubles();
  std::vector<double> re, im;
  for (Eigen::Index x = 0; x < f.size(); ++x) {
    const std::complex<double> t = f[x] * std::conj(g[x]) * w[static_cast<std::size_t>(x)];
    re.push_back(t.real());
    im.push_back(t.imag());
  }
  return {sorted_sum(std::move(re)), sorted_sum(std::move(im))};
}

std::complex<double> integral(const Function& f, const InvariantMeasure& mu) {
  require_length(f, mu);
  const auto w = mu.as_doubles();
  std::vector<double> re, im;
  for (Eigen::Index x = 0; x < f.size(); ++x) {
    re.push_back(f[x].real() * w[static_cast<std::size_t>(x)]);
    im.push_back(f[x].imag() * w[static_cast<std::size_t>(x)]);
  }
  return {sorted_sum(std::move(re)), sorted_sum(std::move(im))};
}

double lp_norm(const Function& f, double p, const InvariantMeasure& mu) {
  require_length(f, mu);
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm needs p >= 1");
  const auto w = mu.as_doubles();
  if (std::isinf(p)) {
    double m = 0.0;
    for (Eigen::Index x = 0; x < f.size(); ++x)
      if (w[static_cast<std::size_t>(x)] > 0.0) m = std::max(m, std::abs(f[x]));
    return m;
  }
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(f.size()));
  for (Eigen::Index x = 0; x < f.size(); ++x)
    terms.push_back(std::pow(std::abs(f[x]), p) * w[static_cast<std::size_t>(x)]);
  const double s = sorted_sum(std::move(terms));
  return p == 1.0 ? s : std::pow(s, 1.0 / p);
}

}  // namespace homspace
