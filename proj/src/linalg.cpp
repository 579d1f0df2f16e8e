#include "homspace/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/SVD>

namespace homspace::linalg {

// JacobiSVD throughout: BDCSVD in Eigen 3.4.0 can return wrong singular
// vectors when many singular values coincide, which is the common case here.

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

std::size_t numerical_rank(const Eigen::MatrixXcd& m, double tol_rank) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol_rank * s(0)) ++r;
  return r;
}

Eigen::MatrixXcd orthonormal_range(const Eigen::MatrixXcd& m, double tol_rank) {
  if (m.cols() == 0) return Eigen::MatrixXcd(m.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Eigen::Index r = 0;
  if (s(0) > 0.0)
    while (r < s.size() && s(r) > tol_rank * s(0)) ++r;
  return svd.matrixU().leftCols(r);
}

double projector_distance(const Eigen::MatrixXcd& e1, const Eigen::MatrixXcd& e2) {
  const Eigen::MatrixXcd p1 = e1 * e1.adjoint();
  const Eigen::MatrixXcd p2 = e2 * e2.adjoint();
  if (p1.size() == 0) return spectral_norm(p2);
  if (p2.size() == 0) return spectral_norm(p1);
  return spectral_norm(p1 - p2);
}

std::size_t intersection_dim(const Eigen::MatrixXcd& e1, const Eigen::MatrixXcd& e2, double tol) {
  if (e1.cols() == 0 || e2.cols() == 0) return 0;
  const Eigen::MatrixXcd outside = e1 - e2 * (e2.adjoint() * e1);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(outside);
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) <= tol) ++count;
  return count;
}

Eigen::MatrixXcd canonical_basis(const Eigen::MatrixXcd& e) {
  const Eigen::Index n = e.rows();
  const Eigen::Index d = e.cols();
  Eigen::MatrixXcd residual = e * e.adjoint();
  Eigen::MatrixXcd out(n, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    std::vector<double> norms(static_cast<std::size_t>(n));
    double best = 0.0;
    for (Eigen::Index c = 0; c < n; ++c) {
      norms[static_cast<std::size_t>(c)] = residual.col(c).norm();
      best = std::max(best, norms[static_cast<std::size_t>(c)]);
    }
    Eigen::Index pivot = 0;
    while (norms[static_cast<std::size_t>(pivot)] < best * (1.0 - 1e-6)) ++pivot;
    Eigen::VectorXcd v = residual.col(pivot) / norms[static_cast<std::size_t>(pivot)];
    // two passes of classical Gram-Schmidt against earlier vectors
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < k; ++j) v -= out.col(j) * out.col(j).dot(v);
    v.normalize();
    const std::complex<double> lead = v(pivot);
    v *= std::conj(lead) / std::abs(lead);
    v(pivot) = std::abs(v(pivot));
    out.col(k) = v;
    residual -= v * (v.adjoint() * residual);
  }
  return out;
}

}  // namespace homspace::linalg
