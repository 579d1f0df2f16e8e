#pragma once

#include <cstddef>

#include <Eigen/Dense>

// Dense helpers shared by the spectral code. All bases here are orthonormal
// in the Euclidean inner product.

namespace homspace::linalg {

double spectral_norm(const Eigen::MatrixXcd& m);

/// Singular values below tol_rank * (largest) count as zero.
std::size_t numerical_rank(const Eigen::MatrixXcd& m, double tol_rank);

/// Orthonormal basis of the column space of `m`, rank decided as above.
/// Returns an n x 0 matrix for a zero input.
Eigen::MatrixXcd orthonormal_range(const Eigen::MatrixXcd& m, double tol_rank);

/// || E1 E1^* - E2 E2^* ||_2 for orthonormal bases E1, E2.
double projector_distance(const Eigen::MatrixXcd& e1, const Eigen::MatrixXcd& e2);

/// dim(span E1 ∩ span E2): the number of principal angles whose sine is at
/// most `tol`, i.e. singular values of (I - E2 E2^*) E1 that are <= tol.
std::size_t intersection_dim(const Eigen::MatrixXcd& e1, const Eigen::MatrixXcd& e2, double tol);

/// Canonical orthonormal basis of span E, depending only on the subspace up to
/// rounding: pivoted Gram-Schmidt on the columns of E E^*, preferring the
/// smallest point index among near-maximal residuals, each vector phased so its
/// pivot entry is real and positive.
Eigen::MatrixXcd canonical_basis(const Eigen::MatrixXcd& e);

}  // namespace homspace::linalg
