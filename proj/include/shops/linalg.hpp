#pragma once

#include <Eigen/Dense>
#include <complex>

#include "shops/errors.hpp"

namespace shops {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace linalg {

/// Default tolerance for positive-semidefiniteness decisions. A Hermitian
/// matrix H passes when lambda_min(H) >= -tol * max(1, ||H||_2).
inline constexpr double kPsdTol = 1e-9;

/// Relative rank cutoff factor: singular values below
/// max(rows, cols) * sigma_max * kRankCutoffFactor are treated as zero.
inline constexpr double kRankCutoffFactor = 1e-12;

/// A matrix handed to is_psd may deviate from Hermitian by at most
/// kHermSlackFactor * tol * ||M||_2 before being rejected outright;
/// smaller deviations are symmetrized away.
inline constexpr double kHermSlackFactor = 100.0;

struct PsdVerdict {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  /// Unit eigenvector for the minimal eigenvalue; when is_psd is false it
  /// certifies the failure (witness^* M witness = min_eigenvalue < 0).
  Vector witness;
};

struct HermEig {
  RealVector values;  // ascending
  Matrix vectors;     // columns are the matching orthonormal eigenvectors
};

/// (M + M^*)/2.
Matrix hermitize(const Matrix& m);

/// Eigendecomposition of a Hermitian matrix (input is symmetrized first).
/// Deterministic for a fixed input.
HermEig eigh(const Matrix& m);

/// Largest singular value.
double spectral_norm(const Matrix& m);

/// max |lambda_i| over the (complex) eigenvalues of a square matrix.
double spectral_radius(const Matrix& m);

/// Moore-Penrose pseudoinverse via SVD with the relative rank cutoff above.
Matrix pinv(const Matrix& m);

/// PSD square root of a Hermitian PSD matrix (tiny negative eigenvalues are
/// clamped to zero).
Matrix sqrt_psd(const Matrix& m);

/// Positive-semidefiniteness check with explicit tolerance semantics:
/// symmetrizes the input, rejects matrices that are not even approximately
/// Hermitian, and reports the minimal eigenvalue plus its eigenvector.
PsdVerdict is_psd(const Matrix& m, double tol = kPsdTol);

/// Kronecker product; the first factor varies slowest (block (i,j) of the
/// result is a(i,j) * b).
Matrix kron(const Matrix& a, const Matrix& b);

/// Throws Errc::invalid_input when the matrix is empty or has a non-finite
/// entry. `name` labels the offending input in the message.
void require_finite(const Matrix& m, const char* name);

}  // namespace linalg
}  // namespace shops
