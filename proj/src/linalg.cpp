#include "shops/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <string>

namespace shops::linalg {

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

HermEig eigh(const Matrix& m) {
  if (m.rows() != m.cols()) fail(Errc::not_square, "eigh: matrix is not square");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(m));
  if (solver.info() != Eigen::Success)
    fail(Errc::invalid_input, "eigh: eigendecomposition did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double spectral_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double spectral_radius(const Matrix& m) {
  if (m.rows() != m.cols()) fail(Errc::not_square, "spectral_radius: matrix is not square");
  if (m.size() == 0) return 0.0;
  Eigen::ComplexEigenSolver<Matrix> solver(m, false);
  if (solver.info() != Eigen::Success)
    fail(Errc::invalid_input, "spectral_radius: eigendecomposition did not converge");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

Matrix pinv(const Matrix& m) {
  require_finite(m, "pinv input");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return Matrix::Zero(m.cols(), m.rows());
  const double cutoff =
      static_cast<double>(std::max(m.rows(), m.cols())) * sv(0) * kRankCutoffFactor;
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) inv(i) = sv(i) > cutoff ? 1.0 / sv(i) : 0.0;
  return svd.matrixV() * inv.cast<Complex>().asDiagonal() * svd.matrixU().adjoint();
}

Matrix sqrt_psd(const Matrix& m) {
  HermEig eig = eigh(m);
  Eigen::VectorXd roots(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    roots(i) = eig.values(i) > 0.0 ? std::sqrt(eig.values(i)) : 0.0;
  return eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

PsdVerdict is_psd(const Matrix& m, double tol) {
  require_finite(m, "is_psd input");
  if (m.rows() != m.cols()) fail(Errc::not_square, "is_psd: matrix is not square");
  const double norm = spectral_norm(m);
  const double asym = spectral_norm(m - m.adjoint());
  if (asym > kHermSlackFactor * tol * norm)
    throw Error(Errc::not_hermitian, "is_psd: matrix is not Hermitian within tolerance")
        .with_residual(asym);
  HermEig eig = eigh(m);
  PsdVerdict verdict;
  verdict.min_eigenvalue = eig.values(0);
  verdict.witness = eig.vectors.col(0);
  verdict.is_psd = verdict.min_eigenvalue >= -tol * std::max(1.0, norm);
  return verdict;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void require_finite(const Matrix& m, const char* name) {
  if (m.size() == 0)
    fail(Errc::invalid_input, std::string(name) + " is empty");
  if (!m.allFinite())
    fail(Errc::invalid_input, std::string(name) + " has non-finite entries");
}

}  // namespace shops::linalg
