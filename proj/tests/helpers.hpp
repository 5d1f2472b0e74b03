#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "shops/harness.hpp"
#include "shops/linalg.hpp"
#include "shops/rng.hpp"
#include "shops/space.hpp"

namespace shops::test {

/// Matrix literal: mat({{1, 2}, {0, 1}}).
inline Matrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index c = static_cast<Eigen::Index>(rows.begin()->size());
  Matrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const Complex& z : row) m(i, j++) = z;
    ++i;
  }
  return m;
}

inline Matrix diag(std::initializer_list<double> entries) {
  const Eigen::Index n = static_cast<Eigen::Index>(entries.size());
  Matrix m = Matrix::Zero(n, n);
  Eigen::Index i = 0;
  for (double d : entries) m(i, i) = d, ++i;
  return m;
}

inline Vector vec(std::initializer_list<Complex> entries) {
  Vector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Complex& z : entries) v(i++) = z;
  return v;
}

/// Frobenius distance normalized by max(1, scale of the operands).
inline double rel_err(const Matrix& x, const Matrix& y) {
  return (x - y).norm() / std::max({1.0, x.norm(), y.norm()});
}

/// Random unitary via QR of a Gaussian matrix.
inline Matrix random_unitary(Eigen::Index n, Rng& rng) {
  Matrix g = rng.cgaussian(n, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return q;
}

/// Random Hermitian PSD matrix with `rank` eigenvalues in [lo, hi].
inline Matrix random_psd(Eigen::Index n, Eigen::Index rank, Rng& rng, double lo = 0.5,
                         double hi = 2.0) {
  Matrix q = random_unitary(n, rng);
  Matrix d = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < rank; ++i) d(i, i) = rng.uniform(lo, hi);
  Matrix h = q * d * q.adjoint();
  return Matrix((h + h.adjoint()) / 2.0);
}

/// Space with condition number bounded by hi/lo; keeps equality-type
/// identities near machine precision so the module-contract tolerances
/// (1e-9, 1e-10) are meaningful rather than conditioning-limited.
inline SpacePtr tame_space(Eigen::Index n, Eigen::Index rank, Rng& rng, double lo = 0.5,
                           double hi = 2.0) {
  return SemiSpace::make(random_psd(n, rank, rng, lo, hi));
}

/// The running 2x2 instance: A = diag(1, 2), T = [[1, 2], [0, 1]], whose
/// reduced adjoint, optimal pair and radii are all known in closed form.
struct Fixture21 {
  SpacePtr space = SemiSpace::make(diag({1.0, 2.0}));
  Matrix t = mat({{1.0, 2.0}, {0.0, 1.0}});
  AOperator op() const { return AOperator(space, t); }
};

inline std::string fixture_path(const std::string& name) {
  return std::string(SHOPS_FIXTURE_DIR) + "/" + name;
}

}  // namespace shops::test
