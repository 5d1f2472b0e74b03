#include "shops/space.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace shops {

namespace {

constexpr double kAdmissibilityTol = 1e-9;

}  // namespace

SemiSpace::SemiSpace(const Matrix& a) : a_(linalg::hermitize(a)) {
  using linalg::eigh;
  const Eigen::Index n = a_.rows();
  linalg::HermEig eig = eigh(a_);
  const double top = eig.values.size() ? std::max(eig.values.maxCoeff(), 0.0) : 0.0;
  const double cutoff = static_cast<double>(n) * top * linalg::kRankCutoffFactor;

  Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd d_sqrt = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd d_inv = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd d_inv_sqrt = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd d_proj = Eigen::VectorXd::Zero(n);
  min_pos_eval_ = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (eig.values(i) > cutoff) {
      ++rank_;
      d(i) = eig.values(i);
      d_sqrt(i) = std::sqrt(d(i));
      d_inv(i) = 1.0 / d(i);
      d_inv_sqrt(i) = 1.0 / d_sqrt(i);
      d_proj(i) = 1.0;
      if (min_pos_eval_ == 0.0 || d(i) < min_pos_eval_) min_pos_eval_ = d(i);
    }
  }
  const Matrix& v = eig.vectors;
  const auto rebuild = [&](const Eigen::VectorXd& diag) -> Matrix {
    return v * diag.cast<Complex>().asDiagonal() * v.adjoint();
  };
  sqrt_a_ = rebuild(d_sqrt);
  pinv_a_ = rebuild(d_inv);
  pinv_sqrt_a_ = rebuild(d_inv_sqrt);
  proj_ = rebuild(d_proj);
  evals_ = eig.values;
}

std::shared_ptr<const SemiSpace> SemiSpace::make(const Matrix& a) {
  linalg::require_finite(a, "A");
  if (a.rows() != a.cols()) fail(Errc::not_square, "A is not square");
  const double norm = linalg::spectral_norm(a);
  const double asym = linalg::spectral_norm(a - a.adjoint());
  if (asym > 1e-8 * norm)
    throw Error(Errc::not_hermitian, "A is not Hermitian within tolerance").with_residual(asym);
  linalg::HermEig eig = linalg::eigh(a);
  if (eig.values(0) < -1e-9 * std::max(1.0, norm))
    throw Error(Errc::not_psd, "A is not positive semidefinite")
        .with_witness(eig.vectors.col(0))
        .with_residual(eig.values(0));
  return std::shared_ptr<const SemiSpace>(new SemiSpace(a));
}

Complex SemiSpace::inner(const Vector& u, const Vector& v) const {
  if (u.size() != dim() || v.size() != dim())
    fail(Errc::dimension_mismatch, "inner product arguments do not match the space dimension");
  return v.dot(a_ * u);
}

double SemiSpace::seminorm(const Vector& u) const {
  const Complex q = inner(u, u);
  return std::sqrt(std::max(0.0, q.real()));
}

AOperator::AOperator(SpacePtr space, Matrix t) : space_(std::move(space)), t_(std::move(t)) {
  linalg::require_finite(t_, "T");
  if (t_.rows() != t_.cols()) fail(Errc::not_square, "T is not square");
  if (t_.rows() != space_->dim())
    fail(Errc::dimension_mismatch, "T does not match the space dimension");

  const Eigen::Index n = t_.rows();
  const Matrix& a = space_->a();
  const Matrix ip = Matrix::Identity(n, n) - space_->range_projector();

  const Matrix ta = t_.adjoint() * a;
  adjoint_defect_ = linalg::spectral_norm(ip * ta);
  admits_adjoint_ = adjoint_defect_ <= kAdmissibilityTol * std::max(1.0, linalg::spectral_norm(ta));

  const Matrix st = space_->sqrt_a() * t_;
  bounded_defect_ = linalg::spectral_norm(st * ip);
  a_bounded_ = bounded_defect_ <= kAdmissibilityTol * std::max(1.0, linalg::spectral_norm(st));

  gram_ = linalg::hermitize(t_.adjoint() * (a * t_));

  if (admits_adjoint_) {
    sharp_ = space_->pinv_a() * ta;
    sharp_gram_ = linalg::hermitize(a * t_ * space_->pinv_a() * ta);
  }
  if (a_bounded_) {
    compression_ = st * space_->pinv_sqrt_a();
    a_norm_ = linalg::spectral_norm(compression_);
  }
}

const Matrix& AOperator::sharp() const {
  if (!admits_adjoint_)
    throw Error(Errc::no_a_adjoint, "operator does not admit an A-adjoint")
        .with_residual(adjoint_defect_);
  return sharp_;
}

AOperator AOperator::sharp_operator() const { return AOperator(space_, sharp()); }

const Matrix& AOperator::compression() const {
  if (!a_bounded_)
    throw Error(Errc::not_a_bounded, "operator is not A-bounded").with_residual(bounded_defect_);
  return compression_;
}

double AOperator::a_norm() const {
  if (!a_bounded_)
    throw Error(Errc::not_a_bounded, "operator is not A-bounded; the A-norm is infinite")
        .with_residual(bounded_defect_);
  return a_norm_;
}

const Matrix& AOperator::sharp_gram() const {
  if (!admits_adjoint_)
    throw Error(Errc::no_a_adjoint, "operator does not admit an A-adjoint")
        .with_residual(adjoint_defect_);
  return sharp_gram_;
}

}  // namespace shops
