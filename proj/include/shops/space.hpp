#pragma once

#include <memory>
#include <string>

#include "shops/errors.hpp"
#include "shops/linalg.hpp"

namespace shops {

/// C^n equipped with the semi-inner product <u|v> = v^* A u for a Hermitian
/// positive semidefinite A. Construction validates A and precomputes the
/// spectral objects every downstream routine needs (one eigendecomposition,
/// shared by all operators on the space).
class SemiSpace {
 public:
  /// Validates Hermitian-ness (up to a scaled tolerance) and positive
  /// semidefiniteness, then builds the cached decomposition. Throws Error
  /// with Errc::not_hermitian / Errc::not_psd on invalid input.
  static std::shared_ptr<const SemiSpace> make(const Matrix& a);

  Eigen::Index dim() const { return a_.rows(); }
  Eigen::Index rank() const { return rank_; }
  bool is_definite() const { return rank_ == a_.rows(); }

  const Matrix& a() const { return a_; }
  const Matrix& sqrt_a() const { return sqrt_a_; }
  const Matrix& pinv_a() const { return pinv_a_; }
  const Matrix& pinv_sqrt_a() const { return pinv_sqrt_a_; }
  /// Orthogonal projector onto range(A).
  const Matrix& range_projector() const { return proj_; }
  /// Eigenvalues of A in ascending order.
  const RealVector& eigenvalues() const { return evals_; }
  /// Smallest nonzero eigenvalue of A (0 when A = 0).
  double min_positive_eigenvalue() const { return min_pos_eval_; }

  Complex inner(const Vector& u, const Vector& v) const;
  double seminorm(const Vector& u) const;

 private:
  explicit SemiSpace(const Matrix& a);

  Matrix a_;
  Matrix sqrt_a_;
  Matrix pinv_a_;
  Matrix pinv_sqrt_a_;
  Matrix proj_;
  RealVector evals_;
  Eigen::Index rank_ = 0;
  double min_pos_eval_ = 0.0;
};

using SpacePtr = std::shared_ptr<const SemiSpace>;

/// An operator T on a semi-Hilbertian space, with the derived objects
/// computed eagerly at construction: existence of A-adjoints, A-boundedness,
/// the reduced A-adjoint T# = pinv(A) T^* A when it exists, and the
/// compression sqrt(A) T pinv(sqrt(A)) that carries the metric structure of
/// admissible operators onto a plain Hilbert space.
class AOperator {
 public:
  AOperator(SpacePtr space, Matrix t);

  const SemiSpace& space() const { return *space_; }
  SpacePtr space_ptr() const { return space_; }
  const Matrix& matrix() const { return t_; }
  Eigen::Index dim() const { return t_.rows(); }

  /// True iff the Douglas range condition range(T^* A) subset range(A)
  /// holds, i.e. (I - P) T^* A = 0 up to tolerance.
  bool admits_a_adjoint() const { return admits_adjoint_; }
  /// True iff ||Tu||_A <= c ||u||_A for some c, i.e. A T (I - P) = 0.
  bool is_a_bounded() const { return a_bounded_; }

  /// Residual norms behind the two flags, for reporting.
  double adjoint_defect() const { return adjoint_defect_; }
  double bounded_defect() const { return bounded_defect_; }

  /// Reduced A-adjoint pinv(A) T^* A. Throws Errc::no_a_adjoint when the
  /// Douglas condition fails.
  const Matrix& sharp() const;
  /// Distinguished A-adjoint as an operator on the same space.
  AOperator sharp_operator() const;

  /// Compression sqrt(A) T pinv(sqrt(A)). Norm-faithful for A-bounded T;
  /// throws Errc::not_a_bounded otherwise.
  const Matrix& compression() const;

  /// Operator seminorm ||T||_A = sup_{||u||_A = 1} ||Tu||_A. Throws
  /// Errc::not_a_bounded when the supremum is infinite.
  double a_norm() const;

  /// ||Tu||_A^2 = u^* N u with N = T^* A T (Hermitian PSD).
  const Matrix& gram() const { return gram_; }
  /// ||T# u||_A^2 = u^* M u with M = A T pinv(A) T^* A (Hermitian PSD);
  /// requires the adjoint to exist.
  const Matrix& sharp_gram() const;

 private:
  SpacePtr space_;
  Matrix t_;
  Matrix gram_;
  Matrix sharp_;
  Matrix sharp_gram_;
  Matrix compression_;
  double a_norm_ = 0.0;
  double adjoint_defect_ = 0.0;
  double bounded_defect_ = 0.0;
  bool admits_adjoint_ = false;
  bool a_bounded_ = false;
};

}  // namespace shops
