#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shops/space.hpp"

namespace shops {

/// Shared tolerance for classification flags and pair checks.
inline constexpr double kClassifyTol = 1e-9;

/// One named structural property: holds iff margin >= -kClassifyTol, where
/// margin is a signed slack (negated relative defect for equality-type
/// properties, normalized minimum eigenvalue for order-type ones). The
/// witness is a direction realizing the worst slack.
struct Flag {
  bool holds = false;
  double margin = 0.0;
  std::optional<Vector> witness;
};

/// Structural classification relative to the semi-inner product.
struct ClassificationReport {
  Flag a_selfadjoint;
  Flag a_normal;
  Flag a_hyponormal;
  Flag a_isometry;
  Flag a_unitary;
};

/// Result of checking a specific (alpha, beta) pair against
/// alpha ||Tu||_A <= ||T# u||_A <= beta ||Tu||_A for all u.
struct AlphaBetaCheck {
  bool holds = false;
  /// Normalized minimum-eigenvalue slack of M - alpha^2 N (>= -tol iff the
  /// lower inequality holds), with M, N the A-forms of TT# and T#T.
  double lower_slack = 0.0;
  /// Slack of beta^2 N - M; +inf when beta is infinite.
  double upper_slack = 0.0;
  /// Direction violating the failing side, when one exists.
  std::optional<Vector> witness;
  /// Advisory text, e.g. when the pair violates alpha <= 1 <= beta.
  std::string note;
};

/// Optimal constants: the largest alpha and smallest beta making the pair
/// inequality hold, with extremal witnesses. beta_opt is +infinity exactly
/// when some u has ||Tu||_A = 0 but ||T# u||_A > 0.
struct AlphaBetaBounds {
  double alpha_opt = 0.0;
  double beta_opt = 0.0;
  std::optional<Vector> alpha_witness;
  std::optional<Vector> beta_witness;
  /// "pencil" for the reduced-eigenproblem path, "bisection" for the PSD
  /// bisection fallback used when beta_opt is infinite.
  std::string method;
  /// True when ||T .||_A vanishes identically; then (0, inf) is reported
  /// and every pair with alpha = 0 holds vacuously.
  bool zero_seminorm = false;
};

/// Verdict for S >=_A 0, i.e. A S Hermitian and PSD. Non-Hermitian A S
/// yields is_psd = false (with the Hermitized minimum eigenvalue reported)
/// rather than an error.
linalg::PsdVerdict is_a_positive(const SemiSpace& s, const Matrix& m,
                                 double tol = kClassifyTol);

/// Verdict for y >=_A x, i.e. A (y - x) positive.
linalg::PsdVerdict a_leq(const SemiSpace& s, const Matrix& x, const Matrix& y,
                         double tol = kClassifyTol);

ClassificationReport classify(const AOperator& t, double tol = kClassifyTol);

/// The two-condition characterization of A-normality (range condition
/// R(TT#) inside R(A), plus ||T#T u||_A = ||TT# u||_A as a matrix
/// identity); agrees with the commutator definition.
Flag a_normal_two_condition(const AOperator& t, double tol = kClassifyTol);

/// Checks the pair via PSD-ness of M - alpha^2 N and beta^2 N - M. beta may
/// be +infinity. alpha, beta must be >= 0; pairs straddling the
/// normalization alpha <= 1 <= beta are noted, not rejected.
AlphaBetaCheck is_alpha_beta_a_normal(const AOperator& t, double alpha, double beta,
                                      double tol = kClassifyTol);

AlphaBetaBounds optimal_alpha_beta(const AOperator& t);

/// Smallest c >= 0 with c y - x PSD, for Hermitian PSD forms x, y;
/// +infinity when no scaling works, 0 when x vanishes as a form. This is
/// the Rayleigh-quotient supremum behind the rebalancing interval.
double smallest_dominating_scale(const Matrix& x, const Matrix& y);

/// True iff for every lambda in the list both quadratic forms
///   lambda^2 TT# + 2 alpha^2 lambda T#T + TT#  and
///   lambda^2 T#T + 2 lambda TT# + beta^4 T#T
/// are A-positive. Equivalent to the pair inequality when the list covers
/// the critical region.
bool quadratic_form_check(const AOperator& t, double alpha, double beta,
                          const std::vector<double>& lambdas);

/// 81 uniform points on [-L, L], L = max(10, beta^2 + 1).
std::vector<double> default_lambda_grid(double beta);

}  // namespace shops
