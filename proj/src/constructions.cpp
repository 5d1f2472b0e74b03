#include "shops/constructions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "shops/classify.hpp"

namespace shops {

namespace {

void require_same_space(const AOperator& x, const AOperator& y, const char* label) {
  if (x.space_ptr() == y.space_ptr()) return;
  if (x.dim() == y.dim() && (x.space().a() - y.space().a()).norm() == 0.0) return;
  fail(Errc::dimension_mismatch, std::string(label) + " operators live on different spaces");
}

/// Hermitized A-form of an operator, validated A-positive and nonvanishing
/// when `require_nonzero`.
Matrix positive_form(const AOperator& op, const char* label, bool require_nonzero) {
  const linalg::PsdVerdict verdict = is_a_positive(op.space(), op.matrix());
  if (!verdict.is_psd)
    throw Error(Errc::invalid_input, std::string(label) + " is not A-positive")
        .with_witness(verdict.witness)
        .with_residual(verdict.min_eigenvalue);
  const Matrix form = linalg::hermitize(op.space().a() * op.matrix());
  if (require_nonzero) {
    const double scale =
        linalg::spectral_norm(op.space().a()) * linalg::spectral_norm(op.matrix());
    if (linalg::spectral_norm(form) <= 1e-12 * std::max(1.0, scale))
      fail(Errc::invalid_input, std::string(label) + " vanishes as an A-form");
  }
  return form;
}

}  // namespace

AOperator affine(const AOperator& t, Complex scale, Complex shift) {
  const Eigen::Index n = t.dim();
  return AOperator(t.space_ptr(), scale * t.matrix() + shift * Matrix::Identity(n, n));
}

TensorSpace make_tensor_space(const SpacePtr& left, const SpacePtr& right) {
  TensorSpace ts;
  ts.left = left;
  ts.right = right;
  ts.product = SemiSpace::make(linalg::kron(left->a(), right->a()));
  return ts;
}

AOperator tensor(const AOperator& t, const AOperator& s) {
  return tensor(t, s, make_tensor_space(t.space_ptr(), s.space_ptr()));
}

AOperator tensor(const AOperator& t, const AOperator& s, const TensorSpace& ts) {
  if (ts.product->dim() != t.dim() * s.dim())
    fail(Errc::dimension_mismatch, "product space does not match the factor dimensions");
  return AOperator(ts.product, linalg::kron(t.matrix(), s.matrix()));
}

FactorInterval tensor_factor_interval(const AOperator& t1, const AOperator& t2,
                                      const AOperator& s1, const AOperator& s2) {
  require_same_space(t1, t2, "left");
  require_same_space(s1, s2, "right");

  const Matrix g_t1 = positive_form(t1, "T1", true);
  const Matrix g_t2 = positive_form(t2, "T2", false);
  const Matrix g_s1 = positive_form(s1, "S1", true);
  const Matrix g_s2 = positive_form(s2, "S2", false);

  FactorInterval interval;
  interval.d_min = smallest_dominating_scale(g_t1, g_t2);
  const double c_right = smallest_dominating_scale(g_s1, g_s2);
  if (c_right == 0.0) {
    interval.d_max = std::numeric_limits<double>::infinity();
  } else if (std::isinf(c_right)) {
    interval.d_max = 0.0;
  } else {
    interval.d_max = 1.0 / c_right;
  }
  // Feasibility must agree with the tolerance-certified Kronecker order, so
  // point intervals (d_min = d_max up to roundoff) count as feasible.
  const double tol =
      linalg::kPsdTol * std::max({1.0, interval.d_min, std::isinf(interval.d_max) ? 0.0 : interval.d_max});
  interval.feasible = std::isfinite(interval.d_min) && interval.d_min <= interval.d_max + tol;
  return interval;
}

}  // namespace shops
