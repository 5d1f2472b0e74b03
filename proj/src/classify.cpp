#include "shops/classify.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>

namespace shops {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Threshold deciding whether a null(N) direction carries a genuinely
/// positive M-form (which makes the upper pencil bound infinite).
constexpr double kNullLeakTol = 1e-10;

/// PSD certification slack used by the pencil paths.
double psd_slack(const Matrix& h) {
  linalg::HermEig eig = linalg::eigh(h);
  return eig.values(0);
}

Flag equality_flag(const Matrix& diff, double scale, double tol) {
  Flag f;
  const double defect = linalg::spectral_norm(diff);
  f.margin = -defect / std::max(1.0, scale);
  f.holds = f.margin >= -tol;
  if (!f.holds && diff.size() > 0) {
    Eigen::JacobiSVD<Matrix> svd(diff, Eigen::ComputeThinV);
    f.witness = svd.matrixV().col(0);
  }
  return f;
}

Flag order_flag(const linalg::PsdVerdict& verdict, double scale, double tol) {
  Flag f;
  f.margin = verdict.min_eigenvalue / std::max(1.0, scale);
  f.holds = f.margin >= -tol;
  if (!f.holds) f.witness = verdict.witness;
  return f;
}

/// Extremes of the quotient u*Mu / u*Nu for Hermitian PSD M, N:
/// lo = largest c with M - cN PSD, hi = smallest c with cN - M PSD
/// (infinite when null(N) leaks into M). Reduced-eigenproblem fast path,
/// certified; bisection fallback per the PSD predicate.
struct PencilExtremes {
  bool n_zero = false;
  double lo = 0.0;
  double hi = 0.0;
  bool hi_infinite = false;
  bool used_bisection = false;
  Vector lo_witness;
  Vector hi_witness;
};

PencilExtremes pencil_extremes(const Matrix& m, const Matrix& n) {
  PencilExtremes out;
  const Eigen::Index dim = n.rows();
  const double m_norm = linalg::spectral_norm(m);
  const double n_norm = linalg::spectral_norm(n);

  linalg::HermEig eign = linalg::eigh(n);
  const double top = std::max(eign.values.maxCoeff(), 0.0);
  const double cutoff = static_cast<double>(dim) * top * linalg::kRankCutoffFactor;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < dim; ++i)
    if (eign.values(i) > cutoff) ++rank;
  if (rank == 0) {
    out.n_zero = true;
    return out;
  }

  const Matrix v_pos = eign.vectors.rightCols(rank);
  Eigen::VectorXd d_pos = eign.values.tail(rank);
  const double lambda_min_pos = d_pos(0);

  if (rank < dim) {
    const Matrix w = eign.vectors.leftCols(dim - rank);
    linalg::HermEig leak = linalg::eigh(w.adjoint() * m * w);
    const double worst = leak.values(leak.values.size() - 1);
    if (worst > kNullLeakTol * std::max(1.0, m_norm)) {
      out.hi_infinite = true;
      out.hi = kInf;
      Vector witness = w * leak.vectors.col(leak.vectors.cols() - 1);
      witness.normalize();
      out.hi_witness = witness;
    }
  }

  const auto lower_ok = [&](double c) {
    return psd_slack(m - c * n) >= -linalg::kPsdTol * std::max(1.0, m_norm + c * n_norm);
  };
  const auto upper_ok = [&](double c) {
    return psd_slack(c * n - m) >= -linalg::kPsdTol * std::max(1.0, m_norm + c * n_norm);
  };

  if (!out.hi_infinite) {
    Eigen::VectorXd scale(rank);
    for (Eigen::Index i = 0; i < rank; ++i) scale(i) = 1.0 / std::sqrt(d_pos(i));
    const Matrix basis = v_pos * scale.cast<Complex>().asDiagonal();
    const Matrix reduced = linalg::hermitize(basis.adjoint() * m * basis);
    linalg::HermEig eigr = linalg::eigh(reduced);
    out.lo = std::max(eigr.values(0), 0.0);
    out.hi = std::max(eigr.values(rank - 1), 0.0);
    out.lo_witness = basis * eigr.vectors.col(0);
    out.hi_witness = basis * eigr.vectors.col(rank - 1);
    // Certify both ends; rare borderline cases fall back to bisection.
    if (!lower_ok(out.lo)) {
      double good = 0.0, bad = out.lo;
      for (int iter = 0; iter < 60; ++iter) {
        const double mid = 0.5 * (good + bad);
        (lower_ok(mid) ? good : bad) = mid;
      }
      out.lo = good;
      out.used_bisection = true;
    }
    if (!upper_ok(out.hi)) {
      double bad = out.hi;
      double good = std::max(2.0 * out.hi, m_norm / lambda_min_pos) + 1.0;
      if (upper_ok(good)) {
        for (int iter = 0; iter < 60; ++iter) {
          const double mid = 0.5 * (bad + good);
          (upper_ok(mid) ? good : bad) = mid;
        }
        out.hi = good;
      } else {
        out.hi = good;
      }
      out.used_bisection = true;
    }
    return out;
  }

  // Upper bound infinite: the largest feasible c for M - cN >= 0 is found by
  // bisection on the certified PSD predicate, bracket [0, ||M|| / min+(N)].
  double top_c = m_norm / lambda_min_pos + 1.0;
  if (lower_ok(top_c)) {
    out.lo = top_c;
  } else {
    double good = 0.0, bad = top_c;
    for (int iter = 0; iter < 60; ++iter) {
      const double mid = 0.5 * (good + bad);
      (lower_ok(mid) ? good : bad) = mid;
    }
    out.lo = good;
  }
  out.used_bisection = true;
  linalg::HermEig slackeig = linalg::eigh(m - out.lo * n);
  out.lo_witness = slackeig.vectors.col(0);
  return out;
}

}  // namespace

linalg::PsdVerdict is_a_positive(const SemiSpace& s, const Matrix& m, double tol) {
  if (m.rows() != s.dim() || m.cols() != s.dim())
    fail(Errc::dimension_mismatch, "operator does not match the space dimension");
  const Matrix am = s.a() * m;
  const double norm = linalg::spectral_norm(am);
  const double asym = linalg::spectral_norm(am - am.adjoint());
  linalg::HermEig eig = linalg::eigh(am);
  linalg::PsdVerdict verdict;
  verdict.min_eigenvalue = eig.values(0);
  verdict.witness = eig.vectors.col(0);
  const bool hermitian = asym <= linalg::kHermSlackFactor * tol * std::max(1.0, norm);
  verdict.is_psd = hermitian && verdict.min_eigenvalue >= -tol * std::max(1.0, norm);
  return verdict;
}

linalg::PsdVerdict a_leq(const SemiSpace& s, const Matrix& x, const Matrix& y, double tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    fail(Errc::dimension_mismatch, "order comparison shapes do not match");
  return is_a_positive(s, y - x, tol);
}

ClassificationReport classify(const AOperator& t, double tol) {
  const Matrix& sharp = t.sharp();
  const SemiSpace& s = t.space();
  const Matrix& a = s.a();
  const Matrix& mat = t.matrix();

  ClassificationReport report;

  report.a_selfadjoint = equality_flag(a * mat - mat.adjoint() * a,
                                       linalg::spectral_norm(a) * linalg::spectral_norm(mat), tol);

  const Matrix ts = sharp * mat;  // T# T
  const Matrix st = mat * sharp;  // T T#
  const double comm_scale = linalg::spectral_norm(ts) + linalg::spectral_norm(st);
  report.a_normal = equality_flag(st - ts, comm_scale, tol);

  report.a_hyponormal = order_flag(a_leq(s, st, ts, tol), comm_scale, tol);

  report.a_isometry = equality_flag(ts - s.range_projector(), linalg::spectral_norm(ts), tol);

  const Flag unitary_other = equality_flag(st - s.range_projector(), linalg::spectral_norm(st), tol);
  report.a_unitary.holds = report.a_isometry.holds && unitary_other.holds;
  report.a_unitary.margin = std::min(report.a_isometry.margin, unitary_other.margin);
  report.a_unitary.witness = report.a_isometry.margin <= unitary_other.margin
                                 ? report.a_isometry.witness
                                 : unitary_other.witness;
  return report;
}

Flag a_normal_two_condition(const AOperator& t, double tol) {
  const Matrix& sharp = t.sharp();
  const SemiSpace& s = t.space();
  const Matrix st = t.matrix() * sharp;  // T T#
  const Matrix ts = sharp * t.matrix();  // T# T
  const Eigen::Index n = t.dim();

  const Matrix ip = Matrix::Identity(n, n) - s.range_projector();
  Flag range_cond = equality_flag(ip * st, linalg::spectral_norm(st), tol);

  const Matrix lhs = ts.adjoint() * s.a() * ts;
  const Matrix rhs = st.adjoint() * s.a() * st;
  Flag norm_cond =
      equality_flag(lhs - rhs, linalg::spectral_norm(lhs) + linalg::spectral_norm(rhs), tol);

  Flag combined;
  combined.holds = range_cond.holds && norm_cond.holds;
  combined.margin = std::min(range_cond.margin, norm_cond.margin);
  combined.witness = range_cond.margin <= norm_cond.margin ? range_cond.witness : norm_cond.witness;
  return combined;
}

AlphaBetaCheck is_alpha_beta_a_normal(const AOperator& t, double alpha, double beta, double tol) {
  if (alpha < 0.0 || beta < 0.0 || std::isnan(alpha) || std::isnan(beta))
    fail(Errc::invalid_input, "alpha and beta must be nonnegative");
  const Matrix& n = t.gram();
  const Matrix& m = t.sharp_gram();
  const double m_norm = linalg::spectral_norm(m);
  const double n_norm = linalg::spectral_norm(n);

  AlphaBetaCheck check;

  linalg::HermEig lower = linalg::eigh(m - (alpha * alpha) * n);
  check.lower_slack = lower.values(0) / std::max(1.0, m_norm + alpha * alpha * n_norm);
  const bool lower_holds = check.lower_slack >= -tol;
  if (!lower_holds) check.witness = lower.vectors.col(0);

  bool upper_holds = true;
  if (std::isinf(beta)) {
    check.upper_slack = kInf;
  } else {
    linalg::HermEig upper = linalg::eigh((beta * beta) * n - m);
    check.upper_slack = upper.values(0) / std::max(1.0, m_norm + beta * beta * n_norm);
    upper_holds = check.upper_slack >= -tol;
    if (!upper_holds && (lower_holds || check.upper_slack < check.lower_slack))
      check.witness = upper.vectors.col(0);
  }

  check.holds = lower_holds && upper_holds;
  if (alpha > 1.0 + 1e-12 || beta < 1.0 - 1e-12)
    check.note = "pair violates the alpha <= 1 <= beta normalization";
  return check;
}

AlphaBetaBounds optimal_alpha_beta(const AOperator& t) {
  const Matrix& n = t.gram();
  const Matrix& m = t.sharp_gram();

  AlphaBetaBounds out;
  const double op_scale =
      linalg::spectral_norm(t.space().a()) * std::pow(linalg::spectral_norm(t.matrix()), 2);
  if (linalg::spectral_norm(n) <= 1e-13 * std::max(1.0, op_scale)) {
    out.alpha_opt = 0.0;
    out.beta_opt = kInf;
    out.method = "pencil";
    out.zero_seminorm = true;
    return out;
  }

  PencilExtremes ext = pencil_extremes(m, n);
  out.alpha_opt = std::sqrt(std::max(ext.lo, 0.0));
  out.beta_opt = ext.hi_infinite ? kInf : std::sqrt(std::max(ext.hi, 0.0));
  out.method = ext.used_bisection ? "bisection" : "pencil";

  const auto unit_a = [&](Vector v) -> std::optional<Vector> {
    if (v.size() == 0) return std::nullopt;
    const double s = t.space().seminorm(v);
    if (s > 0.0) v /= s;
    return v;
  };
  out.alpha_witness = unit_a(ext.lo_witness);
  out.beta_witness = unit_a(ext.hi_witness);
  return out;
}

double smallest_dominating_scale(const Matrix& x, const Matrix& y) {
  PencilExtremes ext = pencil_extremes(x, y);
  if (ext.n_zero) return linalg::spectral_norm(x) <= 1e-12 ? 0.0 : kInf;
  return ext.hi_infinite ? kInf : ext.hi;
}

bool quadratic_form_check(const AOperator& t, double alpha, double beta,
                          const std::vector<double>& lambdas) {
  if (lambdas.empty()) fail(Errc::invalid_input, "lambda grid must be nonempty");
  if (!(alpha >= 0.0) || !(beta >= 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
    fail(Errc::invalid_input, "alpha and beta must be finite and nonnegative");
  const Matrix& n = t.gram();
  const Matrix& m = t.sharp_gram();
  const double m_norm = linalg::spectral_norm(m);
  const double n_norm = linalg::spectral_norm(n);
  const double a2 = alpha * alpha;
  const double b4 = std::pow(beta, 4);
  for (double lambda : lambdas) {
    const Matrix h1 = (1.0 + lambda * lambda) * m + (2.0 * a2 * lambda) * n;
    const double s1 = (1.0 + lambda * lambda) * m_norm + std::abs(2.0 * a2 * lambda) * n_norm;
    if (psd_slack(h1) < -linalg::kPsdTol * std::max(1.0, s1)) return false;
    const Matrix h2 = (lambda * lambda + b4) * n + (2.0 * lambda) * m;
    const double s2 = (lambda * lambda + b4) * n_norm + std::abs(2.0 * lambda) * m_norm;
    if (psd_slack(h2) < -linalg::kPsdTol * std::max(1.0, s2)) return false;
  }
  return true;
}

std::vector<double> default_lambda_grid(double beta) {
  const double reach = std::max(10.0, beta * beta + 1.0);
  std::vector<double> grid;
  grid.reserve(81);
  for (int i = 0; i <= 80; ++i) grid.push_back(-reach + (2.0 * reach / 80.0) * i);
  return grid;
}

}  // namespace shops
