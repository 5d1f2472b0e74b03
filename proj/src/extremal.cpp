#include "shops/extremal.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "shops/rng.hpp"

namespace shops {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// lambda_max of Herm(e^{i theta} c) together with the eigenvector, and the
/// mirrored quantity -lambda_min (which equals the theta + pi value).
struct PhaseSlice {
  double max_value = 0.0;
  double mirror_value = 0.0;
  Vector max_vector;
  Vector mirror_vector;
};

PhaseSlice phase_slice(const Matrix& c, double theta) {
  const Matrix h = linalg::hermitize(std::polar(1.0, theta) * c);
  linalg::HermEig eig = linalg::eigh(h);
  PhaseSlice slice;
  const Eigen::Index last = eig.values.size() - 1;
  slice.max_value = eig.values(last);
  slice.max_vector = eig.vectors.col(last);
  slice.mirror_value = -eig.values(0);
  slice.mirror_vector = eig.vectors.col(0);
  return slice;
}

double phase_value(const Matrix& c, double theta) {
  const PhaseSlice slice = phase_slice(c, theta);
  return std::max(slice.max_value, slice.mirror_value);
}

}  // namespace

RadiusResult a_numerical_radius(const AOperator& t) {
  const Matrix& c = t.compression();
  RadiusResult result;
  result.method_note = "phase sweep over the compression, golden-section refined";

  constexpr int kGrid = 720;
  double best_value = -1.0;
  double best_theta = 0.0;
  for (int i = 0; i < kGrid; ++i) {
    const double theta = kPi * i / kGrid;
    const double value = phase_value(c, theta);
    if (value > best_value) {
      best_value = value;
      best_theta = theta;
    }
  }

  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = best_theta - kPi / kGrid;
  double hi = best_theta + kPi / kGrid;
  double x1 = hi - golden * (hi - lo);
  double x2 = lo + golden * (hi - lo);
  double f1 = phase_value(c, x1);
  double f2 = phase_value(c, x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + golden * (hi - lo);
      f2 = phase_value(c, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - golden * (hi - lo);
      f1 = phase_value(c, x1);
    }
  }
  const double refined_theta = 0.5 * (lo + hi);
  const double refined_value = phase_value(c, refined_theta);

  double theta = best_value >= refined_value ? best_theta : refined_theta;
  const PhaseSlice slice = phase_slice(c, theta);
  result.value = std::max({best_value, refined_value, 0.0});
  Vector x;
  if (slice.max_value >= slice.mirror_value) {
    x = slice.max_vector;
    result.theta_star = theta;
  } else {
    x = slice.mirror_vector;
    result.theta_star = theta + kPi;
  }

  Vector u = t.space().pinv_sqrt_a() * x;
  const double s = t.space().seminorm(u);
  if (s > 1e-12) result.argmax = u / s;
  return result;
}

RadiusResult a_spectral_radius(const AOperator& t) {
  const Matrix& c = t.compression();
  RadiusResult result;
  result.method_note = "eigenvalues of the compression";

  Eigen::ComplexEigenSolver<Matrix> solver(c, true);
  if (solver.info() != Eigen::Success)
    fail(Errc::invalid_input, "spectral radius: eigendecomposition did not converge");
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < solver.eigenvalues().size(); ++i)
    if (std::abs(solver.eigenvalues()(i)) > std::abs(solver.eigenvalues()(best))) best = i;
  result.value = std::abs(solver.eigenvalues()(best));

  Vector u = t.space().pinv_sqrt_a() * solver.eigenvectors().col(best);
  const double s = t.space().seminorm(u);
  if (s > 1e-12) result.argmax = u / s;
  return result;
}

MuEstimate mu_bounds(const AOperator& t, int samples, int refine, std::uint64_t seed) {
  if (samples < 1) fail(Errc::invalid_input, "mu_bounds needs at least one sample");
  if (refine < 0) fail(Errc::invalid_input, "refine count must be nonnegative");
  const SemiSpace& s = t.space();
  const Eigen::Index dim = t.dim();
  const Matrix& n = t.gram();
  const Matrix w = s.a() * t.matrix();

  const double op_scale =
      linalg::spectral_norm(s.a()) * std::pow(linalg::spectral_norm(t.matrix()), 2);
  if (linalg::spectral_norm(n) <= 1e-13 * std::max(1.0, op_scale))
    fail(Errc::a_null_operator, "T maps the whole space into the A-null space");

  MuEstimate est;
  est.mu1 = 2.0;
  est.mu2 = -2.0;

  // Quotient Re<Tu|u>_A / ||Tu||_A at a unit-A-seminorm u; infeasible (and
  // ignored) when ||Tu||_A is numerically zero.
  const auto evaluate = [&](const Vector& u, double& q) -> bool {
    const double den = std::sqrt(std::max(0.0, u.dot(n * u).real()));
    if (den <= 1e-10) return false;
    q = u.dot(w * u).real() / den;
    return true;
  };
  const auto record = [&](const Vector& u, double q) {
    if (q < est.mu1) {
      est.mu1 = q;
      est.arginf = u;
    }
    if (q > est.mu2) {
      est.mu2 = q;
      est.argsup = u;
    }
  };
  const auto normalized = [&](Vector u) -> std::optional<Vector> {
    const double sn = s.seminorm(u);
    if (sn <= 1e-12) return std::nullopt;
    return u / sn;
  };

  // Deterministic anchor: the top eigenvector of the T-side form, feasible
  // whenever the operator is not A-null.
  {
    linalg::HermEig eig = linalg::eigh(n);
    if (auto u = normalized(eig.vectors.col(dim - 1))) {
      double q = 0.0;
      if (evaluate(*u, q)) record(*u, q);
    }
  }

  for (int i = 0; i < samples; ++i) {
    Rng rng(mix_seed(seed, 0x6d75, static_cast<std::uint64_t>(i)));
    std::optional<Vector> start;
    for (int tries = 0; tries < 8 && !start; ++tries) start = normalized(rng.cgaussian(dim));
    if (!start) continue;
    double q0 = 0.0;
    const bool feasible = evaluate(*start, q0);
    if (feasible) {
      record(*start, q0);
      ++est.samples_used;
    }

    // Two independent step-halving climbs from the same start: one driving
    // the quotient down, one up. Every feasible evaluation feeds the
    // running extremes, so more samples can only widen the bracket.
    for (int direction = 0; direction < 2; ++direction) {
      Vector u = *start;
      double best = feasible ? q0 : (direction == 0 ? 2.0 : -2.0);
      bool have = feasible;
      double step = 0.5;
      for (int k = 0; k < refine; ++k) {
        const auto candidate = normalized(u + step * rng.cgaussian(dim));
        if (!candidate) {
          step *= 0.5;
          continue;
        }
        double q = 0.0;
        if (!evaluate(*candidate, q)) {
          step *= 0.5;
          continue;
        }
        record(*candidate, q);
        const bool improved = !have || (direction == 0 ? q < best : q > best);
        if (improved) {
          best = q;
          u = *candidate;
          have = true;
        } else {
          step *= 0.5;
        }
      }
    }
  }

  if (est.mu1 > 1.5)
    fail(Errc::a_null_operator, "no feasible direction with ||Tu||_A > 0 was found");
  est.mu1 = std::clamp(est.mu1, -1.0, 1.0);
  est.mu2 = std::clamp(est.mu2, -1.0, 1.0);
  est.certified = false;
  return est;
}

}  // namespace shops
