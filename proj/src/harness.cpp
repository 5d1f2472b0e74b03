#include "shops/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "shops/classify.hpp"
#include "shops/linalg.hpp"

namespace shops {

AOperator Instance::op(const std::string& name, bool on_second_space) const {
  auto it = ops.find(name);
  if (it == ops.end()) {
    fail(Errc::missing_component, "instance is missing operator \"" + name + "\"");
  }
  const SpacePtr& s = on_second_space ? space_b : space;
  if (!s) {
    fail(Errc::missing_component, on_second_space ? "instance has no second space"
                                                  : "instance has no space");
  }
  return AOperator(s, it->second);
}

double Instance::param_or(const std::string& name, double fallback) const {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

SpacePtr gen_space(int dim, int rank, std::uint64_t seed) {
  if (dim < 1) fail(Errc::invalid_input, "space dimension must be at least 1");
  if (rank < 1 || rank > dim) {
    fail(Errc::rank_out_of_range, "rank " + std::to_string(rank) + " outside [1, " +
                                      std::to_string(dim) + "]");
  }
  Rng rng(mix_seed(seed, 0x73706163ULL));
  Matrix g = rng.cgaussian(dim, dim);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  RealVector d = RealVector::Zero(dim);
  for (int i = 0; i < rank; ++i) d(i) = std::pow(10.0, rng.uniform(-2.0, 2.0));
  Matrix a = q * d.asDiagonal() * q.adjoint();
  return SemiSpace::make(linalg::hermitize(a));
}

AOperator gen_operator(const SpacePtr& s, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0x6f706572ULL));
  return gen::admissible(s, rng);
}

namespace {

// Columns form an orthonormal basis of range(A).
Matrix range_frame(const SemiSpace& s) {
  linalg::HermEig e = linalg::eigh(s.a());
  return e.vectors.rightCols(s.rank());
}

// Haar-distributed unitary via QR with the phase normalization that makes
// the factorization unique.
Matrix haar_unitary(Eigen::Index m, Rng& rng) {
  Matrix g = rng.cgaussian(m, m);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

// Operator whose compression equals `core`; core must be supported on
// range(A) (P core P = core).
Matrix lift_core(const SemiSpace& s, const Matrix& core) {
  return s.pinv_sqrt_a() * core * s.sqrt_a();
}

// Random splitting of r into one or two nonempty diagonal blocks.
Eigen::Index split_point(Eigen::Index r, Rng& rng) {
  if (r < 2) return r;
  return 1 + static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(r - 1)));
}

}  // namespace

namespace gen {

AOperator admissible(const SpacePtr& s, Rng& rng) {
  const Eigen::Index n = s->dim();
  Matrix k = rng.cgaussian(n, n);
  Matrix t = s->pinv_a() * (k * s->a());
  if (rng.coin() && s->rank() < n) {
    Matrix y = rng.cgaussian(n, n);
    t += (Matrix::Identity(n, n) - s->range_projector()) * y;
  }
  return AOperator(s, t);
}

AOperator reduced(const SpacePtr& s, Rng& rng) {
  const Eigen::Index n = s->dim();
  Matrix k = rng.cgaussian(n, n);
  return AOperator(s, s->pinv_a() * (k * s->a()));
}

AOperator a_selfadjoint(const SpacePtr& s, Rng& rng) {
  const Eigen::Index n = s->dim();
  const Matrix& p = s->range_projector();
  Matrix core = p * linalg::hermitize(rng.cgaussian(n, n)) * p;
  return AOperator(s, lift_core(*s, core));
}

AOperator a_normal(const SpacePtr& s, Rng& rng) {
  Matrix v = range_frame(*s);
  const Eigen::Index r = v.cols();
  Matrix w = haar_unitary(r, rng);
  Vector d = rng.cgaussian(r) * std::pow(10.0, rng.uniform(-1.0, 1.0));
  Matrix core = v * (w * d.asDiagonal() * w.adjoint()) * v.adjoint();
  return AOperator(s, lift_core(*s, core));
}

AOperator a_unitary(const SpacePtr& s, Rng& rng) {
  Matrix v = range_frame(*s);
  Matrix w = haar_unitary(v.cols(), rng);
  return AOperator(s, lift_core(*s, v * w * v.adjoint()));
}

AOperator a_isometry(const SpacePtr& s, Rng& rng) {
  const Eigen::Index n = s->dim();
  Matrix t = a_unitary(s, rng).matrix();
  if (rng.coin() && s->rank() < n) {
    Matrix y = rng.cgaussian(n, n);
    t += (Matrix::Identity(n, n) - s->range_projector()) * y;
  }
  return AOperator(s, t);
}

AOperator a_positive(const SpacePtr& s, Rng& rng) {
  const Eigen::Index n = s->dim();
  const Matrix& p = s->range_projector();
  Matrix g = rng.cgaussian(n, n);
  Matrix core = p * (g * g.adjoint()) * p;
  core *= std::pow(10.0, rng.uniform(-1.0, 1.0)) / static_cast<double>(n);
  return AOperator(s, lift_core(*s, core));
}

AOperator herm_nonnegative(const SpacePtr& s, Rng& rng) {
  AOperator t0 = admissible(s, rng);
  Matrix h = linalg::hermitize(s->a() * t0.matrix());
  const double c = 1.05 * linalg::spectral_norm(h) / s->min_positive_eigenvalue();
  const Eigen::Index n = s->dim();
  return AOperator(s, t0.matrix() + c * Matrix::Identity(n, n));
}

std::pair<AOperator, AOperator> sharp_commuting_pair(const SpacePtr& s, Rng& rng,
                                                     bool selfadjoint_s) {
  const bool block_family = selfadjoint_s || rng.coin();
  if (block_family) {
    Matrix v = range_frame(*s);
    const Eigen::Index r = v.cols();
    const Eigen::Index r1 = split_point(r, rng);
    Matrix tc = Matrix::Zero(r, r);
    Matrix sc = Matrix::Zero(r, r);
    tc.topLeftCorner(r1, r1) = rng.cgaussian(r1, r1);
    sc.topLeftCorner(r1, r1) = rng.uniform(-2.0, 2.0) * Matrix::Identity(r1, r1);
    if (r1 < r) {
      const Eigen::Index r2 = r - r1;
      tc.bottomRightCorner(r2, r2) = rng.cgaussian(r2, r2);
      sc.bottomRightCorner(r2, r2) = rng.uniform(-2.0, 2.0) * Matrix::Identity(r2, r2);
    }
    AOperator t(s, lift_core(*s, v * tc * v.adjoint()));
    AOperator sm(s, lift_core(*s, v * sc * v.adjoint()));
    return {t, sm};
  }
  AOperator t = reduced(s, rng);
  Matrix sh = t.sharp();
  Matrix smat = rng.cnormal() * s->range_projector() + rng.cnormal() * sh +
                rng.cnormal() * (sh * sh);
  return {t, AOperator(s, smat)};
}

std::pair<AOperator, AOperator> commuting_pair(const SpacePtr& s, Rng& rng) {
  Matrix v = range_frame(*s);
  const Eigen::Index r = v.cols();
  const Eigen::Index r1 = split_point(r, rng);
  Matrix tc = Matrix::Zero(r, r);
  Matrix sc = Matrix::Zero(r, r);
  tc.topLeftCorner(r1, r1) = rng.cgaussian(r1, r1);
  sc.topLeftCorner(r1, r1) =
      std::polar(1.0, rng.uniform(0.0, 6.283185307179586)) * Matrix::Identity(r1, r1);
  if (r1 < r) {
    const Eigen::Index r2 = r - r1;
    tc.bottomRightCorner(r2, r2) = rng.cgaussian(r2, r2);
    sc.bottomRightCorner(r2, r2) =
        std::polar(1.0, rng.uniform(0.0, 6.283185307179586)) * Matrix::Identity(r2, r2);
  }
  AOperator t(s, lift_core(*s, v * tc * v.adjoint()));
  AOperator sm(s, lift_core(*s, v * sc * v.adjoint()));
  return {t, sm};
}

}  // namespace gen

std::string normalize_theorem_id(const std::string& id) {
  std::string out;
  out.reserve(id.size());
  for (char ch : id) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  const auto open = out.find('(');
  if (open != std::string::npos && !out.empty() && out.back() == ')') {
    out = out.substr(0, open) + "." + out.substr(open + 1, out.size() - open - 2);
  }
  return out;
}

const RegistryEntry* find_entry(const std::string& id) {
  const std::string key = normalize_theorem_id(id);
  for (const RegistryEntry& e : registry()) {
    if (e.id == key) return &e;
  }
  return nullptr;
}

TheoremVerdict check_theorem(const std::string& id, const Instance& inst) {
  const RegistryEntry* entry = find_entry(id);
  if (entry == nullptr) {
    fail(Errc::unknown_theorem, "unknown theorem id \"" + id + "\"");
  }
  TheoremVerdict v = entry->check(inst);
  v.theorem_id = entry->id;
  return v;
}

SuiteReport run_suite(int trials, int dim_max, std::uint64_t seed) {
  if (trials < 1) fail(Errc::invalid_input, "suite needs at least one trial");
  if (dim_max < 2) fail(Errc::invalid_input, "suite needs dim-max >= 2");

  SuiteReport report;
  report.seed = seed;
  report.trials = trials;
  report.dim_max = dim_max;

  for (const RegistryEntry& entry : registry()) {
    if (entry.kind == EntryKind::question) continue;  // probed via check/search only

    TheoremSuiteResult res;
    res.id = entry.id;
    res.kind = entry.kind;
    res.summary = entry.summary;
    res.requested = trials;

    const int cap = trials * 100;
    double min_margin = std::numeric_limits<double>::infinity();
    bool any_margin = false;
    int attempt = 0;
    while (res.applicable < trials && attempt < cap) {
      const std::uint64_t tseed =
          mix_seed(seed, hash_str(entry.id), static_cast<std::uint64_t>(attempt));
      const int trial_index = attempt;
      ++attempt;

      Instance inst;
      try {
        inst = entry.generate(tseed, trial_index, dim_max);
      } catch (const Error&) {
        continue;
      }
      TheoremVerdict verdict;
      try {
        verdict = entry.check(inst);
      } catch (const Error&) {
        continue;
      }
      verdict.theorem_id = entry.id;

      if (verdict.applicable == Applicability::uncertain) {
        ++res.uncertain;
        continue;
      }
      if (verdict.applicable == Applicability::no) continue;

      ++res.applicable;
      if (!any_margin || verdict.margin < min_margin) {
        min_margin = verdict.margin;
        any_margin = true;
      }
      if (verdict.holds) {
        ++res.holds;
      } else {
        ++res.failures;
        if (res.failing.size() < 3) res.failing.push_back({inst, verdict});
      }
    }
    res.attempts = attempt;
    res.min_margin = any_margin ? min_margin : 0.0;
    res.insufficient = res.applicable < trials;

    if (entry.kind == EntryKind::theorem) {
      if (res.failures > 0) report.pass = false;
      report.results.push_back(std::move(res));
    } else {
      report.discrepancies.push_back(std::move(res));
    }
  }
  return report;
}

SearchReport search_power_conjecture(int trials, int n, const std::vector<int>& dims,
                                     std::uint64_t seed) {
  if (trials < 1) fail(Errc::invalid_input, "search needs at least one trial");
  if (n < 2) fail(Errc::invalid_input, "search power must be at least 2");
  if (dims.empty()) fail(Errc::invalid_input, "search needs a nonempty dimension list");
  for (int d : dims) {
    if (d < 2) fail(Errc::invalid_input, "every search dimension must be at least 2");
  }

  SearchReport report;
  report.trials = trials;
  report.power = n;
  report.dims = dims;
  report.seed = seed;

  const double inf = std::numeric_limits<double>::infinity();
  double e_min = inf;
  double e_max = -inf;
  double e_sum = 0.0;
  int e_count = 0;

  for (int i = 0; i < trials; ++i) {
    const std::uint64_t tseed = mix_seed(seed, hash_str("Q2"), static_cast<std::uint64_t>(i));
    Rng rng(tseed);
    const int dim = dims[static_cast<std::size_t>(rng.below(dims.size()))];
    const int rank = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(dim)));
    SpacePtr sp = gen_space(dim, rank, rng.bits());
    AOperator t = gen::admissible(sp, rng);

    AlphaBetaBounds base = optimal_alpha_beta(t);
    if (base.zero_seminorm) {
      ++report.skipped;
      continue;
    }
    const double alpha = std::min(base.alpha_opt, 1.0);
    const double beta = std::isinf(base.beta_opt) ? base.beta_opt : std::max(base.beta_opt, 1.0);
    const double alpha_n = std::pow(alpha, static_cast<double>(n) * n);
    const double beta_n = std::isinf(beta) ? beta : std::pow(beta, static_cast<double>(n) * n);

    Matrix tn = t.matrix();
    for (int k = 1; k < n; ++k) tn = tn * t.matrix();
    AOperator tpow(sp, tn);

    AlphaBetaCheck chk = is_alpha_beta_a_normal(tpow, alpha_n, beta_n);
    ++report.tested;
    if (!chk.holds) {
      Instance inst;
      inst.space = sp;
      inst.seed = tseed;
      inst.ops.emplace("T", t.matrix());
      inst.params["alpha"] = alpha;
      inst.params["beta"] = beta;
      inst.params["n"] = static_cast<double>(n);
      report.counterexamples.push_back(
          {std::move(inst), alpha, beta, chk.lower_slack, chk.upper_slack});
    }

    AlphaBetaBounds powered = optimal_alpha_beta(tpow);
    double e_t = -inf;
    if (!std::isinf(beta) && beta > 1.0 + 1e-9 && !std::isinf(powered.beta_opt)) {
      e_t = std::max(e_t, std::log(std::max(powered.beta_opt, 1.0)) / std::log(beta));
    }
    if (alpha > 0.0 && alpha < 1.0 - 1e-9 && powered.alpha_opt > 0.0) {
      e_t = std::max(e_t, std::log(std::min(powered.alpha_opt, 1.0)) / std::log(alpha));
    }
    if (e_t > -inf) {
      ++e_count;
      e_sum += e_t;
      e_min = std::min(e_min, e_t);
      e_max = std::max(e_max, e_t);
    }
  }

  report.exponent_count = e_count;
  if (e_count > 0) {
    report.exponent_min = e_min;
    report.exponent_max = e_max;
    report.exponent_mean = e_sum / e_count;
  }
  return report;
}

}  // namespace shops
