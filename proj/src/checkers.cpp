#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shops/classify.hpp"
#include "shops/constructions.hpp"
#include "shops/extremal.hpp"
#include "shops/harness.hpp"
#include "shops/linalg.hpp"

namespace shops {
namespace {

// Suite-wide failure threshold on normalized margins.
constexpr double kCheckTol = 1e-8;

std::string num(double x) {
  std::ostringstream o;
  o.precision(6);
  o << x;
  return o.str();
}

std::string cnum(Complex z) {
  std::ostringstream o;
  o.precision(6);
  o << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return o.str();
}

Matrix mat_pow(const Matrix& m, int k) {
  Matrix out = m;
  for (int i = 1; i < k; ++i) out = out * m;
  return out;
}

double rel_residual(const Matrix& x, const Matrix& y) {
  return (x - y).norm() / std::max({1.0, x.norm(), y.norm()});
}

// Adjoint identities are evaluated through pinv(A), whose roundoff scales
// with the metric's condition number; residuals of such identities are
// measured against that backward-error scale.
double cond_scale(const SemiSpace& sp) {
  return std::max(1.0, linalg::spectral_norm(sp.pinv_a()) * linalg::spectral_norm(sp.a()));
}

double herm_defect(const Matrix& m) {
  return (m - m.adjoint()).norm() / (2.0 * std::max(1.0, m.norm()));
}

struct FormCheck {
  bool holds = false;
  double margin = 0.0;
  Vector witness;
};

// Normalized slack of the A-form of x: margin >= -kCheckTol iff x >=_A 0,
// with non-Hermitian A x penalized through the margin.
FormCheck form_nonneg(const SemiSpace& sp, const Matrix& x) {
  Matrix ax = sp.a() * x;
  Matrix herm = linalg::hermitize(ax);
  const double scale = std::max(1.0, linalg::spectral_norm(herm));
  const double asym = 0.5 * linalg::spectral_norm(ax - ax.adjoint());
  linalg::HermEig e = linalg::eigh(herm);
  FormCheck out;
  out.margin = (e.values(0) - asym) / scale;
  out.holds = out.margin >= -kCheckTol;
  out.witness = e.vectors.col(0);
  return out;
}

double min_slack(const AlphaBetaCheck& c) {
  double m = c.lower_slack;
  if (std::isfinite(c.upper_slack)) m = std::min(m, c.upper_slack);
  return m;
}

TheoremVerdict not_applicable(std::string why) {
  TheoremVerdict v;
  v.applicable = Applicability::no;
  v.holds = true;
  v.notes = std::move(why);
  return v;
}

TheoremVerdict uncertain(std::string why) {
  TheoremVerdict v;
  v.applicable = Applicability::uncertain;
  v.holds = true;
  v.notes = std::move(why);
  return v;
}

std::optional<std::string> gate_admissible(const AOperator& t, const char* name) {
  if (!t.admits_a_adjoint()) {
    return std::string(name) + " admits no A-adjoint (defect " + num(t.adjoint_defect()) + ")";
  }
  if (!t.is_a_bounded()) {
    return std::string(name) + " is not A-bounded (defect " + num(t.bounded_defect()) + ")";
  }
  return std::nullopt;
}

// Instance pair resolution: explicit parameters win; otherwise the optimal
// pair clamped into alpha <= 1 <= beta.
struct PairCtx {
  double alpha = 0.0;
  double beta = 0.0;
  AlphaBetaBounds bounds;
  bool from_params = false;
};

PairCtx resolve_pair(const Instance& inst, const AOperator& t, const char* alpha_key = "alpha",
                     const char* beta_key = "beta") {
  PairCtx ctx;
  ctx.bounds = optimal_alpha_beta(t);
  const double def_alpha = std::min(ctx.bounds.alpha_opt, 1.0);
  const double def_beta =
      std::isinf(ctx.bounds.beta_opt) ? ctx.bounds.beta_opt : std::max(ctx.bounds.beta_opt, 1.0);
  ctx.from_params = inst.has_param(alpha_key) || inst.has_param(beta_key);
  ctx.alpha = inst.param_or(alpha_key, def_alpha);
  ctx.beta = inst.param_or(beta_key, def_beta);
  return ctx;
}

SpacePtr draw_space(Rng& rng, int dim_max, int dim_cap = 0) {
  int hi = dim_max;
  if (dim_cap > 0 && dim_cap < hi) hi = dim_cap;
  if (hi < 2) hi = 2;
  const int dim = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - 1)));
  const int rank = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(dim)));
  return gen_space(dim, rank, rng.bits());
}

// Operator with a nondegenerate optimal pair: finite beta and, when asked,
// alpha bounded away from zero.
AOperator draw_pair_ready(const SpacePtr& sp, Rng& rng, double alpha_floor = 0.0) {
  for (int k = 0; k < 8; ++k) {
    AOperator t = gen::admissible(sp, rng);
    AlphaBetaBounds b = optimal_alpha_beta(t);
    if (!b.zero_seminorm && std::isfinite(b.beta_opt) && b.alpha_opt >= alpha_floor) return t;
  }
  return gen::reduced(sp, rng);
}

Instance start(std::uint64_t seed) {
  Instance inst;
  inst.seed = seed;
  return inst;
}

// ---------------------------------------------------------------------------
// Adjoint algebra
// ---------------------------------------------------------------------------

RegistryEntry entry_p11() {
  RegistryEntry e;
  e.id = "P1.1";
  e.kind = EntryKind::theorem;
  e.summary =
      "reduced-adjoint algebra: compression of the double adjoint, product rule, "
      "Gram selfadjointness, seminorm identities";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    AOperator t = gen::admissible(inst.space, rng);
    AOperator s = gen::admissible(inst.space, rng);
    const Eigen::Index n = inst.space->dim();
    Matrix z = rng.cgaussian(n, n);
    Matrix alt = t.sharp() + (Matrix::Identity(n, n) - inst.space->range_projector()) * z;
    inst.ops.emplace("T", t.matrix());
    inst.ops.emplace("S", s.matrix());
    inst.ops.emplace("V", alt);
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator s = inst.op("S");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    if (auto g = gate_admissible(s, "S")) return not_applicable(*g);
    const SemiSpace& sp = t.space();
    const Matrix& p = sp.range_projector();
    const Matrix& tm = t.matrix();
    Matrix tsh = t.sharp();

    double worst = 0.0;
    std::string worst_part = "none";
    auto upd = [&](double r, const char* what) {
      if (r > worst) {
        worst = r;
        worst_part = what;
      }
    };

    const double kappa = cond_scale(sp);
    AOperator sharp_op(inst.space, tsh);
    Matrix dsh = sharp_op.sharp();
    upd(rel_residual(dsh, p * tm * p) / kappa, "double adjoint vs compression");
    upd(rel_residual(AOperator(inst.space, dsh).sharp(), tsh) / kappa, "triple adjoint");
    upd(rel_residual(AOperator(inst.space, tm * s.matrix()).sharp(), s.sharp() * tsh) / kappa,
        "product rule");
    upd(herm_defect(sp.a() * (tsh * tm)), "Gram form of T#T");
    upd(herm_defect(sp.a() * (tm * tsh)), "Gram form of TT#");

    const double nt = t.a_norm();
    const double scale = std::max(1.0, nt);
    upd(std::abs(nt - sharp_op.a_norm()) / scale, "norm of the adjoint");
    upd(std::abs(nt - std::sqrt(AOperator(inst.space, tsh * tm).a_norm())) / scale,
        "norm via T#T");
    upd(std::abs(nt - std::sqrt(AOperator(inst.space, tm * tsh).a_norm())) / scale,
        "norm via TT#");
    if (inst.has_op("V")) {
      AOperator alt = inst.op("V");
      if (rel_residual(sp.a() * alt.matrix(), tm.adjoint() * sp.a()) > 1e-6) {
        return not_applicable("V is not an A-adjoint of T");
      }
      upd(std::abs(alt.a_norm() - sharp_op.a_norm()) / scale, "norm of an alternative adjoint");
    }

    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.margin = -worst;
    v.holds = worst <= kCheckTol;
    v.notes = "largest relative defect " + num(worst) + " (" + worst_part + ")";
    return v;
  };
  return e;
}

RegistryEntry entry_p111() {
  RegistryEntry e;
  e.id = "P1.1.1";
  e.kind = EntryKind::theorem;
  e.summary = "double reduced adjoint compresses: T## = PTP and T### = T#";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", gen::admissible(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    const Matrix& p = t.space().range_projector();
    const double kappa = cond_scale(t.space());
    Matrix tsh = t.sharp();
    Matrix dsh = AOperator(inst.space, tsh).sharp();
    double worst = rel_residual(dsh, p * t.matrix() * p) / kappa;
    worst = std::max(worst, rel_residual(AOperator(inst.space, dsh).sharp(), tsh) / kappa);
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.margin = -worst;
    v.holds = worst <= kCheckTol;
    v.notes = "relative defect " + num(worst) + " (backward-error scaled)";
    return v;
  };
  return e;
}

RegistryEntry entry_p112() {
  RegistryEntry e;
  e.id = "P1.1.2";
  e.kind = EntryKind::theorem;
  e.summary = "adjoint of a product reverses: (TS)# = S# T#";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", gen::admissible(inst.space, rng).matrix());
    inst.ops.emplace("S", gen::admissible(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator s = inst.op("S");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    if (auto g = gate_admissible(s, "S")) return not_applicable(*g);
    AOperator prod(inst.space, t.matrix() * s.matrix());
    if (!prod.admits_a_adjoint()) return not_applicable("TS admits no A-adjoint");
    const double worst =
        rel_residual(prod.sharp(), s.sharp() * t.sharp()) / cond_scale(t.space());
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.margin = -worst;
    v.holds = worst <= kCheckTol;
    v.notes = "relative defect " + num(worst) + " (backward-error scaled)";
    return v;
  };
  return e;
}

RegistryEntry entry_p113() {
  RegistryEntry e;
  e.id = "P1.1.3";
  e.kind = EntryKind::theorem;
  e.summary = "T#T and TT# are A-selfadjoint";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", gen::admissible(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    const SemiSpace& sp = t.space();
    Matrix tsh = t.sharp();
    const double worst = std::max(herm_defect(sp.a() * (tsh * t.matrix())),
                                  herm_defect(sp.a() * (t.matrix() * tsh)));
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.margin = -worst;
    v.holds = worst <= kCheckTol;
    v.notes = "largest Hermitian defect " + num(worst);
    return v;
  };
  return e;
}

RegistryEntry entry_p114() {
  RegistryEntry e;
  e.id = "P1.1.4";
  e.kind = EntryKind::theorem;
  e.summary = "seminorm identities: ||T||_A = ||T#||_A = ||T#T||_A^{1/2} = ||TT#||_A^{1/2}";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", gen::admissible(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    Matrix tsh = t.sharp();
    const double nt = t.a_norm();
    const double scale = std::max(1.0, nt);
    const double a = AOperator(inst.space, tsh).a_norm();
    const double b = std::sqrt(AOperator(inst.space, tsh * t.matrix()).a_norm());
    const double c = std::sqrt(AOperator(inst.space, t.matrix() * tsh).a_norm());
    const double worst =
        std::max({std::abs(nt - a), std::abs(nt - b), std::abs(nt - c)}) / scale;
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.margin = -worst;
    v.holds = worst <= kCheckTol;
    v.notes = "values " + num(nt) + ", " + num(a) + ", " + num(b) + ", " + num(c);
    return v;
  };
  return e;
}

RegistryEntry entry_p115() {
  RegistryEntry e;
  e.id = "P1.1.5";
  e.kind = EntryKind::theorem;
  e.summary = "every A-adjoint S of T has ||S||_A = ||T#||_A";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    AOperator t = gen::admissible(inst.space, rng);
    const Eigen::Index n = inst.space->dim();
    Matrix z = rng.cgaussian(n, n);
    Matrix alt = t.sharp() + (Matrix::Identity(n, n) - inst.space->range_projector()) * z;
    inst.ops.emplace("T", t.matrix());
    inst.ops.emplace("S", alt);
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator s = inst.op("S");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    const SemiSpace& sp = t.space();
    if (rel_residual(sp.a() * s.matrix(), t.matrix().adjoint() * sp.a()) > 1e-6) {
      return not_applicable("S is not an A-adjoint of T");
    }
    if (!s.is_a_bounded()) return not_applicable("S is not A-bounded");
    const double nsh = AOperator(inst.space, t.sharp()).a_norm();
    const double worst = std::abs(s.a_norm() - nsh) / std::max(1.0, nsh);
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.margin = -worst;
    v.holds = worst <= kCheckTol;
    v.notes = "||S||_A = " + num(s.a_norm()) + ", ||T#||_A = " + num(nsh);
    return v;
  };
  return e;
}

RegistryEntry entry_p116() {
  RegistryEntry e;
  e.id = "P1.1.6";
  e.kind = EntryKind::claim_check;
  e.summary = "claimed identity ||TS||_A = ||ST||_A for A-bounded factors";
  e.generate = [](std::uint64_t seed, int trial, int dim_max) {
    Instance inst = start(seed);
    if (trial == 0) {
      // Deterministic witness: a nilpotent shift against a coordinate
      // projection over the identity metric.
      inst.space = SemiSpace::make(Matrix::Identity(2, 2));
      Matrix t(2, 2);
      t << 0, 1, 0, 0;
      Matrix s(2, 2);
      s << 1, 0, 0, 0;
      inst.ops.emplace("T", t);
      inst.ops.emplace("S", s);
      return inst;
    }
    Rng rng(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", gen::admissible(inst.space, rng).matrix());
    inst.ops.emplace("S", gen::admissible(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator s = inst.op("S");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    if (auto g = gate_admissible(s, "S")) return not_applicable(*g);
    const double n1 = AOperator(inst.space, t.matrix() * s.matrix()).a_norm();
    const double n2 = AOperator(inst.space, s.matrix() * t.matrix()).a_norm();
    const double dev = std::abs(n1 - n2) / std::max({1.0, n1, n2});
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = dev <= kCheckTol;
    v.margin = -dev;
    v.notes = "||TS||_A = " + num(n1) + " vs ||ST||_A = " + num(n2);
    return v;
  };
  return e;
}

// ---------------------------------------------------------------------------
// Classification characterizations
// ---------------------------------------------------------------------------

RegistryEntry entry_t11() {
  RegistryEntry e;
  e.id = "T1.1";
  e.kind = EntryKind::theorem;
  e.summary =
      "A-normal iff range(TT#) lies in range(A) and ||T#T u||_A = ||TT# u||_A for all u";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    AOperator t =
        rng.coin() ? gen::a_normal(inst.space, rng) : gen::admissible(inst.space, rng);
    inst.ops.emplace("T", t.matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    Flag lhs = classify(t).a_normal;
    Flag rhs = a_normal_two_condition(t);
    const double dist = std::min(std::abs(lhs.margin), std::abs(rhs.margin));
    if (lhs.holds != rhs.holds && dist < 10.0 * kCheckTol) {
      return uncertain("both characterizations sit on the decision boundary (margins " +
                       num(lhs.margin) + ", " + num(rhs.margin) + ")");
    }
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = lhs.holds == rhs.holds;
    v.margin = v.holds ? dist : -dist;
    v.notes = "commutator margin " + num(lhs.margin) + "; two-condition margin " +
              num(rhs.margin);
    return v;
  };
  return e;
}

RegistryEntry entry_p21() {
  RegistryEntry e;
  e.id = "P2.1";
  e.kind = EntryKind::theorem;
  e.summary = "A-hyponormal iff ||T# u||_A <= ||T u||_A for every u";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    AOperator t =
        rng.coin() ? gen::a_normal(inst.space, rng) : gen::admissible(inst.space, rng);
    inst.ops.emplace("T", t.matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    Flag flag = classify(t).a_hyponormal;
    if (std::abs(flag.margin) < 10.0 * kCheckTol && !flag.holds) {
      return uncertain("hyponormality margin " + num(flag.margin) +
                       " sits on the decision boundary");
    }
    const Matrix& mform = t.sharp_gram();
    const Matrix& nform = t.gram();
    const double scale =
        std::max(1.0, linalg::spectral_norm(mform) + linalg::spectral_norm(nform));
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    if (flag.holds) {
      Rng rng(mix_seed(inst.seed, hash_str("P2.1")));
      double worst = std::numeric_limits<double>::infinity();
      for (int k = 0; k < 64; ++k) {
        Vector u = rng.cgaussian(t.dim());
        const double q =
            std::real(u.dot((nform - mform) * u)) / (u.squaredNorm() * scale);
        worst = std::min(worst, q);
      }
      v.holds = worst >= -kCheckTol;
      v.margin = worst;
      v.notes = "flag says hyponormal; worst sampled pointwise gap " + num(worst);
    } else {
      Vector u;
      if (flag.witness) {
        u = *flag.witness;
      } else {
        u = linalg::eigh(nform - mform).vectors.col(0);
      }
      const double gap = std::real(u.dot((mform - nform) * u)) / (u.squaredNorm() * scale);
      v.holds = gap > 0.0;
      v.margin = v.holds ? gap : -std::abs(gap);
      v.notes = "flag says not hyponormal; witness reverses the inequality by " + num(gap);
    }
    return v;
  };
  return e;
}

// ---------------------------------------------------------------------------
// Pair characterization and stability
// ---------------------------------------------------------------------------

RegistryEntry entry_t21() {
  RegistryEntry e;
  e.id = "T2.1";
  e.kind = EntryKind::theorem;
  e.summary =
      "pair inequality iff two quadratic operator families stay A-positive over real lambda";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", draw_pair_ready(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    PairCtx pc = resolve_pair(inst, t);
    if (pc.bounds.zero_seminorm && !pc.from_params) {
      return not_applicable("T has vanishing A-seminorm");
    }
    if (std::isinf(pc.beta)) return not_applicable("no finite upper constant for T");
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    const Matrix& mform = t.sharp_gram();
    const Matrix& nform = t.gram();
    const std::vector<double> grid = default_lambda_grid(pc.beta);
    const bool fam_ok = quadratic_form_check(t, pc.alpha, pc.beta, grid);
    double grid_min = std::numeric_limits<double>::infinity();
    for (double lam : grid) {
      Matrix f1 = (lam * lam + 1.0) * mform + (2.0 * pc.alpha * pc.alpha * lam) * nform;
      Matrix f2 =
          (lam * lam + std::pow(pc.beta, 4.0)) * nform + (2.0 * lam) * mform;
      for (const Matrix* f : {&f1, &f2}) {
        const double s =
            linalg::eigh(*f).values(0) / std::max(1.0, linalg::spectral_norm(*f));
        grid_min = std::min(grid_min, s);
      }
    }

    std::ostringstream notes;
    notes << "grid of " << grid.size() << " lambdas, min normalized slack " << num(grid_min);
    bool fals_ok = true;
    if (!pc.bounds.zero_seminorm && pc.bounds.alpha_opt > 1e-2 && pc.bounds.alpha_opt < 0.999) {
      const double ap = std::min(1.0, pc.bounds.alpha_opt * 1.01);
      AlphaBetaCheck bumped = is_alpha_beta_a_normal(t, ap, pc.beta);
      if (!bumped.holds && bumped.witness) {
        const Vector& u = *bumped.witness;
        const double m = std::real(u.dot(mform * u));
        const double n0 = std::real(u.dot(nform * u));
        const double val = 2.0 * (m - ap * ap * n0);
        fals_ok = fals_ok && val < 0.0;
        notes << "; alpha bump " << num(ap) << " breaks the first family at lambda = -1 "
              << "(form value " << num(val) << ")";
      } else {
        notes << "; alpha falsification skipped (bump stayed within tolerance)";
      }
    }
    if (std::isfinite(pc.bounds.beta_opt) && pc.bounds.beta_opt > 1.001) {
      const double bp = std::max(1.0, pc.bounds.beta_opt * 0.99);
      AlphaBetaCheck bumped = is_alpha_beta_a_normal(t, pc.alpha, bp);
      if (!bumped.holds && bumped.witness) {
        const Vector& u = *bumped.witness;
        const double m = std::real(u.dot(mform * u));
        const double n0 = std::real(u.dot(nform * u));
        // Vertex value of the second family, in the factorized form
        // (bp^2 n0 - m)(bp^2 n0 + m) / n0 to keep the sign stable when the
        // vertex -m / n0 is far out.
        double vertex;
        double val;
        if (n0 > 0.0) {
          vertex = -m / n0;
          val = (bp * bp * n0 - m) * (bp * bp * n0 + m) / n0;
        } else {
          vertex = -1.0;
          val = -2.0 * m;
        }
        fals_ok = fals_ok && val < 0.0;
        notes << "; beta cut " << num(bp) << " breaks the second family at lambda = "
              << num(vertex) << " (form value " << num(val) << ")";
      } else {
        notes << "; beta falsification skipped (cut stayed within tolerance)";
      }
    }

    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = fam_ok && fals_ok;
    v.margin = fals_ok ? grid_min : std::min(grid_min, -1e-6);
    v.notes = notes.str();
    return v;
  };
  return e;
}

RegistryEntry entry_p22() {
  RegistryEntry e;
  e.id = "P2.2";
  e.kind = EntryKind::theorem;
  e.summary = "T is (alpha,beta) iff T# is (1/beta,1/alpha), for positive alpha";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", draw_pair_ready(inst.space, rng, 1e-6).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    PairCtx pc = resolve_pair(inst, t);
    if (pc.alpha <= 0.0) return not_applicable("needs a positive lower constant");
    if (std::isinf(pc.beta)) return not_applicable("no finite upper constant for T");
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    AOperator sharp_op(inst.space, t.sharp());
    AlphaBetaCheck fwd = is_alpha_beta_a_normal(sharp_op, 1.0 / pc.beta, 1.0 / pc.alpha);
    Matrix dsh = sharp_op.sharp();
    AlphaBetaCheck back = is_alpha_beta_a_normal(AOperator(inst.space, dsh), pc.alpha, pc.beta);

    AlphaBetaBounds sb = optimal_alpha_beta(sharp_op);
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = fwd.holds && back.holds;
    v.margin = std::min(min_slack(fwd), min_slack(back));
    v.notes = "adjoint pair slacks " + num(min_slack(fwd)) + " / " + num(min_slack(back)) +
              "; optimal products alpha(T#)*beta(T) = " + num(sb.alpha_opt * pc.bounds.beta_opt) +
              ", beta(T#)*alpha(T) = " + num(sb.beta_opt * pc.bounds.alpha_opt);
    if (!fwd.holds && fwd.witness) v.witness = fwd.witness;
    return v;
  };
  return e;
}

RegistryEntry entry_c21() {
  RegistryEntry e;
  e.id = "C2.1";
  e.kind = EntryKind::theorem;
  e.summary = "reciprocal pairs (alpha beta = 1) transfer unchanged to the adjoint";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    const int dim = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                            std::max(1, dim_max - 1))));
    inst.space = gen_space(dim, 2, rng.bits());
    inst.ops.emplace("T", gen::reduced(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    AlphaBetaBounds b = optimal_alpha_beta(t);
    if (b.zero_seminorm || !std::isfinite(b.beta_opt) || b.alpha_opt <= 1e-8) {
      return not_applicable("needs a nondegenerate optimal pair");
    }
    const double alpha = inst.param_or("alpha", b.alpha_opt);
    const double beta = inst.param_or("beta", 1.0 / alpha);
    if (std::abs(alpha * beta - 1.0) > 1e-6) {
      return not_applicable("pair does not satisfy alpha beta = 1 (product " +
                            num(alpha * beta) + ")");
    }
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, alpha, beta);
    if (!base.holds) return not_applicable("instance pair fails for T");
    AlphaBetaCheck chk = is_alpha_beta_a_normal(AOperator(inst.space, t.sharp()), alpha, beta);
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = chk.holds;
    v.margin = std::min(min_slack(base), min_slack(chk));
    v.notes = "optimal product " + num(b.alpha_opt * b.beta_opt) + "; adjoint slack " +
              num(min_slack(chk));
    if (!chk.holds && chk.witness) v.witness = chk.witness;
    return v;
  };
  return e;
}

RegistryEntry entry_t221() {
  RegistryEntry e;
  e.id = "T2.2.1";
  e.kind = EntryKind::theorem;
  e.summary = "scalar multiples keep the pair: lambda T stays (alpha,beta)";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", draw_pair_ready(inst.space, rng).matrix());
    inst.lambda = std::polar(std::pow(10.0, rng.uniform(-1.0, 1.0)),
                             rng.uniform(0.0, 6.283185307179586));
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    PairCtx pc = resolve_pair(inst, t);
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    std::vector<Complex> lams = {Complex(0.0, 0.0), Complex(1.0, 2.0), Complex(-3.0, 0.0),
                                 Complex(0.3, -0.7)};
    if (inst.lambda) {
      lams.push_back(*inst.lambda);
      lams.push_back(-std::conj(*inst.lambda));
    }
    double margin = std::numeric_limits<double>::infinity();
    bool holds = true;
    for (Complex lam : lams) {
      Matrix scaled = lam * t.matrix();
      AlphaBetaCheck chk =
          is_alpha_beta_a_normal(AOperator(inst.space, std::move(scaled)), pc.alpha, pc.beta);
      holds = holds && chk.holds;
      margin = std::min(margin, min_slack(chk));
    }
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = holds;
    v.margin = margin;
    v.notes = "checked " + std::to_string(lams.size()) + " scalars";
    return v;
  };
  return e;
}

RegistryEntry entry_t222() {
  RegistryEntry e;
  e.id = "T2.2.2";
  e.kind = EntryKind::theorem;
  e.summary = "shifts keep the pair when one of the two inner-bound conditions holds";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    const double mode = rng.uniform();
    if (mode < 0.5) {
      // Certified branch: rotate an operator with PSD Hermitian A-part so
      // that conj(lambda) T lands back on it.
      AOperator t0 = gen::herm_nonnegative(inst.space, rng);
      const double phi = rng.uniform(0.0, 6.283185307179586);
      const double r = rng.uniform(0.2, 3.0);
      inst.ops.emplace("T", (std::polar(1.0, phi) * t0.matrix()).eval());
      inst.lambda = std::polar(r, phi);
    } else if (mode < 0.75) {
      AOperator t = draw_pair_ready(inst.space, rng);
      inst.ops.emplace("T", t.matrix());
      const double big = 2.0 * t.a_norm() * rng.uniform(1.2, 2.5) + 1.0;
      inst.lambda = std::polar(big, rng.uniform(0.0, 6.283185307179586));
    } else {
      AOperator t = draw_pair_ready(inst.space, rng);
      inst.ops.emplace("T", t.matrix());
      inst.lambda = std::polar(std::pow(10.0, rng.uniform(-0.5, 0.5)),
                               rng.uniform(0.0, 6.283185307179586));
    }
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    if (!inst.lambda) return not_applicable("no shift lambda in the instance");
    const Complex lam = *inst.lambda;
    PairCtx pc = resolve_pair(inst, t);
    if (pc.bounds.zero_seminorm && !pc.from_params) {
      return not_applicable("T has vanishing A-seminorm");
    }
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    const double tnorm = t.a_norm();
    std::ostringstream notes;
    Applicability app = Applicability::yes;

    Matrix rotated = std::conj(lam) * t.matrix();
    Matrix herm = linalg::hermitize(t.space().a() * rotated);
    const double hscale = std::max(1.0, linalg::spectral_norm(herm));
    const double hmin = linalg::eigh(herm).values(0) / hscale;

    if (std::abs(lam) <= 1e-14 * std::max(1.0, tnorm)) {
      notes << "shift is zero";
    } else if (hmin >= -kClassifyTol) {
      notes << "first condition certified: Hermitian A-part of conj(lambda) T is PSD "
            << "(normalized min eigenvalue " << num(hmin) << ")";
    } else if (hmin > -1e-6) {
      return uncertain("Hermitian A-part sits on the PSD boundary (min eigenvalue " +
                       num(hmin) + ")");
    } else {
      // First condition certified false: a strictly negative direction of the
      // Hermitian A-part is a feasible direction with negative quotient.
      notes << "first condition certified false (min eigenvalue " << num(hmin) << "); ";
      if (std::abs(lam) > 2.0 * tnorm * (1.0 + 1e-9)) {
        notes << "second condition certified: |lambda| = " << num(std::abs(lam))
              << " > 2 ||T||_A = " << num(2.0 * tnorm);
      } else {
        MuEstimate mu;
        try {
          mu = mu_bounds(AOperator(inst.space, rotated), 400, 25,
                         mix_seed(inst.seed, hash_str("mu")));
        } catch (const Error& err) {
          return not_applicable(std::string("inner bounds unavailable: ") + err.what());
        }
        const double q = std::abs(lam) * std::abs(lam) + 2.0 * std::abs(lam) * tnorm * mu.mu1;
        if (q <= 0.0) {
          return not_applicable(
              "second condition certified false: |lambda|^2 + 2 |lambda| ||T||_A mu1 <= " +
              num(q) + " (estimate mu1 = " + num(mu.mu1) + " bounds the true value from above)");
        }
        notes << "second condition rests on the uncertified estimate mu1 ~ " << num(mu.mu1)
              << " (quantity " << num(q) << ")";
        app = Applicability::uncertain;
      }
    }

    const Eigen::Index n = t.dim();
    Matrix shifted = t.matrix() + lam * Matrix::Identity(n, n);
    AlphaBetaCheck chk =
        is_alpha_beta_a_normal(AOperator(inst.space, std::move(shifted)), pc.alpha, pc.beta);
    TheoremVerdict v;
    v.applicable = app;
    v.holds = chk.holds;
    v.margin = min_slack(chk);
    v.notes = notes.str();
    if (!chk.holds && chk.witness) v.witness = chk.witness;
    return v;
  };
  return e;
}

RegistryEntry entry_c22() {
  RegistryEntry e;
  e.id = "C2.2";
  e.kind = EntryKind::theorem;
  e.summary = "one-sided inner bounds give shift stability for every positive (negative) shift";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    AOperator t0 = gen::herm_nonnegative(inst.space, rng);
    const bool positive_branch = rng.coin();
    inst.ops.emplace("T", positive_branch ? t0.matrix() : (-t0.matrix()).eval());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    PairCtx pc = resolve_pair(inst, t);
    if (pc.bounds.zero_seminorm && !pc.from_params) {
      return not_applicable("T has vanishing A-seminorm");
    }
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    Matrix herm = linalg::hermitize(t.space().a() * t.matrix());
    const double hscale = std::max(1.0, linalg::spectral_norm(herm));
    linalg::HermEig he = linalg::eigh(herm);
    const double hmin = he.values(0) / hscale;
    const double hmax = he.values(he.values.size() - 1) / hscale;

    std::vector<double> lams;
    std::string branch;
    if (hmin >= -kClassifyTol) {
      lams = {0.35, 1.0, 2.75, 0.5 * std::max(1.0, t.a_norm())};
      branch = "nonnegative inner bound certified (min eigenvalue " + num(hmin) + ")";
    } else if (hmax <= kClassifyTol) {
      lams = {-0.35, -1.0, -2.75, -0.5 * std::max(1.0, t.a_norm())};
      branch = "nonpositive inner bound certified (max eigenvalue " + num(hmax) + ")";
    } else if (hmin < -1e-6 && hmax > 1e-6) {
      return not_applicable("both one-sided inner bounds certified indefinite (eigenvalues " +
                            num(hmin) + " .. " + num(hmax) + ")");
    } else {
      return uncertain("Hermitian A-part sits on the one-sided boundary (eigenvalues " +
                       num(hmin) + " .. " + num(hmax) + ")");
    }

    const Eigen::Index n = t.dim();
    double margin = std::numeric_limits<double>::infinity();
    bool holds = true;
    for (double lam : lams) {
      Matrix shifted = t.matrix() + Complex(lam, 0.0) * Matrix::Identity(n, n);
      AlphaBetaCheck chk =
          is_alpha_beta_a_normal(AOperator(inst.space, std::move(shifted)), pc.alpha, pc.beta);
      holds = holds && chk.holds;
      margin = std::min(margin, min_slack(chk));
    }
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = holds;
    v.margin = margin;
    v.notes = branch + "; checked " + std::to_string(lams.size()) + " shifts";
    return v;
  };
  return e;
}

RegistryEntry entry_e22() {
  RegistryEntry e;
  e.id = "E2.2";
  e.kind = EntryKind::claim_check;
  e.summary = "claimed failure of the shifted upper-triangular example for its stated pair";
  e.generate = [](std::uint64_t seed, int, int) {
    Instance inst = start(seed);
    Matrix a(2, 2);
    a << 1, 0, 0, 2;
    inst.space = SemiSpace::make(a);
    Matrix s(2, 2);
    s << 2, 2, 0, 2;
    inst.ops.emplace("S", s);
    inst.params["alpha"] = 1.0 / std::sqrt(6.0);
    inst.params["beta"] = std::sqrt(10.0);
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator s = inst.op("S");
    if (auto g = gate_admissible(s, "S")) return not_applicable(*g);
    const double alpha = inst.param_or("alpha", 1.0 / std::sqrt(6.0));
    const double beta = inst.param_or("beta", std::sqrt(10.0));
    AlphaBetaCheck chk = is_alpha_beta_a_normal(s, alpha, beta);
    AlphaBetaBounds b = optimal_alpha_beta(s);
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = !chk.holds;
    v.margin = -min_slack(chk);
    v.notes = "claimed the pair (" + num(alpha) + ", " + num(beta) +
              ") fails; measured optimal pair (" + num(b.alpha_opt) + ", " + num(b.beta_opt) +
              ")";
    return v;
  };
  return e;
}

// ---------------------------------------------------------------------------
// Order congruences and structured products
// ---------------------------------------------------------------------------

RegistryEntry entry_l21() {
  RegistryEntry e;
  e.id = "L2.1";
  e.kind = EntryKind::theorem;
  e.summary = "A-order congruence: T >=_A S survives R# ( ) R, R ( ) R#, and "
              "A-selfadjoint sandwiches";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    AOperator s = gen::admissible(inst.space, rng);
    AOperator d = gen::a_positive(inst.space, rng);
    inst.ops.emplace("S", s.matrix());
    inst.ops.emplace("T", (s.matrix() + d.matrix()).eval());
    inst.ops.emplace("R", gen::admissible(inst.space, rng).matrix());
    inst.ops.emplace("V", gen::a_selfadjoint(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator s = inst.op("S");
    AOperator r = inst.op("R");
    AOperator w = inst.op("V");
    for (const auto& [op, name] :
         std::initializer_list<std::pair<const AOperator*, const char*>>{
             {&t, "T"}, {&s, "S"}, {&r, "R"}, {&w, "V"}}) {
      if (auto g = gate_admissible(*op, name)) return not_applicable(*g);
    }
    const SemiSpace& sp = t.space();
    Matrix d = t.matrix() - s.matrix();
    FormCheck hyp = form_nonneg(sp, d);
    if (!hyp.holds) return not_applicable("hypothesis T >=_A S fails");
    if (!classify(w).a_selfadjoint.holds) return not_applicable("V is not A-selfadjoint");

    Matrix rsh = r.sharp();
    FormCheck c1 = form_nonneg(sp, rsh * d * r.matrix());
    FormCheck c2 = form_nonneg(sp, r.matrix() * d * rsh);
    FormCheck c3 = form_nonneg(sp, w.matrix() * d * w.matrix());
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = c1.holds && c2.holds && c3.holds;
    v.margin = std::min({c1.margin, c2.margin, c3.margin});
    v.notes = "hypothesis slack " + num(hyp.margin) + "; sandwich slacks " + num(c1.margin) +
              ", " + num(c2.margin) + ", " + num(c3.margin);
    if (!v.holds) {
      if (!c1.holds) v.witness = c1.witness;
      else if (!c2.holds) v.witness = c2.witness;
      else v.witness = c3.witness;
    }
    return v;
  };
  return e;
}

RegistryEntry entry_p23() {
  RegistryEntry e;
  e.id = "P2.3";
  e.kind = EntryKind::theorem;
  e.summary = "A-isometry conjugation keeps the pair: V T V# stays (alpha,beta)";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", draw_pair_ready(inst.space, rng).matrix());
    inst.ops.emplace("V", gen::a_isometry(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator vi = inst.op("V");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    if (auto g = gate_admissible(vi, "V")) return not_applicable(*g);
    Flag iso = classify(vi).a_isometry;
    if (!iso.holds) return not_applicable("V is not an A-isometry");
    PairCtx pc = resolve_pair(inst, t);
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    Matrix conj = vi.matrix() * t.matrix() * vi.sharp();
    AlphaBetaCheck chk =
        is_alpha_beta_a_normal(AOperator(inst.space, std::move(conj)), pc.alpha, pc.beta);
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = chk.holds;
    v.margin = min_slack(chk);
    v.notes = "isometry defect margin " + num(iso.margin) + "; conjugated slack " +
              num(min_slack(chk));
    if (!chk.holds && chk.witness) v.witness = chk.witness;
    return v;
  };
  return e;
}

RegistryEntry entry_p24() {
  RegistryEntry e;
  e.id = "P2.4";
  e.kind = EntryKind::theorem;
  e.summary = "product with a sharp-commuting A-selfadjoint factor keeps the pair";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    auto [t, s] = gen::sharp_commuting_pair(inst.space, rng, /*selfadjoint_s=*/true);
    inst.ops.emplace("T", t.matrix());
    inst.ops.emplace("S", s.matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator s = inst.op("S");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    if (auto g = gate_admissible(s, "S")) return not_applicable(*g);
    if (!classify(s).a_selfadjoint.holds) return not_applicable("S is not A-selfadjoint");
    Matrix tsh = t.sharp();
    const double comm = rel_residual(tsh * s.matrix(), s.matrix() * tsh);
    if (comm > kCheckTol) {
      return not_applicable("T# and S do not commute (residual " + num(comm) + ")");
    }
    PairCtx pc = resolve_pair(inst, t);
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    AlphaBetaCheck chk = is_alpha_beta_a_normal(
        AOperator(inst.space, t.matrix() * s.matrix()), pc.alpha, pc.beta);
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = chk.holds;
    v.margin = min_slack(chk);
    v.notes = "commutation residual " + num(comm) + "; product slack " + num(min_slack(chk));
    if (!chk.holds && chk.witness) v.witness = chk.witness;
    return v;
  };
  return e;
}

RegistryEntry entry_p25() {
  RegistryEntry e;
  e.id = "P2.5";
  e.kind = EntryKind::theorem;
  e.summary = "product with a commuting A-unitary factor keeps the pair";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    auto [t, s] = gen::commuting_pair(inst.space, rng);
    inst.ops.emplace("T", t.matrix());
    inst.ops.emplace("S", s.matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator s = inst.op("S");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    if (auto g = gate_admissible(s, "S")) return not_applicable(*g);
    if (!classify(s).a_unitary.holds) return not_applicable("S is not A-unitary");
    const double comm = rel_residual(t.matrix() * s.matrix(), s.matrix() * t.matrix());
    if (comm > kCheckTol) {
      return not_applicable("T and S do not commute (residual " + num(comm) + ")");
    }
    PairCtx pc = resolve_pair(inst, t);
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    AlphaBetaCheck chk = is_alpha_beta_a_normal(
        AOperator(inst.space, t.matrix() * s.matrix()), pc.alpha, pc.beta);
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = chk.holds;
    v.margin = min_slack(chk);
    v.notes = "commutation residual " + num(comm) + "; product slack " + num(min_slack(chk));
    if (!chk.holds && chk.witness) v.witness = chk.witness;
    return v;
  };
  return e;
}

RegistryEntry entry_e232() {
  RegistryEntry e;
  e.id = "E2.3.2";
  e.kind = EntryKind::claim_check;
  e.summary = "claimed pair loss when negating the lower-triangular example";
  e.generate = [](std::uint64_t seed, int, int) {
    Instance inst = start(seed);
    inst.space = SemiSpace::make(Matrix::Identity(2, 2));
    Matrix t(2, 2);
    t << 1, 0, 1, 1;
    inst.ops.emplace("T", t);
    inst.ops.emplace("S", (-Matrix::Identity(2, 2)).eval());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator s = inst.op("S");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    if (auto g = gate_admissible(s, "S")) return not_applicable(*g);
    PairCtx pc = resolve_pair(inst, t);
    AlphaBetaCheck baseT = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    AlphaBetaCheck baseS = is_alpha_beta_a_normal(s, pc.alpha, pc.beta);
    if (!baseT.holds || !baseS.holds) {
      return not_applicable("factors fail the instance pair");
    }
    AlphaBetaCheck chk = is_alpha_beta_a_normal(
        AOperator(inst.space, t.matrix() * s.matrix()), pc.alpha, pc.beta);
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = !chk.holds;
    v.margin = -min_slack(chk);
    v.notes = "claimed TS loses the pair (" + num(pc.alpha) + ", " + num(pc.beta) +
              "); the product is a unimodular multiple of T, so its two-sided constants "
              "coincide with T's (slack " +
              num(min_slack(chk)) + ")";
    return v;
  };
  return e;
}

RegistryEntry entry_t23() {
  RegistryEntry e;
  e.id = "T2.3";
  e.kind = EntryKind::theorem;
  e.summary = "pairs multiply across sharp-commuting products: TS is "
              "(alpha alpha', beta beta')";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    auto [t, s] = gen::sharp_commuting_pair(inst.space, rng);
    inst.ops.emplace("T", t.matrix());
    inst.ops.emplace("S", s.matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator s = inst.op("S");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    if (auto g = gate_admissible(s, "S")) return not_applicable(*g);
    PairCtx pcT = resolve_pair(inst, t);
    PairCtx pcS = resolve_pair(inst, s, "alpha2", "beta2");
    AlphaBetaCheck baseT = is_alpha_beta_a_normal(t, pcT.alpha, pcT.beta);
    if (!baseT.holds) return not_applicable("instance pair fails for T");
    AlphaBetaCheck baseS = is_alpha_beta_a_normal(s, pcS.alpha, pcS.beta);
    if (!baseS.holds) return not_applicable("instance pair fails for S");

    Matrix tsh = t.sharp();
    Matrix ssh = s.sharp();
    const double r1 = rel_residual(tsh * s.matrix(), s.matrix() * tsh);
    const double r2 = rel_residual(ssh * t.matrix(), t.matrix() * ssh);
    const double pa = pcT.alpha * pcS.alpha;
    const double pb = pcT.beta * pcS.beta;

    bool any = false;
    bool holds = true;
    double margin = std::numeric_limits<double>::infinity();
    std::ostringstream notes;
    if (r1 <= kCheckTol) {
      any = true;
      AlphaBetaCheck chk = is_alpha_beta_a_normal(
          AOperator(inst.space, t.matrix() * s.matrix()), pa, pb);
      holds = holds && chk.holds;
      margin = std::min(margin, min_slack(chk));
      notes << "TS slack " << num(min_slack(chk)) << " (T#S residual " << num(r1) << "); ";
    }
    if (r2 <= kCheckTol) {
      any = true;
      AlphaBetaCheck chk = is_alpha_beta_a_normal(
          AOperator(inst.space, s.matrix() * t.matrix()), pa, pb);
      holds = holds && chk.holds;
      margin = std::min(margin, min_slack(chk));
      notes << "ST slack " << num(min_slack(chk)) << " (S#T residual " << num(r2) << "); ";
    }
    if (!any) return not_applicable("neither commutation hypothesis holds");
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = holds;
    v.margin = margin;
    v.notes = notes.str() + "product pair (" + num(pa) + ", " + num(pb) + ")";
    return v;
  };
  return e;
}

RegistryEntry entry_t24() {
  RegistryEntry e;
  e.id = "T2.4";
  e.kind = EntryKind::theorem;
  e.summary = "power-stable pairs pin the A-spectral radius inside [||T||_A / beta, ||T||_A]";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    AOperator t = (rng.uniform() < 0.75) ? gen::a_normal(inst.space, rng)
                                         : gen::admissible(inst.space, rng);
    inst.ops.emplace("T", t.matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    const double norm = t.a_norm();
    if (norm <= 1e-12) {
      TheoremVerdict v;
      v.applicable = Applicability::yes;
      v.holds = true;
      v.margin = 0.0;
      v.notes = "vanishing seminorm; both radius bounds are trivially tight";
      return v;
    }
    AOperator unit(inst.space, (t.matrix() / norm).eval());
    PairCtx pc = resolve_pair(inst, unit);
    if (std::isinf(pc.beta)) return not_applicable("no finite upper constant for T");
    AlphaBetaCheck base = is_alpha_beta_a_normal(unit, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    Matrix pk = unit.matrix();
    for (int k = 1; k <= 4; ++k) {
      pk = pk * pk;
      AlphaBetaCheck chk = is_alpha_beta_a_normal(AOperator(inst.space, pk), pc.alpha, pc.beta);
      if (!chk.holds) {
        return not_applicable("dyadic power 2^" + std::to_string(k) +
                              " leaves the pair (hypothesis certified only to depth 4)");
      }
    }

    const double r = a_spectral_radius(unit).value;
    const double lo = 1.0 / pc.beta;
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.margin = std::min(r - lo, 1.0 - r);
    v.holds = v.margin >= -kCheckTol;
    v.notes = "dyadic powers certified to depth 4 (truncated hypothesis); normalized "
              "spectral radius " +
              num(r) + " against [" + num(lo) + ", 1]";
    return v;
  };
  return e;
}

RegistryEntry entry_q2() {
  RegistryEntry e;
  e.id = "Q2";
  e.kind = EntryKind::question;
  e.summary = "open: does T^n stay (alpha^{n^2}, beta^{n^2}) for every (alpha,beta) operator?";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", gen::admissible(inst.space, rng).matrix());
    inst.params["n"] = 2.0;
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    const int n = static_cast<int>(std::llround(inst.param_or("n", 2.0)));
    if (n < 2) return not_applicable("power must be at least 2");
    AlphaBetaBounds b = optimal_alpha_beta(t);
    if (b.zero_seminorm && !inst.has_param("alpha") && !inst.has_param("beta")) {
      return not_applicable("T has vanishing A-seminorm");
    }
    const double alpha = inst.param_or("alpha", std::min(b.alpha_opt, 1.0));
    const double beta = inst.param_or(
        "beta", std::isinf(b.beta_opt) ? b.beta_opt : std::max(b.beta_opt, 1.0));
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, alpha, beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    const double an = std::pow(alpha, static_cast<double>(n) * n);
    const double bn = std::isinf(beta) ? beta : std::pow(beta, static_cast<double>(n) * n);
    Matrix tn = mat_pow(t.matrix(), n);
    AOperator tpow(inst.space, std::move(tn));
    AlphaBetaCheck chk = is_alpha_beta_a_normal(tpow, an, bn);
    AlphaBetaBounds powered = optimal_alpha_beta(tpow);
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = chk.holds;
    v.margin = min_slack(chk);
    v.notes = "conjectured pair (" + num(an) + ", " + num(bn) + "); measured optimal pair of "
              "the power (" +
              num(powered.alpha_opt) + ", " + num(powered.beta_opt) + ")";
    if (!chk.holds && chk.witness) v.witness = chk.witness;
    return v;
  };
  return e;
}

// ---------------------------------------------------------------------------
// Tensor structure
// ---------------------------------------------------------------------------

RegistryEntry entry_l22() {
  RegistryEntry e;
  e.id = "L2.2";
  e.kind = EntryKind::theorem;
  e.summary = "tensor products preserve the A-order between positive factors";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.space_b = draw_space(rng, dim_max, 3);
    AOperator t2 = gen::a_positive(inst.space, rng);
    AOperator d1 = gen::a_positive(inst.space, rng);
    AOperator s2 = gen::a_positive(inst.space_b, rng);
    AOperator d2 = gen::a_positive(inst.space_b, rng);
    inst.ops.emplace("R", t2.matrix());
    inst.ops.emplace("T", (t2.matrix() + d1.matrix()).eval());
    inst.ops.emplace("V", s2.matrix());
    inst.ops.emplace("S", (s2.matrix() + d2.matrix()).eval());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t1 = inst.op("T");
    AOperator t2 = inst.op("R");
    AOperator s1 = inst.op("S", true);
    AOperator s2 = inst.op("V", true);
    const SemiSpace& sa = t1.space();
    const SemiSpace& sb = s1.space();
    FormCheck h1 = form_nonneg(sa, t2.matrix());
    FormCheck h2 = form_nonneg(sa, t1.matrix() - t2.matrix());
    FormCheck h3 = form_nonneg(sb, s2.matrix());
    FormCheck h4 = form_nonneg(sb, s1.matrix() - s2.matrix());
    if (!h1.holds || !h2.holds || !h3.holds || !h4.holds) {
      return not_applicable("factor order hypotheses fail");
    }
    TensorSpace ts = make_tensor_space(inst.space, inst.space_b);
    Matrix big1 = linalg::kron(t1.matrix(), s1.matrix());
    Matrix big2 = linalg::kron(t2.matrix(), s2.matrix());
    FormCheck c1 = form_nonneg(*ts.product, big1 - big2);
    FormCheck c2 = form_nonneg(*ts.product, big2);
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = c1.holds && c2.holds;
    v.margin = std::min(c1.margin, c2.margin);
    v.notes = "tensor order slack " + num(c1.margin) + "; tensor positivity slack " +
              num(c2.margin);
    if (!v.holds) v.witness = c1.holds ? c2.witness : c1.witness;
    return v;
  };
  return e;
}

RegistryEntry entry_p26() {
  RegistryEntry e;
  e.id = "P2.6";
  e.kind = EntryKind::theorem;
  e.summary = "tensor domination between positive factors iff a rebalancing factor exists";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.space_b = draw_space(rng, dim_max, 3);
    AOperator t2 = gen::a_positive(inst.space, rng);
    AOperator s2 = gen::a_positive(inst.space_b, rng);
    const double mode = rng.uniform();
    Matrix t1m, s1m;
    if (mode < 0.35) {
      const double lam = rng.uniform(0.3, 1.2);
      const double mu = rng.uniform(0.05, 0.95) / lam;
      t1m = lam * t2.matrix();
      s1m = mu * s2.matrix();
    } else if (mode < 0.7) {
      const double lam = rng.uniform(0.8, 2.0);
      const double mu = rng.uniform(1.05, 3.0) / lam;
      t1m = lam * t2.matrix();
      s1m = mu * s2.matrix();
    } else {
      t1m = gen::a_positive(inst.space, rng).matrix();
      s1m = gen::a_positive(inst.space_b, rng).matrix();
    }
    inst.ops.emplace("T", t1m);
    inst.ops.emplace("R", t2.matrix());
    inst.ops.emplace("S", s1m);
    inst.ops.emplace("V", s2.matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t1 = inst.op("T");
    AOperator t2 = inst.op("R");
    AOperator s1 = inst.op("S", true);
    AOperator s2 = inst.op("V", true);
    const SemiSpace& sa = t1.space();
    const SemiSpace& sb = s1.space();
    for (const auto& [op, spc, name] :
         std::initializer_list<std::tuple<const AOperator*, const SemiSpace*, const char*>>{
             {&t1, &sa, "T"}, {&t2, &sa, "R"}, {&s1, &sb, "S"}, {&s2, &sb, "V"}}) {
      if (!form_nonneg(*spc, op->matrix()).holds) {
        return not_applicable(std::string(name) + " is not positive for its metric");
      }
    }
    const double t1norm = linalg::spectral_norm(linalg::hermitize(sa.a() * t1.matrix()));
    const double s1norm = linalg::spectral_norm(linalg::hermitize(sb.a() * s1.matrix()));
    if (t1norm < 1e-12 || s1norm < 1e-12) {
      return not_applicable("a dominated factor vanishes as a form");
    }

    TensorSpace ts = make_tensor_space(inst.space, inst.space_b);
    Matrix diff = linalg::kron(t2.matrix(), s2.matrix()) - linalg::kron(t1.matrix(), s1.matrix());
    FormCheck direct = form_nonneg(*ts.product, diff);
    FactorInterval fi;
    try {
      fi = tensor_factor_interval(t1, t2, s1, s2);
    } catch (const Error& err) {
      return not_applicable(std::string("rebalancing interval unavailable: ") + err.what());
    }
    if (direct.holds != fi.feasible && std::abs(direct.margin) < 10.0 * kCheckTol) {
      return uncertain("tensor order sits on the decision boundary (margin " +
                       num(direct.margin) + ")");
    }

    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = direct.holds == fi.feasible;
    v.margin = v.holds ? std::abs(direct.margin) : -std::abs(direct.margin);
    std::ostringstream notes;
    notes << "tensor order " << (direct.holds ? "holds" : "fails") << " (margin "
          << num(direct.margin) << "); factor interval [" << num(fi.d_min) << ", "
          << num(fi.d_max) << "] " << (fi.feasible ? "nonempty" : "empty");
    if (fi.feasible && v.holds) {
      double d = std::isinf(fi.d_max) ? std::max(fi.d_min, 1e-8) * 2.0
                                      : std::sqrt(fi.d_min * fi.d_max);
      if (!(d > 0.0) || !std::isfinite(d)) {
        d = std::isfinite(fi.d_max) ? std::max(fi.d_max * 0.5, 1e-8) : 1.0;
      }
      FormCheck c1 = form_nonneg(sa, d * t2.matrix() - t1.matrix());
      FormCheck c2 = form_nonneg(sb, s2.matrix() / d - s1.matrix());
      v.holds = v.holds && c1.holds && c2.holds;
      v.margin = std::min({v.margin, c1.margin, c2.margin});
      notes << "; witness d = " << num(d) << " with slacks " << num(c1.margin) << ", "
            << num(c2.margin);
    }
    v.notes = notes.str();
    return v;
  };
  return e;
}

RegistryEntry entry_p27() {
  RegistryEntry e;
  e.id = "P2.7";
  e.kind = EntryKind::theorem;
  e.summary = "tensor pairs multiply, and tensor normality splits into rebalanced factor pairs";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.space_b = draw_space(rng, dim_max, 3);
    inst.ops.emplace("T", draw_pair_ready(inst.space, rng, 1e-4).matrix());
    inst.ops.emplace("S", draw_pair_ready(inst.space_b, rng, 1e-4).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator s = inst.op("S", true);
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    if (auto g = gate_admissible(s, "S")) return not_applicable(*g);
    PairCtx pcT = resolve_pair(inst, t);
    PairCtx pcS = resolve_pair(inst, s, "alpha2", "beta2");
    if (std::isinf(pcT.beta) || std::isinf(pcS.beta)) {
      return not_applicable("needs finite upper constants for both factors");
    }
    AlphaBetaCheck baseT = is_alpha_beta_a_normal(t, pcT.alpha, pcT.beta);
    if (!baseT.holds) return not_applicable("instance pair fails for T");
    AlphaBetaCheck baseS = is_alpha_beta_a_normal(s, pcS.alpha, pcS.beta);
    if (!baseS.holds) return not_applicable("instance pair fails for S");

    TensorSpace ts = make_tensor_space(inst.space, inst.space_b);
    AOperator prod = tensor(t, s, ts);
    AlphaBetaCheck part1 =
        is_alpha_beta_a_normal(prod, pcT.alpha * pcS.alpha, pcT.beta * pcS.beta);

    AlphaBetaBounds ab = optimal_alpha_beta(prod);
    if (ab.zero_seminorm || !std::isfinite(ab.beta_opt) || ab.alpha_opt < 1e-6) {
      return not_applicable("product pair too degenerate for the converse split");
    }
    const double a = 0.999 * std::min(ab.alpha_opt, 1.0);
    const double b = 1.001 * std::max(ab.beta_opt, 1.0);

    Matrix tsh = t.sharp();
    Matrix ssh = s.sharp();
    AOperator mT(inst.space, t.matrix() * tsh);
    AOperator nT_scaled_b(inst.space, ((b * b) * (tsh * t.matrix())).eval());
    AOperator nT_scaled_a(inst.space, ((a * a) * (tsh * t.matrix())).eval());
    AOperator mS(inst.space_b, s.matrix() * ssh);
    AOperator nS(inst.space_b, ssh * s.matrix());

    FactorInterval fd, fd0;
    try {
      fd = tensor_factor_interval(mT, nT_scaled_b, mS, nS);
      fd0 = tensor_factor_interval(nT_scaled_a, mT, nS, mS);
    } catch (const Error& err) {
      return not_applicable(std::string("rebalancing interval unavailable: ") + err.what());
    }

    TheoremVerdict v;
    v.applicable = Applicability::yes;
    std::ostringstream notes;
    notes << "product slack " << num(min_slack(part1)) << "; padded pair (" << num(a) << ", "
          << num(b) << ")";
    if (!fd.feasible || !fd0.feasible) {
      v.holds = false;
      v.margin = -1.0;
      notes << "; a rebalancing interval came back empty";
      v.notes = notes.str();
      return v;
    }
    auto pick = [](const FactorInterval& f) {
      double d = std::isinf(f.d_max) ? std::max(f.d_min, 1e-8) * 2.0
                                     : std::sqrt(f.d_min * f.d_max);
      if (!(d > 0.0) || !std::isfinite(d)) {
        d = std::isfinite(f.d_max) ? std::max(f.d_max * 0.5, 1e-8) : 1.0;
      }
      return d;
    };
    const double d = pick(fd);
    const double d0 = pick(fd0);
    AlphaBetaCheck chkT = is_alpha_beta_a_normal(t, a / std::sqrt(d0), std::sqrt(d) * b);
    AlphaBetaCheck chkS = is_alpha_beta_a_normal(s, std::sqrt(d0), 1.0 / std::sqrt(d));
    v.holds = part1.holds && chkT.holds && chkS.holds;
    v.margin = std::min({min_slack(part1), min_slack(chkT), min_slack(chkS)});
    notes << "; rebalancing d = " << num(d) << " in [" << num(fd.d_min) << ", " << num(fd.d_max)
          << "], d0 = " << num(d0) << " in [" << num(fd0.d_min) << ", " << num(fd0.d_max)
          << "]; split slacks " << num(min_slack(chkT)) << ", " << num(min_slack(chkS));
    v.notes = notes.str();
    return v;
  };
  return e;
}

RegistryEntry entry_t25() {
  RegistryEntry e;
  e.id = "T2.5";
  e.kind = EntryKind::theorem;
  e.summary = "mixed products tensored with a factor carry the composite pairs";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    auto [t, s] = gen::sharp_commuting_pair(inst.space, rng);
    inst.ops.emplace("T", t.matrix());
    inst.ops.emplace("S", s.matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    AOperator s = inst.op("S");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    if (auto g = gate_admissible(s, "S")) return not_applicable(*g);
    PairCtx pcT = resolve_pair(inst, t);
    PairCtx pcS = resolve_pair(inst, s, "alpha2", "beta2");
    AlphaBetaCheck baseT = is_alpha_beta_a_normal(t, pcT.alpha, pcT.beta);
    if (!baseT.holds) return not_applicable("instance pair fails for T");
    AlphaBetaCheck baseS = is_alpha_beta_a_normal(s, pcS.alpha, pcS.beta);
    if (!baseS.holds) return not_applicable("instance pair fails for S");

    Matrix tsh = t.sharp();
    Matrix ssh = s.sharp();
    const double r1 = rel_residual(tsh * s.matrix(), s.matrix() * tsh);
    const double r2 = rel_residual(ssh * t.matrix(), t.matrix() * ssh);
    TensorSpace ts = make_tensor_space(inst.space, inst.space);
    const double a = pcT.alpha, b = pcT.beta, a2 = pcS.alpha, b2 = pcS.beta;

    bool any = false;
    bool holds = true;
    double margin = std::numeric_limits<double>::infinity();
    std::ostringstream notes;
    auto run = [&](const Matrix& left, const AOperator& right, double pa, double pb,
                   const char* label) {
      AOperator lop(inst.space, left);
      AOperator big = tensor(lop, right, ts);
      AlphaBetaCheck chk = is_alpha_beta_a_normal(big, pa, pb);
      holds = holds && chk.holds;
      margin = std::min(margin, min_slack(chk));
      notes << label << " slack " << num(min_slack(chk)) << "; ";
    };
    if (r1 <= kCheckTol) {
      any = true;
      Matrix prod = t.matrix() * s.matrix();
      run(prod, t, a * a * a2, b * b * b2, "TS tensor T");
      run(prod, s, a * a2 * a2, b * b2 * b2, "TS tensor S");
    }
    if (r2 <= kCheckTol) {
      any = true;
      Matrix prod = s.matrix() * t.matrix();
      run(prod, t, a * a * a2, b * b * b2, "ST tensor T");
      run(prod, s, a * a2 * a2, b * b2 * b2, "ST tensor S");
    }
    if (!any) return not_applicable("neither commutation hypothesis holds");
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = holds;
    v.margin = margin;
    v.notes = notes.str() + "residuals " + num(r1) + ", " + num(r2);
    return v;
  };
  return e;
}

// ---------------------------------------------------------------------------
// Seminorm and radius inequalities
// ---------------------------------------------------------------------------

RegistryEntry entry_l31() {
  RegistryEntry e;
  e.id = "L3.1";
  e.kind = EntryKind::theorem;
  e.summary = "vector power inequality bounding the cross term by the seminorm gap";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    Vector u, v;
    for (int tries = 0; tries < 12; ++tries) {
      u = rng.cgaussian(inst.space->dim());
      if (inst.space->seminorm(u) > 1e-6 * u.norm()) break;
    }
    for (int tries = 0; tries < 12; ++tries) {
      v = rng.cgaussian(inst.space->dim());
      if (inst.space->seminorm(v) > 1e-6 * v.norm()) break;
    }
    if (inst.space->seminorm(u) < inst.space->seminorm(v)) std::swap(u, v);
    inst.ops.emplace("u", Matrix(u));
    inst.ops.emplace("v", Matrix(v));
    return inst;
  };
  e.check = [](const Instance& inst) {
    auto itu = inst.ops.find("u");
    auto itv = inst.ops.find("v");
    if (itu == inst.ops.end() || itv == inst.ops.end() || itu->second.cols() != 1 ||
        itv->second.cols() != 1) {
      return not_applicable("needs column vectors u and v");
    }
    const SemiSpace& sp = *inst.space;
    Vector u = itu->second.col(0);
    Vector v = itv->second.col(0);
    const double nu = sp.seminorm(u);
    const double nv = sp.seminorm(v);
    const double floor_u = 1e-9 * std::max(1.0, u.norm());
    const double floor_v = 1e-9 * std::max(1.0, v.norm());
    if (nu <= floor_u || nv <= floor_v) {
      return not_applicable("a vector lies in the null space of the metric");
    }
    if (nu < nv) return not_applicable("needs ||u||_A >= ||v||_A");

    const double cosv = std::real(sp.inner(u, v)) / (nu * nv);
    const double duv = sp.seminorm(u - v);
    std::vector<double> rs;
    if (inst.has_param("r")) {
      rs = {inst.param_or("r", 1.0)};
    } else {
      rs = {0.5, 1.0, 2.0};
    }
    double margin = std::numeric_limits<double>::infinity();
    std::ostringstream notes;
    for (double r : rs) {
      const double lhs = std::pow(nu, 2.0 * r) + std::pow(nv, 2.0 * r) -
                         2.0 * std::pow(nu, r) * std::pow(nv, r) * cosv;
      const double coeff = (r >= 1.0) ? r * r * std::pow(nu, 2.0 * r - 2.0)
                                      : std::pow(nv, 2.0 * r - 2.0);
      const double rhs = coeff * duv * duv;
      const double slack = (rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
      margin = std::min(margin, slack);
      notes << "r = " << num(r) << " slack " << num(slack) << "; ";
    }
    TheoremVerdict v2;
    v2.applicable = Applicability::yes;
    v2.holds = margin >= -kCheckTol;
    v2.margin = margin;
    v2.notes = notes.str();
    return v2;
  };
  return e;
}

RegistryEntry entry_t31() {
  RegistryEntry e;
  e.id = "T3.1";
  e.kind = EntryKind::theorem;
  e.summary = "squared-seminorm lower bound via the doubled numerical radius and the pair "
              "deviation";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", draw_pair_ready(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    PairCtx pc = resolve_pair(inst, t);
    if (std::isinf(pc.beta)) return not_applicable("no finite upper constant for T");
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    const double nrm = t.a_norm();
    const double w2 =
        a_numerical_radius(AOperator(inst.space, t.matrix() * t.matrix())).value;
    const double dev =
        AOperator(inst.space, (pc.beta * t.matrix() - t.sharp()).eval()).a_norm();

    double margin = std::numeric_limits<double>::infinity();
    std::ostringstream notes;
    for (double r : {1.0, 2.0}) {
      const double lhs =
          (std::pow(pc.alpha, 2.0 * r) + std::pow(pc.beta, 2.0 * r)) * nrm * nrm;
      const double rhs = 2.0 * std::pow(pc.beta, 2.0 * r) * w2 +
                         r * r * std::pow(pc.beta, 2.0 * r - 2.0) * dev * dev;
      const double slack = (rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
      margin = std::min(margin, slack);
      notes << "r = " << num(r) << " slack " << num(slack) << "; ";
    }
    for (double r : {0.5, 1.0, 2.0}) {
      const double lhs =
          (std::pow(pc.alpha, 2.0 * r) + std::pow(pc.beta, 2.0 * r)) * nrm * nrm;
      const double coeff = (r >= 1.0) ? std::pow(pc.beta, 2.0 * r - 2.0) : 1.0;
      const double rhs = 2.0 * std::pow(pc.beta, r) * w2 + coeff * dev * dev;
      const double slack = (rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
      notes << "tight variant r = " << num(r) << " slack " << num(slack)
            << (slack >= -kCheckTol ? "" : " (violated, logged only)") << "; ";
    }
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = margin >= -kCheckTol;
    v.margin = margin;
    v.notes = notes.str();
    return v;
  };
  return e;
}

RegistryEntry entry_t32() {
  RegistryEntry e;
  e.id = "T3.2";
  e.kind = EntryKind::theorem;
  e.summary = "numerical radius squared bounded by the mean of beta ||T||^2 and the "
              "doubled radius";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    AOperator t = (rng.uniform() < 0.25) ? gen::a_selfadjoint(inst.space, rng)
                                         : draw_pair_ready(inst.space, rng);
    inst.ops.emplace("T", t.matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    PairCtx pc = resolve_pair(inst, t);
    if (std::isinf(pc.beta)) return not_applicable("no finite upper constant for T");
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    const double nrm = t.a_norm();
    const double w1 = a_numerical_radius(t).value;
    const double w2 =
        a_numerical_radius(AOperator(inst.space, t.matrix() * t.matrix())).value;
    const double lhs = w1 * w1;
    const double rhs = 0.5 * (pc.beta * nrm * nrm + w2);
    const double slack = (rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = slack >= -kCheckTol;
    v.margin = slack;
    v.notes = "omega = " + num(w1) + ", omega of the square = " + num(w2) + ", bound " +
              num(rhs);
    return v;
  };
  return e;
}

RegistryEntry entry_t33() {
  RegistryEntry e;
  e.id = "T3.3";
  e.kind = EntryKind::theorem;
  e.summary = "alpha ||T||^2 bounded by the doubled radius plus a scaled adjoint deviation";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", draw_pair_ready(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    PairCtx pc = resolve_pair(inst, t);
    if (std::isinf(pc.beta)) return not_applicable("no finite upper constant for T");
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    const double nrm = t.a_norm();
    const double w2 =
        a_numerical_radius(AOperator(inst.space, t.matrix() * t.matrix())).value;
    const double lhs = pc.alpha * nrm * nrm;
    Matrix tsh = t.sharp();
    std::vector<Complex> lams = {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1),
                                 Complex(0.5, 0)};
    if (inst.lambda) lams.push_back(*inst.lambda);
    double margin = std::numeric_limits<double>::infinity();
    std::ostringstream notes;
    for (Complex lam : lams) {
      const double dev =
          AOperator(inst.space, (t.matrix() - lam * tsh).eval()).a_norm();
      const double denom = 1.0 + std::abs(lam) * pc.alpha;
      const double rhs = w2 + 2.0 * pc.beta * dev * dev / (denom * denom);
      const double slack = (rhs - lhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
      margin = std::min(margin, slack);
      notes << "lambda = " << cnum(lam) << " slack " << num(slack) << "; ";
    }
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = margin >= -kCheckTol;
    v.margin = margin;
    v.notes = notes.str();
    return v;
  };
  return e;
}

RegistryEntry entry_t34() {
  RegistryEntry e;
  e.id = "T3.4";
  e.kind = EntryKind::theorem;
  e.summary = "shifted-pair lower bound on the doubled radius (vacuous for normalized pairs)";
  e.generate = [](std::uint64_t seed, int, int dim_max) {
    Rng rng(seed);
    Instance inst = start(seed);
    inst.space = draw_space(rng, dim_max);
    inst.ops.emplace("T", draw_pair_ready(inst.space, rng).matrix());
    return inst;
  };
  e.check = [](const Instance& inst) {
    AOperator t = inst.op("T");
    if (auto g = gate_admissible(t, "T")) return not_applicable(*g);
    PairCtx pc = resolve_pair(inst, t);
    if (std::isinf(pc.beta)) return not_applicable("no finite upper constant for T");
    AlphaBetaCheck base = is_alpha_beta_a_normal(t, pc.alpha, pc.beta);
    if (!base.holds) return not_applicable("instance pair (alpha, beta) fails for T");

    const double nrm = t.a_norm();
    const double w2 =
        a_numerical_radius(AOperator(inst.space, t.matrix() * t.matrix())).value;
    std::vector<Complex> lams = {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1),
                                 Complex(0.5, 0)};
    if (inst.lambda && std::abs(*inst.lambda) > 0.0) lams.push_back(*inst.lambda);
    double margin = std::numeric_limits<double>::infinity();
    for (Complex lam : lams) {
      const double shifted = 1.0 / std::abs(lam) + pc.beta;
      const double lhs = (pc.alpha * pc.alpha - shifted * shifted) * std::pow(nrm, 4.0);
      const double slack = (w2 - lhs) / std::max({1.0, std::abs(lhs), w2});
      margin = std::min(margin, slack);
    }
    TheoremVerdict v;
    v.applicable = Applicability::yes;
    v.holds = margin >= -kCheckTol;
    v.margin = margin;
    v.notes = "left side is nonpositive whenever alpha <= 1 <= beta, so the bound is "
              "vacuous; min slack " +
              num(margin);
    return v;
  };
  return e;
}

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> v;
  v.push_back(entry_p11());
  v.push_back(entry_p111());
  v.push_back(entry_p112());
  v.push_back(entry_p113());
  v.push_back(entry_p114());
  v.push_back(entry_p115());
  v.push_back(entry_p116());
  v.push_back(entry_t11());
  v.push_back(entry_p21());
  v.push_back(entry_t21());
  v.push_back(entry_p22());
  v.push_back(entry_c21());
  v.push_back(entry_t221());
  v.push_back(entry_t222());
  v.push_back(entry_c22());
  v.push_back(entry_e22());
  v.push_back(entry_l21());
  v.push_back(entry_p23());
  v.push_back(entry_p24());
  v.push_back(entry_p25());
  v.push_back(entry_e232());
  v.push_back(entry_t23());
  v.push_back(entry_t24());
  v.push_back(entry_q2());
  v.push_back(entry_l22());
  v.push_back(entry_p26());
  v.push_back(entry_p27());
  v.push_back(entry_t25());
  v.push_back(entry_l31());
  v.push_back(entry_t31());
  v.push_back(entry_t32());
  v.push_back(entry_t33());
  v.push_back(entry_t34());
  return v;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = build_registry();
  return entries;
}

}  // namespace shops
