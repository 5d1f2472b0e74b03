#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "shops/harness.hpp"
#include "shops/space.hpp"

using namespace shops;
using namespace shops::test;

namespace {

/// Worst roundoff amplification for identities routed through pinv(A).
double cond_scale(const SemiSpace& s) {
  return std::max(1.0, linalg::spectral_norm(s.pinv_a()) * linalg::spectral_norm(s.a()));
}

}  // namespace

TEST_CASE("construction validates and caches the spectral structure") {
  SUBCASE("full-rank diagonal") {
    auto s = SemiSpace::make(diag({1.0, 2.0}));
    CHECK(s->rank() == 2);
    CHECK(s->is_definite());
    CHECK(rel_err(s->range_projector(), Matrix::Identity(2, 2)) < 1e-12);
    CHECK(rel_err(s->sqrt_a(), diag({1.0, std::sqrt(2.0)})) < 1e-12);
  }
  SUBCASE("rank-deficient diagonal") {
    auto s = SemiSpace::make(diag({1.0, 0.0}));
    CHECK(s->rank() == 1);
    CHECK_FALSE(s->is_definite());
    CHECK(rel_err(s->range_projector(), diag({1.0, 0.0})) < 1e-12);
    CHECK(rel_err(s->pinv_a(), diag({1.0, 0.0})) < 1e-12);
  }
  SUBCASE("indefinite input is rejected with a witness") {
    try {
      SemiSpace::make(mat({{1.0, 1.0}, {1.0, -1.0}}));
      FAIL("expected not_psd");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_psd);
      REQUIRE(e.witness().has_value());
      const Vector& w = *e.witness();
      const Complex q = (w.adjoint() * mat({{1.0, 1.0}, {1.0, -1.0}}) * w)(0);
      CHECK(q.real() < 0.0);
    }
  }
  SUBCASE("non-square input is rejected") {
    Matrix m(2, 3);
    m.setZero();
    CHECK_THROWS_AS(SemiSpace::make(m), Error);
  }
  SUBCASE("cache identities on random spaces") {
    Rng rng(31);
    for (int i = 0; i < 20; ++i) {
      const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(5));
      const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng.below(n));
      auto s = SemiSpace::make(random_psd(n, r, rng, 1e-2, 1e2));
      CHECK(s->rank() == r);
      CHECK(rel_err(Matrix(s->sqrt_a() * s->sqrt_a()), s->a()) < 1e-9);
      const Matrix& p = s->range_projector();
      CHECK(rel_err(Matrix(p * p), p) < 1e-9);
      CHECK((p - p.adjoint()).norm() < 1e-9 * std::max(1.0, p.norm()));
      CHECK(rel_err(Matrix(s->a() * s->pinv_a()), p) < 1e-9 * cond_scale(*s));
    }
  }
}

TEST_CASE("semi-inner product matches its defining forms") {
  auto s = SemiSpace::make(diag({1.0, 2.0}));
  Vector e2 = vec({0.0, 1.0});
  CHECK(std::abs(s->inner(e2, e2) - Complex(2.0, 0.0)) < 1e-14);

  SUBCASE("null directions contribute nothing") {
    auto sd = SemiSpace::make(diag({1.0, 0.0}));
    Vector null_dir = vec({0.0, 1.0});
    Vector any = vec({1.0, Complex(2.0, 1.0)});
    CHECK(std::abs(sd->inner(null_dir, any)) < 1e-14);
    CHECK(sd->seminorm(null_dir) == doctest::Approx(0.0));
  }
  SUBCASE("agrees with the square-root factorization") {
    Rng rng(37);
    for (int i = 0; i < 25; ++i) {
      auto sp = tame_space(4, 3, rng);
      Vector u = rng.cgaussian(4);
      Vector v = rng.cgaussian(4);
      const Complex lhs = sp->inner(u, v);
      const Complex rhs = ((sp->sqrt_a() * v).adjoint() * (sp->sqrt_a() * u))(0);
      CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
      const Complex self = sp->inner(u, u);
      CHECK(std::abs(self.imag()) <= 1e-12 * u.squaredNorm() * linalg::spectral_norm(sp->a()));
    }
  }
  SUBCASE("dimension mismatch is an error") {
    Vector u = vec({1.0, 0.0, 0.0});
    CHECK_THROWS_AS(s->inner(u, u), Error);
  }
}

TEST_CASE("the reduced adjoint matches the worked 2x2 example") {
  Fixture21 fx;
  AOperator t = fx.op();
  REQUIRE(t.admits_a_adjoint());
  CHECK(rel_err(t.sharp(), mat({{1.0, 0.0}, {1.0, 1.0}})) < 1e-12);
}

TEST_CASE("sharp of the identity is the range projector") {
  Rng rng(41);
  auto sp = tame_space(4, 2, rng);
  AOperator id(sp, Matrix::Identity(4, 4));
  CHECK(rel_err(id.sharp(), sp->range_projector()) < 1e-10);
}

TEST_CASE("sharp satisfies its defining equation and range constraint") {
  Rng rng(43);
  for (int i = 0; i < 25; ++i) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(4));
    const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng.below(n));
    auto sp = tame_space(n, r, rng);
    AOperator t = gen::admissible(sp, rng);
    const Matrix& sh = t.sharp();
    CHECK(rel_err(Matrix(sp->a() * sh), Matrix(t.matrix().adjoint() * sp->a())) < 1e-10);
    CHECK(rel_err(Matrix(sp->range_projector() * sh), sh) < 1e-10);
    // Triple application reproduces the first adjoint.
    AOperator s1 = t.sharp_operator();
    AOperator s2 = s1.sharp_operator();
    CHECK(rel_err(s2.sharp(), s1.matrix()) < 1e-9);
  }
}

TEST_CASE("operators violating the Douglas condition have no adjoint") {
  auto sp = SemiSpace::make(diag({1.0, 0.0}));
  AOperator t(sp, mat({{0.0, 1.0}, {0.0, 0.0}}));
  CHECK_FALSE(t.admits_a_adjoint());
  CHECK(t.adjoint_defect() > 0.1);
  CHECK_THROWS_AS(t.sharp(), Error);
  try {
    t.sharp();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_a_adjoint);
  }
}

TEST_CASE("operator seminorm: closed form, identity, and sampling oracle") {
  Fixture21 fx;
  AOperator t = fx.op();
  CHECK(t.a_norm() == doctest::Approx(std::sqrt(2.0 + std::sqrt(3.0))).epsilon(1e-12));

  Rng rng(47);
  auto sp = tame_space(4, 3, rng);
  AOperator id(sp, Matrix::Identity(4, 4));
  CHECK(id.a_norm() == doctest::Approx(1.0).epsilon(1e-12));

  // Sampled suprema over unit-seminorm vectors never exceed the reported value.
  for (int i = 0; i < 5; ++i) {
    AOperator op = gen::admissible(sp, rng);
    const double norm = op.a_norm();
    double sampled = 0.0;
    for (int k = 0; k < 2000; ++k) {
      Vector u = rng.cgaussian(4);
      const double nu = sp->seminorm(u);
      if (nu < 1e-8) continue;
      sampled = std::max(sampled, sp->seminorm(op.matrix() * u) / nu);
    }
    CHECK(sampled <= norm + 1e-9);
    CHECK(sampled > 0.5 * norm);
  }
}

TEST_CASE("unbounded directions make the seminorm infinite (error form)") {
  auto sp = SemiSpace::make(diag({1.0, 0.0}));
  AOperator t(sp, mat({{0.0, 1.0}, {0.0, 0.0}}));
  CHECK_FALSE(t.is_a_bounded());
  CHECK_THROWS_AS(t.a_norm(), Error);
  try {
    t.a_norm();
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_bounded);
  }
  CHECK_THROWS_AS(t.compression(), Error);
}

TEST_CASE("compression carries the metric structure") {
  Fixture21 fx;
  AOperator t = fx.op();
  CHECK(rel_err(t.compression(), mat({{1.0, std::sqrt(2.0)}, {0.0, 1.0}})) < 1e-12);

  Rng rng(53);
  auto sp = tame_space(4, 2, rng);
  AOperator id(sp, Matrix::Identity(4, 4));
  CHECK(rel_err(id.compression(), sp->range_projector()) < 1e-10);

  for (int i = 0; i < 15; ++i) {
    AOperator a = gen::admissible(sp, rng);
    AOperator b = gen::admissible(sp, rng);
    const Matrix& p = sp->range_projector();
    const Matrix& ca = a.compression();
    // The compression lives on range(A).
    CHECK((ca * (Matrix::Identity(4, 4) - p)).norm() < 1e-9 * std::max(1.0, ca.norm()));
    CHECK(((Matrix::Identity(4, 4) - p) * ca).norm() < 1e-9 * std::max(1.0, ca.norm()));
    // Products compress multiplicatively.
    AOperator ab(sp, Matrix(a.matrix() * b.matrix()));
    CHECK(rel_err(ab.compression(), Matrix(ca * b.compression())) < 1e-9);
    // Norm faithfulness through the fourth power.
    Matrix pw = a.matrix();
    Matrix cpw = ca;
    for (int n = 1; n <= 4; ++n) {
      AOperator an(sp, pw);
      CHECK(std::abs(an.a_norm() - linalg::spectral_norm(cpw)) <
            1e-8 * std::max(1.0, an.a_norm()));
      pw = pw * a.matrix();
      cpw = cpw * ca;
    }
  }
}

TEST_CASE("adjoint identities hold on random instances") {
  Rng rng(59);
  SUBCASE("double adjoint compresses to P T P") {
    for (int i = 0; i < 25; ++i) {
      const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(4));
      const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng.below(n));
      auto sp = tame_space(n, r, rng);
      AOperator t = gen::admissible(sp, rng);
      const Matrix& p = sp->range_projector();
      Matrix expected = p * t.matrix() * p;
      CHECK(rel_err(t.sharp_operator().sharp(), expected) < 1e-9);
    }
  }
  SUBCASE("product rule (TS)# = S# T#") {
    for (int i = 0; i < 25; ++i) {
      auto sp = tame_space(4, 3, rng);
      AOperator t = gen::admissible(sp, rng);
      AOperator s = gen::admissible(sp, rng);
      AOperator ts(sp, Matrix(t.matrix() * s.matrix()));
      REQUIRE(ts.admits_a_adjoint());
      CHECK(rel_err(ts.sharp(), Matrix(s.sharp() * t.sharp())) < 1e-9);
    }
  }
  SUBCASE("A-selfadjointness of the gram operators") {
    for (int i = 0; i < 25; ++i) {
      auto sp = tame_space(4, 2, rng);
      AOperator t = gen::admissible(sp, rng);
      Matrix left = sp->a() * (t.sharp() * t.matrix());
      Matrix right = sp->a() * (t.matrix() * t.sharp());
      CHECK((left - left.adjoint()).norm() < 1e-10 * std::max(1.0, left.norm()));
      CHECK((right - right.adjoint()).norm() < 1e-10 * std::max(1.0, right.norm()));
    }
  }
  SUBCASE("seminorm symmetry across the adjoint") {
    for (int i = 0; i < 25; ++i) {
      auto sp = tame_space(4, 3, rng);
      AOperator t = gen::admissible(sp, rng);
      AOperator sh = t.sharp_operator();
      const double nt = t.a_norm();
      CHECK(std::abs(nt - sh.a_norm()) < 1e-8 * std::max(1.0, nt));
      AOperator sht(sp, Matrix(sh.matrix() * t.matrix()));
      AOperator tsh(sp, Matrix(t.matrix() * sh.matrix()));
      CHECK(std::abs(nt * nt - sht.a_norm()) < 1e-8 * std::max(1.0, nt * nt));
      CHECK(std::abs(nt * nt - tsh.a_norm()) < 1e-8 * std::max(1.0, nt * nt));
    }
  }
  SUBCASE("all A-adjoints share one seminorm") {
    for (int i = 0; i < 25; ++i) {
      auto sp = tame_space(4, 2, rng);
      AOperator t = gen::admissible(sp, rng);
      Matrix ip = Matrix::Identity(4, 4) - sp->range_projector();
      Matrix alt = t.sharp() + ip * rng.cgaussian(4, 4);
      // alt still satisfies A alt = T^* A, so it is an A-adjoint of T.
      CHECK(rel_err(Matrix(sp->a() * alt), Matrix(t.matrix().adjoint() * sp->a())) < 1e-9);
      AOperator alt_op(sp, alt);
      CHECK(std::abs(alt_op.a_norm() - t.sharp_operator().a_norm()) <
            1e-9 * std::max(1.0, t.sharp_operator().a_norm()));
    }
  }
}

TEST_CASE("identities stay within conditioning loss on ill-conditioned spaces") {
  for (int i = 0; i < 15; ++i) {
    auto sp = gen_space(5, 3, 1000 + static_cast<std::uint64_t>(i));
    Rng rng(2000 + static_cast<std::uint64_t>(i));
    AOperator t = gen::admissible(sp, rng);
    AOperator s = gen::admissible(sp, rng);
    const double kappa = cond_scale(*sp);
    AOperator ts(sp, Matrix(t.matrix() * s.matrix()));
    CHECK(rel_err(ts.sharp(), Matrix(s.sharp() * t.sharp())) < 1e-9 * kappa);
    const Matrix& p = sp->range_projector();
    CHECK(rel_err(t.sharp_operator().sharp(), Matrix(p * t.matrix() * p)) < 1e-9 * kappa);
  }
}

TEST_CASE("the zero space degenerates every operator") {
  auto sp = SemiSpace::make(Matrix::Zero(3, 3));
  CHECK(sp->rank() == 0);
  Rng rng(61);
  AOperator t(sp, rng.cgaussian(3, 3));
  CHECK(t.admits_a_adjoint());
  CHECK(t.is_a_bounded());
  CHECK(t.a_norm() == doctest::Approx(0.0));
  CHECK(t.sharp().norm() == doctest::Approx(0.0));
  CHECK(sp->seminorm(vec({1.0, 2.0, 3.0})) == doctest::Approx(0.0));
}
