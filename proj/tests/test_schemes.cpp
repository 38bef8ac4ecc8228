#include <doctest.h>

#include "pseudospline/schemes.hpp"
#include "printers.hpp"

using namespace pseudospline;

namespace {

LaurentPoly poly(long offset, std::initializer_list<Rational> c) { return LaurentPoly(offset, c); }

}  // namespace

TEST_CASE("ternary four-point example symbols") {
  const LaurentPoly s3 = sigma(3);
  const LaurentPoly primal = Rational(3) * pow(s3, 4) * poly(0, {Rational(-4, 3), Rational(11, 3), Rational(-4, 3)});
  const SchemeSpec p = make_pseudo_spline(3, 3, 3);
  CHECK(equal_up_to_shift(p.a, primal));
  CHECK(p.b == poly(-1, {Rational(-4, 3), Rational(11, 3), Rational(-4, 3)}));
  CHECK(p.tau == Rational(4));
  CHECK(p.r == 3);

  const LaurentPoly dual = Rational(-1, 16) * pow(s3, 4) * poly(0, {Rational(1), Rational(1)}) *
                           poly(0, {Rational(35), Rational(-94), Rational(35)});
  CHECK(equal_up_to_shift(make_dd_dual(3, 1).a, dual));
}

TEST_CASE("reproduction system for m = n = l = 3") {
  const ReproductionSystem at0 = reproduction_system(3, 3, 3, Rational(0));
  const std::vector<std::vector<Rational>> A{{3, 0, 0, 0}, {12, 3, 0, 0}, {44, 24, 3, 0}, {144, 132, 36, 3}};
  CHECK(at0.A == A);
  CHECK(at0.d == std::vector<Rational>{1, -4, Rational(52, 3), -80});

  // d(tau) = [1, tau - 4, tau^2 - 9 tau + 52/3, tau^3 - 15 tau^2 + 66 tau - 80]
  for (int t = -2; t <= 6; ++t) {
    const Rational tau(t);
    const ReproductionSystem s = reproduction_system(3, 3, 3, tau);
    CHECK(s.d[1] == tau - Rational(4));
    CHECK(s.d[2] == tau * tau - Rational(9) * tau + Rational(52, 3));
    CHECK(s.d[3] == tau * tau * tau - Rational(15) * tau * tau + Rational(66) * tau - Rational(80));
  }
  const ReproductionSystem at4 = reproduction_system(3, 3, 3, Rational(4));
  const LaurentPoly b = make_pseudo_spline(3, 3, 3).b.shifted(0);
  // tau = 4 corresponds to b centered at 0 in the canonical placement.
  for (int k = 0; k <= 3; ++k) {
    CHECK(at4.d[k] == b.derivative_at_one(k));
  }
}

TEST_CASE("binary pseudo-splines and B-splines") {
  CHECK(make_pseudo_spline(2, 1, 1).a == poly(0, {Rational(1, 2), Rational(1), Rational(1, 2)}));
  const SchemeSpec four_point = make_pseudo_spline(2, 3, 3);
  CHECK(equal_up_to_shift(four_point.a, poly(0, {Rational(-1, 16), 0, Rational(9, 16), 1, Rational(9, 16), 0,
                                                 Rational(-1, 16)})));
  // Chaikin: n = 2, l = 1
  CHECK(equal_up_to_shift(make_pseudo_spline(2, 2, 1).a,
                          poly(0, {Rational(1, 4), Rational(3, 4), Rational(3, 4), Rational(1, 4)})));
  for (int m = 2; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      const SchemeSpec s = make_bspline(m, n);
      CHECK(s.a == Rational(m) * pow(sigma(m), n + 1));
      CHECK(s.b == LaurentPoly::constant(Rational(1)));
      CHECK(s.tau == Rational((m - 1) * (n + 1), 2));
    }
  }
}

TEST_CASE("canonical placement of pseudo-spline masks") {
  for (int m = 2; m <= 5; ++m) {
    for (int n = 1; n <= 6; ++n) {
      for (int l = 1; l <= 7; l += 2) {
        const SchemeSpec s = make_pseudo_spline(m, n, l);
        const int lp = (l - 1) / 2;
        CHECK(s.b.low() == -lp);
        CHECK(s.b.high() == lp);
        CHECK(s.a.low() == -lp);
        CHECK(s.a.high() == (m - 1) * (n + 1) + lp);
        CHECK(s.tau == Rational((m - 1) * (n + 1), 2));
        CHECK(s.a.sum() == Rational(m));
      }
    }
  }
}

TEST_CASE("invalid parameters are rejected with a reason") {
  CHECK_THROWS_WITH_AS(make_pseudo_spline(2, 2, 4), "l must be odd", std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_interpolatory_lian(4, 1), "arity must be odd", std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_dd_dual_conjecture(2, 2), "n must be odd", std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_tension(2, Rational(3, 2)), "omega must be in [0, 1]", std::invalid_argument);
  CHECK_THROWS_AS(make_pseudo_spline(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_pseudo_spline(kMaxArity + 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_pseudo_spline(2, kMaxN + 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_dd_primal(2, -1), std::invalid_argument);
}

TEST_CASE("analysis of pseudo-spline masks") {
  for (int m = 2; m <= 5; ++m) {
    for (int n = 1; n <= 7; ++n) {
      for (int l = 1; l <= n; l += 2) {
        const SchemeSpec s = make_pseudo_spline(m, n, l);
        const SchemeAnalysis a = analyze(s.a, m);
        CHECK(a.generation_degree == n);
        CHECK(a.reproduction_degree == l);
        CHECK(a.convergence.passes);
        CHECK(a.tau == s.tau);
        CHECK(a.symmetry.kind != SymmetryKind::none);
        const long N = s.a.high() - s.a.low();
        CHECK(a.support_width == Rational(N, m - 1));
      }
    }
  }
}

TEST_CASE("shift law: z^k a moves tau by k and nothing else") {
  const LaurentPoly a = make_pseudo_spline(3, 4, 3).a;
  const SchemeAnalysis base = analyze(a, 3);
  for (long k : {-5L, -1L, 2L, 7L}) {
    const SchemeAnalysis s = analyze(a.shifted(k), 3);
    CHECK(s.tau == base.tau + Rational(k));
    CHECK(s.support_low == base.support_low + k);
    CHECK(s.support_width == base.support_width);
    CHECK(s.generation_degree == base.generation_degree);
    CHECK(s.reproduction_degree == base.reproduction_degree);
    CHECK(s.convergence.passes == base.convergence.passes);
    CHECK(s.symmetry.kind == base.symmetry.kind);
  }
}

TEST_CASE("non-convergent masks are reported, not thrown") {
  const ConvergenceCertificate bad_sum = convergence(poly(0, {Rational(1), Rational(1)}), 3);
  CHECK_FALSE(bad_sum.passes);
  REQUIRE(bad_sum.witness.has_value());
  CHECK(*bad_sum.witness == 0);
  // Sums to 2 but a(-1) != 0.
  const ConvergenceCertificate bad_root = convergence(poly(0, {Rational(1), Rational(1, 2), Rational(1, 2)}), 2);
  CHECK_FALSE(bad_root.passes);
  REQUIRE(bad_root.witness.has_value());
  CHECK(*bad_root.witness == 1);
  CHECK(convergence(make_pseudo_spline(4, 2, 3).a, 4).passes);
}

TEST_CASE("family equivalences up to a monomial shift") {
  for (int m = 2; m <= 4; ++m) {
    for (int lp = 0; lp <= 2; ++lp) {
      CHECK(equal_up_to_shift(make_dd_primal(m, lp).a, make_pseudo_spline(m, 2 * lp + 1, 2 * lp + 1).a));
      CHECK(analyze(make_dd_primal(m, lp).a, m).interpolatory);
    }
  }
  for (int lp = 1; lp <= 2; ++lp) {
    CHECK(equal_up_to_shift(make_interpolatory_lian(3, lp).a, make_pseudo_spline(3, 2 * lp, 2 * lp + 1).a));
  }
  for (int m = 2; m <= 3; ++m) {
    for (int lp = 1; lp <= 2; ++lp) {
      CHECK(equal_up_to_shift(make_dd_dual_conjecture(m, 2 * lp + 1).a, make_dd_dual(m, lp).a));
    }
  }
}

TEST_CASE("interpolatory families place a_0 = 1 and have tau = 0") {
  for (int m = 2; m <= 5; ++m) {
    for (int lp = 0; lp <= 3; ++lp) {
      const SchemeSpec s = make_dd_primal(m, lp);
      CHECK(s.a.coeff(0) == Rational(1));
      CHECK(s.tau == Rational(0));
      CHECK(symmetry(s.a).center == 0);
    }
  }
  const SchemeSpec lian = make_interpolatory_lian(5, 2);
  CHECK(lian.a.low() == -(5 * 2 + 2));
  CHECK(lian.a.high() == 5 * 2 + 2);
  CHECK(analyze(lian.a, 5).interpolatory);
}

TEST_CASE("tension blend matches the centered b_omega formula") {
  for (int m = 2; m <= 6; ++m) {
    for (const Rational& w : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
      const SchemeSpec s = make_tension(m, w);
      CHECK(s.a == (Rational(1) - w) * make_dd_primal(m, 0).a + w * make_dd_primal(m, 1).a);
      // (1 - w) + w (1 + ... + z^{m-1})^2 / (m^2 z^{m-1}) [1 + (m^2-1)/3 - (m^2-1)/6 (z^-1 + z)]
      const Rational k(m * m - 1);
      const LaurentPoly bracket = poly(-1, {-k / Rational(6), Rational(1) + k / Rational(3), -k / Rational(6)});
      const LaurentPoly bw = LaurentPoly::constant(Rational(1) - w) +
                             w * (pow(sigma(m), 2) * bracket).shifted(-(m - 1));
      CHECK(equal_up_to_shift(s.b, bw));
      CHECK(s.r == 1);
      CHECK(s.tau == Rational(0));
    }
  }
}

TEST_CASE("custom masks recover r and b by factoring sigma") {
  const SchemeSpec s = make_custom(3, make_pseudo_spline(3, 4, 3).a);
  CHECK(s.r == 4);
  CHECK(equal_up_to_shift(s.b, make_pseudo_spline(3, 4, 3).b));
  CHECK(sigma_power(make_bspline(2, 5).a, 2) == 6);
}
