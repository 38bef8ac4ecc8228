#include <doctest.h>

#include <cmath>

#include "pseudospline/genfun.hpp"
#include "pseudospline/schemes.hpp"
#include "printers.hpp"

using namespace pseudospline;

TEST_CASE("U_{m-1}(sqrt(1-y)) = m (1-y)^{(1-eps)/2} S_m(y), checked against sin(m t) / sin(t)") {
  for (int m = 2; m <= 12; ++m) {
    const UniPoly s = chebyshev_sqrt_series(m);
    const int eps = m % 2;
    CHECK(s.degree() == (m - 1 - (1 - eps)) / 2);
    for (double y : {0.05, 0.3, 0.62, 0.9}) {
      const double t = std::acos(std::sqrt(1.0 - y));
      const double u = std::sin(m * t) / std::sin(t);
      const double rhs = m * std::pow(1.0 - y, (1.0 - eps) / 2.0) * s.eval(y);
      CHECK(rhs == doctest::Approx(u).epsilon(1e-12));
    }
  }
}

TEST_CASE("P_m for small arities") {
  CHECK(p_poly(2).is_zero());
  CHECK(p_poly(3) == UniPoly({Rational(0), Rational(4, 3)}));
  CHECK(p_poly(4) == UniPoly({Rational(0), Rational(2)}));
  CHECK(p_poly(5) == UniPoly({Rational(0), Rational(4), Rational(-16, 5)}));
}

TEST_CASE("P_m matches the product formula over (2j - eps)^2 - m^2") {
  for (int m = 2; m <= 11; ++m) {
    const int eps = m % 2;
    const int mp = (m - eps) / 2;
    std::vector<Rational> c{Rational(0)};
    Rational prod(1);
    Rational fact(1);  // (2k+1)!
    for (int k = 1; k <= mp + eps - 1; ++k) {
      prod *= Rational((2 * k - eps) * (2 * k - eps) - m * m);
      fact *= Rational((2 * k) * (2 * k + 1));
      c.push_back(-prod / fact);
    }
    CHECK(p_poly(m) == UniPoly(c));
  }
}

TEST_CASE("binary, ternary and quaternary coefficients in closed form") {
  for (int n = 1; n <= 9; ++n) {
    const auto g2 = taylor_g(2, n, 4).g;
    const auto g3 = taylor_g(3, n, 4).g;
    const auto g4 = taylor_g(4, n, 4).g;
    for (int k = 0; k <= 4; ++k) {
      CHECK(g2[k] == binomial(Rational(n - 1, 2) + Rational(k), k));
      CHECK(g3[k] == binomial(Rational(n + k), k) * pow(Rational(4, 3), k));
      Rational q(0);
      for (int j = 0; j <= k; ++j) {
        q += binomial(Rational(j) + Rational(n - 1, 2), j) * binomial(Rational(n + k - j), k - j) * pow(Rational(2), k - j);
      }
      CHECK(g4[k] == q);
    }
  }
}

TEST_CASE("l' = 1 central coefficients") {
  for (int m = 2; m <= 9; ++m) {
    for (int n = 1; n <= 12; ++n) {
      const LaurentPoly b = delta_substitute(taylor_g(m, n, 1).g);
      const Rational k = Rational((m * m - 1) * (n + 1));
      CHECK(b.coeff(0) == Rational(1) + k / Rational(12));
      CHECK(b.coeff(1) == -k / Rational(24));
      CHECK(b.coeff(-1) == b.coeff(1));
    }
  }
}

TEST_CASE("generating function coefficients are positive") {
  for (int m = 2; m <= 9; ++m) {
    for (int n = 0; n <= 10; ++n) {
      for (const auto& c : taylor_g(m, n, 8).g) {
        CHECK(c.sign() > 0);
      }
    }
  }
}

TEST_CASE("delta substitution has support [-l', l'], odd symmetry and b(1) = g_0") {
  CHECK(delta_symbol() == LaurentPoly(-1, {Rational(-1, 4), Rational(1, 2), Rational(-1, 4)}));
  for (int lp = 0; lp <= 6; ++lp) {
    const auto g = taylor_g(5, 4, lp).g;
    const LaurentPoly b = delta_substitute(g);
    CHECK(b.low() == -lp);
    CHECK(b.high() == lp);
    CHECK(b.sum() == g[0]);
    CHECK(b == b.reversed());
  }
}

TEST_CASE("dual variant divides by sqrt(1 - y)") {
  // G / sqrt(1-y) = G * (1 + y/2 + 3y^2/8 + ...)
  const auto g = taylor_g(3, 3, 3).g;
  const auto d = taylor_g(3, 3, 3, GenFunVariant::dual_conjecture).g;
  for (int k = 0; k <= 3; ++k) {
    Rational want(0);
    for (int j = 0; j <= k; ++j) {
      want += g[j] * binomial(Rational(-1, 2), k - j) * pow(Rational(-1), k - j);
    }
    CHECK(d[k] == want);
  }
}
