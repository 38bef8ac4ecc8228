#include "pseudospline/genfun.hpp"

#include <stdexcept>

namespace pseudospline {

namespace {

Rational factorial(int k) {
  Rational out(1);
  for (int i = 2; i <= k; ++i) {
    out *= Rational(i);
  }
  return out;
}

// (1 - y)^alpha modulo y^(order + 1).
UniPoly binomial_series(const Rational& alpha, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order + 1));
  for (int k = 0; k <= order; ++k) {
    c[static_cast<std::size_t>(k)] = binomial(alpha, k) * (k % 2 == 0 ? Rational(1) : Rational(-1));
  }
  return UniPoly(std::move(c));
}

}  // namespace

UniPoly chebyshev_u(int d) {
  if (d < 0) {
    throw std::invalid_argument("Chebyshev degree must be nonnegative");
  }
  UniPoly prev = UniPoly::constant(Rational(1));
  if (d == 0) {
    return prev;
  }
  const UniPoly two_x = UniPoly::monomial(1, Rational(2));
  UniPoly cur = two_x;
  for (int k = 2; k <= d; ++k) {
    UniPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly chebyshev_sqrt_series(int m) {
  if (m < 2) {
    throw std::invalid_argument("arity must be at least 2");
  }
  const int eps = m % 2;
  const int mprime = m / 2;
  std::vector<Rational> c;
  Rational prod(1);
  for (int k = 0; k <= mprime - 1 + eps; ++k) {
    if (k > 0) {
      const int t = 2 * k - eps;
      prod *= Rational(t * t - m * m);
    }
    c.push_back(prod / factorial(2 * k + 1));
  }
  return UniPoly(std::move(c));
}

UniPoly p_poly(int m) { return UniPoly::constant(Rational(1)) - chebyshev_sqrt_series(m); }

GenFunExpansion taylor_g(int m, int n, int lprime, GenFunVariant variant) {
  if (m < 2) {
    throw std::invalid_argument("arity must be at least 2");
  }
  if (n < 0 || lprime < 0) {
    throw std::invalid_argument("n and l' must be nonnegative");
  }
  GenFunExpansion out;
  out.m = m;
  out.epsilon = m % 2;
  out.mprime = m / 2;
  out.n = n;
  out.lprime = lprime;
  out.variant = variant;
  out.s_poly = chebyshev_sqrt_series(m);
  out.p_poly = UniPoly::constant(Rational(1)) - out.s_poly;

  const auto order = static_cast<std::size_t>(lprime);
  // 1 / S^{n+1} = sum_k C(n+k, k) P^k; P(0) = 0 so k <= l' suffices.
  const UniPoly p = out.p_poly.truncated(order);
  UniPoly series = UniPoly::constant(Rational(1));
  UniPoly p_power = UniPoly::constant(Rational(1));
  for (int k = 1; k <= lprime; ++k) {
    p_power = mul_truncated(p_power, p, order);
    if (p_power.is_zero()) {
      break;
    }
    series += binomial(Rational(n + k), k) * p_power;
  }

  Rational alpha = Rational((n + 1) * (out.epsilon - 1), 2);
  if (variant == GenFunVariant::dual_conjecture) {
    alpha -= Rational(1, 2);
  }
  series = mul_truncated(series, binomial_series(alpha, lprime), order);

  out.g.resize(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    out.g[k] = series.coeff(k);
  }
  return out;
}

LaurentPoly delta_symbol() {
  return LaurentPoly(-1, {Rational(-1, 4), Rational(1, 2), Rational(-1, 4)});
}

LaurentPoly delta_substitute(const std::vector<Rational>& g) {
  // Horner in delta.
  const LaurentPoly d = delta_symbol();
  LaurentPoly acc;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    acc = acc * d + LaurentPoly::constant(*it);
  }
  return acc;
}

}  // namespace pseudospline
