#include "pseudospline/schemes.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "pseudospline/genfun.hpp"

namespace pseudospline {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::pseudo, "pseudo"},
    {Family::bspline, "bspline"},
    {Family::dd_primal, "dd-primal"},
    {Family::dd_dual, "dd-dual"},
    {Family::dd_dual_conjecture, "dd-dual-conjecture"},
    {Family::lian, "lian"},
    {Family::tension, "tension"},
    {Family::custom, "custom"},
}};

void check_arity(int m) {
  if (m < 2 || m > kMaxArity) {
    throw std::invalid_argument("arity must be in [2, " + std::to_string(kMaxArity) + "]");
  }
}

void check_n(int n) {
  if (n < 0 || n > kMaxN) {
    throw std::invalid_argument("n must be in [0, " + std::to_string(kMaxN) + "]");
  }
}

void check_lprime(int lprime, int lowest = 0) {
  if (lprime < lowest || lprime > kMaxLprime) {
    throw std::invalid_argument("l' must be in [" + std::to_string(lowest) + ", " +
                                std::to_string(kMaxLprime) + "]");
  }
}

Rational shift_of(const LaurentPoly& a, int m) { return a.derivative_at_one(1) / Rational(m); }

// Fills r, b and tau for a mask whose sigma-factorization is not known in advance.
SchemeSpec factored(Family family, int m, const LaurentPoly& a) {
  SchemeSpec s;
  s.family = family;
  s.m = m;
  s.a = a;
  const int e = sigma_power(a, m);
  s.r = e - 1;
  LaurentPoly denom = pow(sigma(m), static_cast<unsigned>(e)) * Rational(m);
  s.b = *divide_exact(a, denom);
  s.tau = shift_of(a, m);
  return s;
}

// Lagrange basis polynomial on the nodes lo..hi, evaluated at x.
Rational lagrange(int j, int lo, int hi, const Rational& x) {
  Rational out(1);
  for (int k = lo; k <= hi; ++k) {
    if (k != j) {
      out *= (x - Rational(k)) / Rational(j - k);
    }
  }
  return out;
}

Rational int_factorial(int k) {
  Rational out(1);
  for (int i = 2; i <= k; ++i) {
    out *= Rational(i);
  }
  return out;
}

// Cyclotomic polynomial Phi_d by exact division of z^d - 1.
UniPoly cyclotomic(int d) {
  UniPoly p = UniPoly::monomial(static_cast<std::size_t>(d)) - UniPoly::constant(Rational(1));
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) {
      p = divmod(p, cyclotomic(e)).quotient;
    }
  }
  return p;
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) {
      return std::string(name);
    }
  }
  return "custom";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames) {
    if (n == name) {
      return fam;
    }
  }
  return std::nullopt;
}

LaurentPoly sigma(int m) {
  if (m < 1) {
    throw std::invalid_argument("arity must be positive");
  }
  return LaurentPoly(0, std::vector<Rational>(static_cast<std::size_t>(m), Rational(1, m)));
}

int sigma_power(const LaurentPoly& a, int m) {
  if (a.is_zero()) {
    throw std::domain_error("sigma power of the zero polynomial");
  }
  const LaurentPoly s = sigma(m);
  LaurentPoly cur = a;
  int e = 0;
  while (auto q = divide_exact(cur, s)) {
    cur = std::move(*q);
    ++e;
  }
  return e;
}

SchemeSpec make_pseudo_spline(int m, int n, int l) {
  check_arity(m);
  check_n(n);
  if (l < 1 || l % 2 == 0) {
    throw std::invalid_argument("l must be odd");
  }
  const int lprime = (l - 1) / 2;
  check_lprime(lprime);
  SchemeSpec s;
  s.family = Family::pseudo;
  s.m = m;
  s.n = n;
  s.l = l;
  s.r = n;
  s.b = delta_substitute(taylor_g(m, n, lprime).g);
  s.a = pow(sigma(m), static_cast<unsigned>(n + 1)) * s.b * Rational(m);
  s.tau = shift_of(s.a, m);
  return s;
}

SchemeSpec make_bspline(int m, int n) {
  check_arity(m);
  check_n(n);
  SchemeSpec s;
  s.family = Family::bspline;
  s.m = m;
  s.n = n;
  s.l = 1;
  s.r = n;
  s.b = LaurentPoly::constant(Rational(1));
  s.a = pow(sigma(m), static_cast<unsigned>(n + 1)) * Rational(m);
  s.tau = shift_of(s.a, m);
  return s;
}

SchemeSpec make_dd_primal(int m, int lprime) {
  check_arity(m);
  check_lprime(lprime);
  LaurentPoly a = LaurentPoly::constant(Rational(1));
  for (int s = 1; s < m; ++s) {
    const Rational x(s, m);
    for (int j = -lprime; j <= lprime + 1; ++j) {
      a += LaurentPoly::monomial(s - static_cast<long>(m) * j, lagrange(j, -lprime, lprime + 1, x));
    }
  }
  SchemeSpec out = factored(Family::dd_primal, m, a);
  out.n = 2 * lprime + 1;
  out.l = 2 * lprime + 1;
  return out;
}

SchemeSpec make_dd_dual(int m, int lprime) {
  check_arity(m);
  check_lprime(lprime);
  LaurentPoly a;
  for (int s = 0; s < m; ++s) {
    const Rational x(2 * s + 1, 2 * m);
    for (int j = -lprime; j <= lprime + 1; ++j) {
      a += LaurentPoly::monomial(s - static_cast<long>(m) * j, lagrange(j, -lprime, lprime + 1, x));
    }
  }
  SchemeSpec out = factored(Family::dd_dual, m, a);
  out.n = 2 * lprime + 1;
  out.l = 2 * lprime + 1;
  return out;
}

SchemeSpec make_dd_dual_conjecture(int m, int n) {
  check_arity(m);
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("n must be odd");
  }
  const int lprime = (n - 1) / 2;
  check_lprime(lprime);
  const LaurentPoly half_one_plus_z(0, {Rational(1, 2), Rational(1, 2)});
  const LaurentPoly b =
      half_one_plus_z * delta_substitute(taylor_g(m, n, lprime, GenFunVariant::dual_conjecture).g);
  const LaurentPoly a = pow(sigma(m), static_cast<unsigned>(n + 1)) * b * Rational(m);
  SchemeSpec out = factored(Family::dd_dual_conjecture, m, a);
  out.n = n;
  out.l = n;
  return out;
}

SchemeSpec make_interpolatory_lian(int m, int lprime) {
  check_arity(m);
  if (m % 2 == 0) {
    throw std::invalid_argument("arity must be odd");
  }
  check_lprime(lprime, 1);
  const int mprime = m / 2;
  const long half = static_cast<long>(m) * lprime + mprime;
  std::vector<Rational> c(static_cast<std::size_t>(2 * half + 1));
  const Rational scale = pow(Rational(m), static_cast<unsigned>(2 * lprime));
  for (long k = 0; k <= half; ++k) {
    const long j = (k + mprime) / m;
    Rational num(1);
    for (long i = 1; i <= lprime - j; ++i) {
      num *= Rational(i * m + k);
    }
    for (long i = 1; i <= lprime + j; ++i) {
      num *= Rational(i * m - k);
    }
    const Rational ak = num / (scale * int_factorial(static_cast<int>(lprime - j)) *
                               int_factorial(static_cast<int>(lprime + j)));
    c[static_cast<std::size_t>(half + k)] = ak;
    c[static_cast<std::size_t>(half - k)] = ak;
  }
  SchemeSpec out = factored(Family::lian, m, LaurentPoly(-half, std::move(c)));
  out.n = 2 * lprime;
  out.l = 2 * lprime + 1;
  return out;
}

SchemeSpec make_tension(int m, const Rational& omega) { return make_dd_tension(m, 1, omega); }

SchemeSpec make_dd_tension(int m, int lprime, const Rational& omega) {
  check_arity(m);
  check_lprime(lprime, 1);
  if (omega < Rational(0) || omega > Rational(1)) {
    throw std::invalid_argument("omega must be in [0, 1]");
  }
  const LaurentPoly lower = make_pseudo_spline(m, 2 * lprime - 1, 2 * lprime - 1).b;
  const LaurentPoly upper = make_pseudo_spline(m, 2 * lprime + 1, 2 * lprime + 1).b;
  // sigma^2 z^{-(m-1)} is centered, so the blend is centered at 0.
  const LaurentPoly centered_sigma2 = (sigma(m) * sigma(m)).shifted(-(m - 1));
  SchemeSpec s;
  s.family = Family::tension;
  s.m = m;
  s.l = 2 * lprime + 1;
  s.omega = omega;
  s.r = 2 * lprime - 1;
  // Placed like the interpolatory endpoints: a_0 = 1 and tau = 0.
  s.b = (lower * (Rational(1) - omega) + centered_sigma2 * upper * omega).shifted(-(m - 1) * lprime);
  s.a = pow(sigma(m), static_cast<unsigned>(2 * lprime)) * s.b * Rational(m);
  s.tau = shift_of(s.a, m);
  return s;
}

SchemeSpec make_custom(int m, const LaurentPoly& a) {
  check_arity(m);
  if (a.is_zero()) {
    throw std::invalid_argument("mask must be nonzero");
  }
  return factored(Family::custom, m, a);
}

ConvergenceCertificate convergence(const LaurentPoly& a, int m) {
  std::vector<Rational> c(static_cast<std::size_t>(m));
  for (long e = a.low(); e <= a.high(); ++e) {
    const long s = ((e % m) + m) % m;
    c[static_cast<std::size_t>(s)] += a.coeff(e);
  }
  ConvergenceCertificate cert;
  cert.passes = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == Rational(1); });
  if (cert.passes) {
    return cert;
  }
  // a(zeta^j) = C(zeta^j) with C(z) = sum_s c_s z^s; it vanishes iff
  // the cyclotomic polynomial of the order of zeta^j divides C.
  if (a.sum() != Rational(m)) {
    cert.witness = 0;
    return cert;
  }
  const UniPoly cpoly(c);
  for (int j = 1; j < m; ++j) {
    const int order = m / std::gcd(j, m);
    if (!divmod(cpoly, cyclotomic(order)).remainder.is_zero()) {
      cert.witness = j;
      return cert;
    }
  }
  return cert;
}

SchemeAnalysis analyze(const LaurentPoly& a, int m) {
  if (a.is_zero()) {
    throw std::invalid_argument("mask must be nonzero");
  }
  SchemeAnalysis out;
  out.tau = shift_of(a, m);
  out.support_low = a.low();
  out.support_high = a.high();
  out.support_width = Rational(a.high() - a.low(), m - 1);
  out.symmetry = symmetry(a);
  out.convergence = convergence(a, m);
  out.generation_degree = sigma_power(a, m) - 1;
  int k = -1;
  while (k < out.generation_degree) {
    const int i = k + 1;
    if (a.derivative_at_one(i) != Rational(m) * falling_factorial(out.tau, i)) {
      break;
    }
    k = i;
  }
  out.reproduction_degree = k;
  out.interpolatory = true;
  for (long e = a.low(); e <= a.high(); ++e) {
    if (e % m == 0 && a.coeff(e) != (e == 0 ? Rational(1) : Rational(0))) {
      out.interpolatory = false;
      break;
    }
  }
  if (a.coeff(0) != Rational(1)) {
    out.interpolatory = false;
  }
  return out;
}

ReproductionSystem reproduction_system(int m, int n, int l, const Rational& tau) {
  check_arity(m);
  if (n < 0 || l < 0) {
    throw std::invalid_argument("n and l must be nonnegative");
  }
  const LaurentPoly s = pow(sigma(m), static_cast<unsigned>(n + 1));
  const auto size = static_cast<std::size_t>(l + 1);
  std::vector<Rational> sd(size);
  for (std::size_t k = 0; k < size; ++k) {
    sd[k] = s.derivative_at_one(static_cast<int>(k));
  }
  ReproductionSystem sys;
  sys.A.assign(size, std::vector<Rational>(size));
  sys.c.resize(size);
  sys.d.resize(size);
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      sys.A[k][j] = Rational(m) * binomial(Rational(static_cast<long>(k)), static_cast<int>(j)) * sd[k - j];
    }
    sys.c[k] = Rational(m) * falling_factorial(tau, static_cast<int>(k));
  }
  for (std::size_t k = 0; k < size; ++k) {
    Rational acc = sys.c[k];
    for (std::size_t j = 0; j < k; ++j) {
      acc -= sys.A[k][j] * sys.d[j];
    }
    sys.d[k] = acc / sys.A[k][k];
  }
  return sys;
}

bool equal_up_to_shift(const LaurentPoly& a, const LaurentPoly& b) {
  return shift_between(a, b).has_value();
}

}  // namespace pseudospline
