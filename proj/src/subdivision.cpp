#include "pseudospline/subdivision.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace pseudospline {

namespace {

// Integer sequence c / D^level with D the common denominator of the symbol.
struct IntSeq {
  long offset = 0;
  std::vector<mpz_class> c;
};

struct IntSymbol {
  long offset = 0;
  std::vector<mpz_class> c;
  mpz_class den = 1;
};

IntSymbol integer_symbol(const LaurentPoly& a) {
  IntSymbol out;
  out.offset = a.offset();
  for (const auto& x : a.coeffs()) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), x.raw().get_den_mpz_t());
  }
  for (const auto& x : a.coeffs()) {
    out.c.push_back(x.num() * (out.den / x.den()));
  }
  return out;
}

// f(z) -> A(z) f(z^m)
IntSeq step(const IntSeq& f, const IntSymbol& a, int m) {
  IntSeq out;
  if (f.c.empty() || a.c.empty()) {
    return out;
  }
  out.offset = static_cast<long>(m) * f.offset + a.offset;
  out.c.assign((f.c.size() - 1) * static_cast<std::size_t>(m) + a.c.size(), mpz_class(0));
  for (std::size_t k = 0; k < f.c.size(); ++k) {
    if (f.c[k] == 0) {
      continue;
    }
    const std::size_t base = k * static_cast<std::size_t>(m);
    for (std::size_t t = 0; t < a.c.size(); ++t) {
      mpz_addmul(out.c[base + t].get_mpz_t(), a.c[t].get_mpz_t(), f.c[k].get_mpz_t());
    }
  }
  return out;
}

std::size_t predicted_length(const LaurentPoly& a, int m, int levels) {
  double len = 1.0;
  for (int l = 0; l < levels; ++l) {
    len = (len - 1.0) * m + static_cast<double>(a.length());
  }
  return len > 1e18 ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(len);
}

double ratio_to_double(const mpz_class& num, const mpz_class& den) {
  if (num == 0) {
    return 0.0;
  }
  long en = 0;
  long ed = 0;
  const double mn = mpz_get_d_2exp(&en, num.get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, den.get_mpz_t());
  return std::ldexp(mn / md, static_cast<int>(en - ed));
}

IntSeq run_impulse(const LaurentPoly& symbol, int m, int levels, mpz_class& den_out) {
  const IntSymbol a = integer_symbol(symbol);
  IntSeq f;
  f.c.emplace_back(1);
  den_out = 1;
  for (int l = 0; l < levels; ++l) {
    f = step(f, a, m);
    den_out *= a.den;
  }
  return f;
}

void check_levels(int levels, int cap) {
  if (levels < 0 || levels > cap) {
    throw std::invalid_argument("levels must be in [0, " + std::to_string(cap) + "]");
  }
}

}  // namespace

Rational SubdivisionState::parameter(long j, int m) const {
  return t0 + Rational(j) / pow(Rational(m), static_cast<unsigned>(level));
}

Rational initial_parameter(const SchemeSpec& s) { return s.tau / Rational(s.m - 1); }

SubdivisionState delta_state(const SchemeSpec& s) {
  SubdivisionState st;
  st.data = {Rational(1)};
  st.t0 = initial_parameter(s);
  return st;
}

SubdivisionState refine(const SubdivisionState& state, const SchemeSpec& s) {
  const int m = s.m;
  const LaurentPoly& a = s.a;
  SubdivisionState out;
  out.level = state.level + 1;
  out.finite = state.finite;
  out.t0 = state.t0 - s.tau / pow(Rational(m), static_cast<unsigned>(out.level));
  if (state.data.empty() || a.is_zero()) {
    return out;
  }
  const long klo = state.origin;
  const long khi = state.origin + static_cast<long>(state.data.size()) - 1;
  long jlo = m * klo + a.low();
  long jhi = m * khi + a.high();
  if (!state.finite) {
    // Keep j only if every k with a_{j - mk} != 0 lies in the window.
    jlo = m * klo + a.high();
    jhi = m * khi + a.low();
    if (jhi < jlo) {
      throw std::invalid_argument("data window too short for this mask");
    }
  }
  out.origin = jlo;
  out.data.assign(static_cast<std::size_t>(jhi - jlo + 1), Rational(0));
  for (long j = jlo; j <= jhi; ++j) {
    Rational acc(0);
    // k with low <= j - mk <= high.
    const long kmin = std::max(klo, static_cast<long>(std::ceil(static_cast<double>(j - a.high()) / m)) - 1);
    const long kmax = std::min(khi, static_cast<long>(std::floor(static_cast<double>(j - a.low()) / m)) + 1);
    for (long k = kmin; k <= kmax; ++k) {
      const long e = j - m * k;
      if (e < a.low() || e > a.high()) {
        continue;
      }
      acc += a.coeff(e) * state.data[static_cast<std::size_t>(k - klo)];
    }
    out.data[static_cast<std::size_t>(j - jlo)] = std::move(acc);
  }
  return out;
}

double CardinalSamples::value_double(std::size_t i) const {
  return ratio_to_double(num[i] * scale.den(), scale.num());
}

CardinalSamples cardinal_samples(const SchemeSpec& s, int levels) {
  check_levels(levels, kMaxSampleLevels);
  if (predicted_length(s.a, s.m, levels) > kMaxSamplePoints) {
    throw std::invalid_argument("too many sample points; lower the level");
  }
  mpz_class den;
  IntSeq f = run_impulse(s.a, s.m, levels, den);
  CardinalSamples out;
  out.level = levels;
  const Rational mpow = pow(Rational(s.m), static_cast<unsigned>(levels));
  // t_{l,0} = t_{0,0} - tau (1 - m^{-l}) / (m - 1) = tau / ((m - 1) m^l).
  const Rational t_l0 = s.tau / (Rational(s.m - 1) * mpow);
  out.t_step = Rational(1) / mpow;
  out.t_first = t_l0 + Rational(f.offset) * out.t_step;
  out.support_lo = Rational(s.a.low(), s.m - 1);
  out.support_hi = Rational(s.a.high(), s.m - 1);
  out.scale = Rational(den);
  out.num = std::move(f.c);
  return out;
}

DividedDifferenceScheme divided_difference_symbol(const SchemeSpec& s, int order) {
  if (order < 0) {
    throw std::invalid_argument("order must be nonnegative");
  }
  auto q = divide_exact(s.a, pow(sigma(s.m), static_cast<unsigned>(order)));
  if (!q) {
    throw std::domain_error("sigma^" + std::to_string(order) + " does not divide the symbol");
  }
  return {order, std::move(*q)};
}

std::vector<LaurentPoly> difference_data(const SchemeSpec& s, int order, int levels) {
  check_levels(levels, kMaxSampleLevels);
  const DividedDifferenceScheme dd = divided_difference_symbol(s, order);
  if (predicted_length(dd.symbol, s.m, levels) > kMaxSamplePoints) {
    throw std::invalid_argument("too many coefficients; lower the level");
  }
  const IntSymbol a = integer_symbol(dd.symbol);
  const LaurentPoly diff(0, {Rational(1), Rational(-1)});
  std::vector<LaurentPoly> out;
  IntSeq f;
  f.c.emplace_back(1);
  mpz_class den = 1;
  for (int l = 0; l <= levels; ++l) {
    if (l > 0) {
      f = step(f, a, s.m);
      den *= a.den;
    }
    std::vector<Rational> c;
    c.reserve(f.c.size());
    for (const auto& x : f.c) {
      c.emplace_back(x, den);
    }
    out.push_back(LaurentPoly(f.offset, std::move(c)) * diff);
  }
  return out;
}

std::vector<double> difference_maxima(const SchemeSpec& s, int order, int levels) {
  check_levels(levels, kMaxSampleLevels);
  const DividedDifferenceScheme dd = divided_difference_symbol(s, order);
  if (predicted_length(dd.symbol, s.m, levels) > kMaxSamplePoints) {
    throw std::invalid_argument("too many coefficients; lower the level");
  }
  const IntSymbol a = integer_symbol(dd.symbol);
  std::vector<double> out;
  IntSeq f;
  f.c.emplace_back(1);
  mpz_class den = 1;
  for (int l = 0; l <= levels; ++l) {
    if (l > 0) {
      f = step(f, a, s.m);
      den *= a.den;
    }
    mpz_class best = 0;
    mpz_class prev = 0;
    for (const auto& x : f.c) {
      mpz_class g = x - prev;
      if (abs(g) > best) {
        best = abs(g);
      }
      prev = x;
    }
    if (abs(prev) > best) {
      best = abs(prev);
    }
    out.push_back(ratio_to_double(best, den));
  }
  return out;
}

}  // namespace pseudospline
