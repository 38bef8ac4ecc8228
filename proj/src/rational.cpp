#include "pseudospline/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pseudospline {

namespace {

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer");
  }
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) {
    throw std::invalid_argument("malformed integer: " + std::string(text));
  }
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed number: " + std::string(text));
    }
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(s, 10);
}

double log_abs_mpz(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in " + std::string(text));
    }
    return Rational(parse_integer(text.substr(0, slash)), den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) {
      whole = "0";
    }
    if (frac.empty()) {
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    }
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
      scale *= 10;
    }
    mpz_class w = parse_integer(whole);
    mpz_class f = parse_integer(frac);
    if (f < 0) {
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    }
    mpz_class magnitude = ::abs(w) * scale + f;
    return Rational(negative ? mpz_class(-magnitude) : magnitude, scale);
  }
  return Rational(parse_integer(text));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) {
    return v_.get_num().get_str();
  }
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

double Rational::log_abs() const {
  if (is_zero()) {
    return -HUGE_VAL;
  }
  return log_abs_mpz(v_.get_num()) - log_abs_mpz(v_.get_den());
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("division by zero rational");
  }
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

mpz_class floor(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return q;
}

// Stern-Brocot descent via continued fractions.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) {
    return simplest_between(hi, lo);
  }
  if (lo.sign() <= 0 && hi.sign() >= 0) {
    return Rational(0);
  }
  if (hi.sign() < 0) {
    return -simplest_between(-hi, -lo);
  }
  const mpz_class fl = floor(lo);
  if (Rational(fl) == lo) {
    return lo;
  }
  if (fl + 1 <= floor(hi)) {
    return Rational(mpz_class(fl + 1));
  }
  // Both lie strictly inside (fl, fl + 1): recurse on reciprocals of fractional parts.
  const Rational base(fl);
  const Rational inner = simplest_between(Rational(1) / (hi - base), Rational(1) / (lo - base));
  return base + Rational(1) / inner;
}

Rational falling_factorial(const Rational& x, int k) {
  Rational out(1);
  for (int i = 0; i < k; ++i) {
    out *= x - Rational(i);
  }
  return out;
}

Rational binomial(const Rational& alpha, int k) {
  if (k < 0) {
    return Rational(0);
  }
  Rational out(1);
  for (int i = 0; i < k; ++i) {
    out *= (alpha - Rational(i)) / Rational(i + 1);
  }
  return out;
}

}  // namespace pseudospline
