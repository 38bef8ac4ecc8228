#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pseudospline {

/// Exact rational number over arbitrary-precision integers.
///
/// Always kept in lowest terms with a positive denominator. Backed by GMP's
/// mpq_class; this wrapper exists so the rest of the code never sees a
/// non-canonical value and gets the "p/q" text form used in every JSON
/// document.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : v_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::integral I, std::integral J>
  Rational(I num, J den) : v_(static_cast<long>(num), static_cast<long>(den)) {
    if (den == 0) {
      throw std::domain_error("rational with zero denominator");
    }
    v_.canonicalize();
  }

  explicit Rational(const mpz_class& integer) : v_(integer) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Accepts "p", "p/q", and finite decimals such as "-0.125".
  static Rational parse(std::string_view text);

  std::string str() const;
  double to_double() const { return v_.get_d(); }
  /// Natural logarithm of |x|, valid far outside the double exponent range.
  double log_abs() const;

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  Rational abs() const;
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

Rational pow(const Rational& base, unsigned exponent);

/// floor(x) as an integer.
mpz_class floor(const Rational& x);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// x (x - 1) ... (x - k + 1); equals 1 for k = 0.
Rational falling_factorial(const Rational& x, int k);

/// Generalized binomial coefficient C(alpha, k) for rational alpha.
Rational binomial(const Rational& alpha, int k);

}  // namespace pseudospline
