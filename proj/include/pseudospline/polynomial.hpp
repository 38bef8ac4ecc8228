#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pseudospline/rational.hpp"

namespace pseudospline {

/// Polynomial in one variable with nonnegative exponents and exact
/// coefficients, stored in ascending powers. The zero polynomial has no
/// coefficients; otherwise the highest coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending);

  static UniPoly constant(const Rational& c);
  /// c * x^k
  static UniPoly monomial(std::size_t k, const Rational& c = Rational(1));
  static UniPoly x() { return monomial(1); }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t k) const;
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  UniPoly derivative() const;
  /// this(inner(x))
  UniPoly compose(const UniPoly& inner) const;
  /// Remainder modulo x^(order + 1).
  UniPoly truncated(std::size_t order) const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct UniDivision {
  UniPoly quotient;
  UniPoly remainder;
};

UniDivision divmod(const UniPoly& a, const UniPoly& d);
/// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& p, unsigned k);
/// a * b modulo x^(order + 1).
UniPoly mul_truncated(const UniPoly& a, const UniPoly& b, std::size_t order);

/// Laurent polynomial sum_i coeffs[i] z^(offset + i), canonically trimmed:
/// first and last coefficients nonzero, zero polynomial = (offset 0, empty).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long offset, std::vector<Rational> coeffs);

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(long exponent, const Rational& c = Rational(1));

  long offset() const { return offset_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t length() const { return c_.size(); }
  /// Lowest and highest exponent with a nonzero coefficient.
  long low() const { return offset_; }
  long high() const { return offset_ + static_cast<long>(c_.size()) - 1; }
  /// Coefficient of z^exponent (zero outside the support).
  Rational coeff(long exponent) const;

  /// z^k * this
  LaurentPoly shifted(long k) const;
  /// this(1/z)
  LaurentPoly reversed() const;
  /// this(z^m)
  LaurentPoly upsampled(long m) const;
  LaurentPoly derivative() const;

  Rational eval(const Rational& z) const;
  /// k-th derivative at z = 1 via falling factorials of the exponents.
  Rational derivative_at_one(int k) const;
  /// Sum of coefficients (value at 1).
  Rational sum() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  long offset_ = 0;
  std::vector<Rational> c_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned k);

/// Exact quotient q with a = d q, or nullopt when d does not divide a.
/// Throws std::domain_error for d = 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& d);

/// Shift k with b = z^k a, if the two differ only by a monomial shift.
std::optional<long> shift_between(const LaurentPoly& a, const LaurentPoly& b);

enum class SymmetryKind { odd, even, none };

/// odd:  a_{c+j} = a_{c-j};  even: a_{c+j} = a_{c+1-j}.
/// `twice_center` is 2c for odd and 2c + 1 for even symmetry (the exact
/// midpoint of the support, doubled).
struct Symmetry {
  SymmetryKind kind = SymmetryKind::none;
  long center = 0;
  long twice_center = 0;
  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

Symmetry symmetry(const LaurentPoly& a);

/// B(xi) = b(e^{-i xi}) written as a polynomial q(t) in t = sin^2(xi / 2),
/// for b odd symmetric and centered at zero. Throws std::domain_error otherwise.
UniPoly fourier_as_tpoly(const LaurentPoly& b);

/// Chebyshev polynomials of the first kind evaluated at 1 - 2t, as polynomials in t.
std::vector<UniPoly> chebyshev_t_shifted(int max_degree);

}  // namespace pseudospline
