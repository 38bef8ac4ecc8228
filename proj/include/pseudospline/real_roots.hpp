#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "pseudospline/polynomial.hpp"
#include "pseudospline/rational.hpp"

namespace pseudospline {

using Matrix = std::vector<std::vector<Rational>>;

/// det(lambda I - M), monic. Division-free Berkowitz on the integer matrix
/// D * M, rescaled afterwards.
UniPoly char_poly(const Matrix& M);

/// Isolating interval [lo, hi] of one simple real root. When the root is
/// rational and detected, lo == hi == *exact.
struct RealRoot {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;
};

/// Sturm sequence of the squarefree part of a polynomial, in primitive
/// integer form.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  /// Number of distinct real roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  /// Number of distinct real roots in [a, b].
  int count_closed(const Rational& a, const Rational& b) const;
  /// Sign of the squarefree part at x.
  int sign_at(const Rational& x) const;
  /// Bound B with every real root in (-B, B); a power of two.
  const Rational& root_bound() const { return bound_; }
  int squarefree_degree() const;

  /// Distinct roots in (a, b], ascending, each refined until
  /// hi - lo <= rel_width * max(1, |root|). A zero width only isolates.
  std::vector<RealRoot> isolate(const Rational& a, const Rational& b, const Rational& rel_width) const;
  /// All distinct real roots.
  std::vector<RealRoot> isolate_all(const Rational& rel_width) const;

  /// Largest (or smallest) distinct root in (a, b], refined like isolate().
  /// A float estimate of that root, when given, is verified by root counts
  /// around it and otherwise ignored.
  std::optional<RealRoot> extreme_root(bool largest, const Rational& a, const Rational& b,
                                       const Rational& rel_width,
                                       std::optional<double> hint = std::nullopt) const;

  /// Shrinks an isolating interval from isolate() to the requested width.
  void refine(RealRoot& root, const Rational& rel_width) const;

 private:
  std::vector<std::vector<mpz_class>> chain_;
  Rational bound_;
};

}  // namespace pseudospline
