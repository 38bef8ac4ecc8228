#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pseudospline/polynomial.hpp"
#include "pseudospline/rational.hpp"

namespace pseudospline {

enum class Family { pseudo, bspline, dd_primal, dd_dual, dd_dual_conjecture, lian, tension, custom };

std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// A subdivision scheme a(z) = m sigma_m(z)^{r+1} b(z) with shift tau = a'(1) / m.
struct SchemeSpec {
  Family family = Family::custom;
  int m = 2;
  std::optional<int> n;
  std::optional<int> l;
  std::optional<Rational> omega;
  Rational tau;
  LaurentPoly a;
  LaurentPoly b;
  int r = -1;

  friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

/// sigma_m(z) = (1 + z + ... + z^{m-1}) / m
LaurentPoly sigma(int m);

/// Largest e with sigma_m^e dividing a (a nonzero).
int sigma_power(const LaurentPoly& a, int m);

SchemeSpec make_pseudo_spline(int m, int n, int l);
SchemeSpec make_bspline(int m, int n);
SchemeSpec make_dd_primal(int m, int lprime);
SchemeSpec make_dd_dual(int m, int lprime);
/// Conjectured dual Dubuc-Deslauriers symbol; n = l = 2 l' + 1.
SchemeSpec make_dd_dual_conjecture(int m, int n);
/// Odd-arity (2 l' + 1)-point interpolatory scheme.
SchemeSpec make_interpolatory_lian(int m, int lprime);
/// (1 - omega) a_{m,1,1} + omega a_{m,3,3}.
SchemeSpec make_tension(int m, const Rational& omega);
/// Convex blend of the 2l'-point and (2l'+2)-point primal Dubuc-Deslauriers
/// schemes; l' = 1 is make_tension.
SchemeSpec make_dd_tension(int m, int lprime, const Rational& omega);
/// Arbitrary mask; r and b are recovered by factoring out sigma_m.
SchemeSpec make_custom(int m, const LaurentPoly& a);

struct ConvergenceCertificate {
  bool passes = false;
  /// Smallest j in [0, m) with a(zeta_m^j) wrong (0 means a(1) != m).
  std::optional<int> witness;
};

ConvergenceCertificate convergence(const LaurentPoly& a, int m);

struct SchemeAnalysis {
  Rational tau;
  long support_low = 0;
  long support_high = 0;
  /// Width of the cardinal function's support, N / (m - 1).
  Rational support_width;
  Symmetry symmetry;
  ConvergenceCertificate convergence;
  int generation_degree = -1;
  int reproduction_degree = -1;
  bool interpolatory = false;
};

SchemeAnalysis analyze(const LaurentPoly& a, int m);

struct ReproductionSystem {
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> c;
  std::vector<Rational> d;
};

/// Leibniz system for the derivatives d_k = b^{(k)}(1), k = 0..l.
ReproductionSystem reproduction_system(int m, int n, int l, const Rational& tau);

/// a and b differ by a monomial factor z^k.
bool equal_up_to_shift(const LaurentPoly& a, const LaurentPoly& b);

/// Upper bounds on constructor parameters, shared by the CLI and the service.
inline constexpr int kMaxArity = 16;
inline constexpr int kMaxN = 72;
inline constexpr int kMaxLprime = 32;

}  // namespace pseudospline
