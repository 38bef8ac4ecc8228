#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pseudospline/polynomial.hpp"
#include "pseudospline/rational.hpp"
#include "pseudospline/real_roots.hpp"
#include "pseudospline/schemes.hpp"

namespace pseudospline {

enum class PositivityStatus { strictly_positive, nonnegative_with_zero, indefinite };

std::string positivity_name(PositivityStatus s);  // "strict" | "nonneg" | "indefinite"

struct PositivityCertificate {
  PositivityStatus status = PositivityStatus::indefinite;
  UniPoly tpoly;  // B(xi) = q(sin^2(xi / 2))
  /// Interval in [0, 1] containing a root of q, when there is one.
  std::optional<std::pair<Rational, Rational>> witness;
};

/// Decides the sign of B on [0, pi] by exact root counting of q on [0, 1].
PositivityCertificate certify_positivity(const LaurentPoly& b);

struct FoldedMatrix {
  int m = 2;
  int p = 0;
  int dim = 0;
  Matrix entries;
};

/// M[j][0] = b_j, M[j][k] = b_{|j - mk|} + b_{j + mk}; b centered odd symmetric, p >= 1.
FoldedMatrix folded_matrix(const LaurentPoly& b, int m);

/// [b_{j - mk}] for j, k in [-d, d] with d = floor((p - 1) / (m - 1)).
Matrix unfolded_matrix(const LaurentPoly& b, int m);

struct SpectralRadius {
  UniPoly char_poly;
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;
  bool dominant_real = true;
  /// (b_{64, probe})^{1/64}; absent when that coefficient is not positive.
  std::optional<double> window_estimate;
  bool flagged = false;
  std::string flag_reason;

  double midpoint() const { return ((lo + hi) / Rational(2)).to_double(); }
};

inline constexpr int kWindowCheckLevel = 64;

/// Certified enclosure of max |lambda| over the eigenvalues of M. `probe` is
/// the coordinate used by the window-iteration cross-check.
SpectralRadius spectral_radius(const Matrix& M, std::size_t probe = 0);

/// Windows M^l e_probe for l = 0..levels, exact.
std::vector<std::vector<Rational>> iterate_window(const Matrix& M, int levels, std::size_t probe = 0);

/// (M^l e_probe)[probe]^{1/l}, computed on integers; nullopt when not positive.
std::optional<double> window_root(const Matrix& M, int levels, std::size_t probe = 0);

inline constexpr int kMaxFullIteration = 5;

/// b(z) b(z^m) ... b(z^{m^{l-1}}); l <= 5.
LaurentPoly full_iterated_mask(const LaurentPoly& b, int m, int levels);

struct RegularityReport {
  int r = 0;
  int m = 2;
  int p = 0;
  FoldedMatrix folded;
  UniPoly char_poly;
  Rational rho_lo;
  Rational rho_hi;
  std::optional<Rational> rho_exact;
  double regularity = 0.0;
  bool exact = false;
  PositivityCertificate positivity;
  bool flagged = false;
  std::string flag_reason;
  std::optional<double> window_estimate;
};

/// Shifts b to its center, then r - log_m(rho). Throws std::domain_error when
/// b is not odd symmetric about an integer.
RegularityReport exact_regularity(const SchemeSpec& s);

/// b shifted so that it is centered at 0; throws std::domain_error if impossible.
LaurentPoly centered_derived_symbol(const LaurentPoly& b);

/// Growth factor of the difference data of the a / sigma^r scheme, which
/// tracks rho.
double decay_estimate(const SchemeSpec& s, int levels);

/// Five decimals, ties to even.
std::string display_value(double x);

}  // namespace pseudospline
