#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "pseudospline/polynomial.hpp"
#include "pseudospline/rational.hpp"
#include "pseudospline/schemes.hpp"

namespace pseudospline {

/// Data f_{l,j} for j = origin .. origin + data.size() - 1 at parameters
/// t_{l,j} = t0 + j / m^l.
///
/// With `finite` set the data is zero outside the stored range. Otherwise the
/// stored range is a window of bi-infinite data, and refinement keeps only the
/// indices it can compute without reading outside the window.
struct SubdivisionState {
  int level = 0;
  long origin = 0;
  std::vector<Rational> data;
  Rational t0;
  bool finite = true;

  Rational parameter(long j, int m) const;
};

/// t_{0,0}; chosen so that the level-l parameter of index 0 tends to 0.
Rational initial_parameter(const SchemeSpec& s);

/// Unit impulse at level 0.
SubdivisionState delta_state(const SchemeSpec& s);

/// f_{l+1,j} = sum_k a_{j - mk} f_{l,k} and t_{l+1,0} = t_{l,0} - tau / m^{l+1}.
SubdivisionState refine(const SubdivisionState& state, const SchemeSpec& s);

inline constexpr int kMaxSampleLevels = 12;
inline constexpr std::size_t kMaxSamplePoints = 3'000'000;

/// Samples of the cardinal function after `levels` refinements of the impulse.
/// Values are num[i] / scale, parameters t_first + i * t_step.
class CardinalSamples {
 public:
  int level = 0;
  Rational t_first;
  Rational t_step;
  Rational support_lo;
  Rational support_hi;
  Rational scale;  // common denominator of the values
  std::vector<mpz_class> num;

  std::size_t size() const { return num.size(); }
  Rational t(std::size_t i) const { return t_first + t_step * Rational(static_cast<long>(i)); }
  Rational value(std::size_t i) const { return Rational(num[i]) / scale; }
  double t_double(std::size_t i) const { return t(i).to_double(); }
  double value_double(std::size_t i) const;
};

CardinalSamples cardinal_samples(const SchemeSpec& s, int levels);

struct DividedDifferenceScheme {
  int order = 0;
  LaurentPoly symbol;  // a / sigma_m^order
};

/// Throws std::domain_error when sigma_m^order does not divide a.
DividedDifferenceScheme divided_difference_symbol(const SchemeSpec& s, int order);

/// g_l(z) = (1 - z) f_l(z), where f_l is the a / sigma^order scheme run on the
/// impulse; one entry per level 0..levels.
std::vector<LaurentPoly> difference_data(const SchemeSpec& s, int order, int levels);

/// max_j |g_{l,j}| for l = 0..levels as doubles, without materializing rationals.
std::vector<double> difference_maxima(const SchemeSpec& s, int order, int levels);

}  // namespace pseudospline
