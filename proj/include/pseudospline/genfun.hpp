#pragma once

#include <vector>

#include "pseudospline/polynomial.hpp"
#include "pseudospline/rational.hpp"

namespace pseudospline {

enum class GenFunVariant { primal, dual_conjecture };

/// Truncated Taylor expansion of the pseudo-spline generating function
/// G_{m,n}(y) = (m / U_{m-1}(sqrt(1 - y)))^{n+1} around y = 0.
struct GenFunExpansion {
  int m = 2;
  int mprime = 1;  // m = 2 m' + epsilon
  int epsilon = 0;
  int n = 0;
  int lprime = 0;
  GenFunVariant variant = GenFunVariant::primal;
  std::vector<Rational> g;  // g_0 .. g_{l'}
  UniPoly s_poly;           // S_m(y)
  UniPoly p_poly;           // P_m(y) = 1 - S_m(y)
};

/// Chebyshev polynomial of the second kind U_d(x).
UniPoly chebyshev_u(int d);

/// S_m(y) with U_{m-1}(sqrt(1 - y)) = m (1 - y)^{(1 - epsilon) / 2} S_m(y).
UniPoly chebyshev_sqrt_series(int m);

/// P_m(y) = 1 - S_m(y).
UniPoly p_poly(int m);

/// Coefficients g_0 .. g_{l'} of G_{m,n}, or of G_{m,n}(y) / sqrt(1 - y) for
/// the dual variant.
GenFunExpansion taylor_g(int m, int n, int lprime, GenFunVariant variant = GenFunVariant::primal);

/// delta(z) = -(1 - z)^2 / (4 z)
LaurentPoly delta_symbol();

/// sum_k g_k delta(z)^k
LaurentPoly delta_substitute(const std::vector<Rational>& g);

}  // namespace pseudospline
