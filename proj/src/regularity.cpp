#include "pseudospline/regularity.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>

#include "pseudospline/subdivision.hpp"

namespace pseudospline {

namespace {

const Rational& kRootWidth() {
  static const Rational w(1, 100'000'000'000'000L);  // 1e-14
  return w;
}

Rational rational_from_double(double x) { return Rational(mpq_class(x)); }

struct ComplexBound {
  double modulus_hi = 0.0;
  double modulus_lo = 0.0;
};

std::vector<std::complex<double>> float_eigenvalues(const Matrix& M) {
  const auto n = static_cast<Eigen::Index>(M.size());
  Eigen::MatrixXd A(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      A(i, j) = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].to_double();
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(A, false);
  std::vector<std::complex<double>> out;
  if (solver.info() != Eigen::Success || !A.allFinite()) {
    return out;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    out.push_back(solver.eigenvalues()[i]);
  }
  return out;
}

// Eigenvalues that are certainly non-real, each with a modulus range from the
// ball of radius n |p / p'| around the float estimate.
std::vector<ComplexBound> complex_moduli(const std::vector<std::complex<double>>& eigs, const UniPoly& p) {
  const int deg = p.degree();
  const auto n = static_cast<long double>(deg);
  std::vector<ComplexBound> out;
  for (const std::complex<double> ev : eigs) {
    if (ev.imag() <= 0.0) {
      continue;  // one per conjugate pair
    }
    // p(s w) / s^deg with s = |ev|, so huge coefficients stay in range.
    const long double log_s = std::log(static_cast<long double>(std::abs(ev)));
    const std::complex<long double> w(ev.real() / std::abs(ev), ev.imag() / std::abs(ev));
    std::complex<long double> val = 0;
    std::complex<long double> der = 0;
    for (int k = deg; k >= 0; --k) {
      const Rational& ck = p.coeffs()[static_cast<std::size_t>(k)];
      const long double c =
          ck.is_zero() ? 0.0L
                       : ck.sign() * std::exp(static_cast<long double>(ck.log_abs()) + (k - deg) * log_s);
      der = der * w + val;
      val = val * w + c;
    }
    const long double radius =
        std::abs(der) > 0 ? n * std::abs(ev) * std::abs(val) / std::abs(der) : INFINITY;
    if (!std::isfinite(radius) || static_cast<long double>(ev.imag()) <= radius) {
      continue;  // may be real; the Sturm count covers it
    }
    out.push_back({static_cast<double>(std::abs(ev) + radius), static_cast<double>(std::abs(ev) - radius)});
  }
  return out;
}

}  // namespace

std::string positivity_name(PositivityStatus s) {
  switch (s) {
    case PositivityStatus::strictly_positive:
      return "strict";
    case PositivityStatus::nonnegative_with_zero:
      return "nonneg";
    case PositivityStatus::indefinite:
      return "indefinite";
  }
  return "indefinite";
}

PositivityCertificate certify_positivity(const LaurentPoly& b) {
  PositivityCertificate cert;
  cert.tpoly = fourier_as_tpoly(b);
  const UniPoly& q = cert.tpoly;
  if (q.is_zero()) {
    cert.status = PositivityStatus::nonnegative_with_zero;
    cert.witness = std::make_pair(Rational(0), Rational(1));
    return cert;
  }
  if (q.degree() == 0) {
    cert.status = q.leading().sign() > 0 ? PositivityStatus::strictly_positive : PositivityStatus::indefinite;
    return cert;
  }
  const Rational zero(0);
  const Rational one(1);
  const SturmChain chain(q);
  std::vector<RealRoot> roots = chain.isolate(zero, one, Rational(0));
  if (q.eval(zero).is_zero()) {
    roots.insert(roots.begin(), RealRoot{zero, zero, zero});
  }
  // Sample q at 0, 1 and the ends of every isolating interval; q has no root
  // between samples that are not roots themselves.
  std::vector<Rational> samples{zero, one};
  for (const auto& r : roots) {
    samples.push_back(r.lo);
    samples.push_back(r.hi);
  }
  bool negative = false;
  for (const auto& x : samples) {
    if (q.eval(x).sign() < 0) {
      negative = true;
      break;
    }
  }
  if (!roots.empty()) {
    cert.witness = std::make_pair(roots.front().lo, roots.front().hi);
  }
  if (negative) {
    cert.status = PositivityStatus::indefinite;
  } else if (!roots.empty()) {
    cert.status = PositivityStatus::nonnegative_with_zero;
  } else {
    cert.status = PositivityStatus::strictly_positive;
  }
  return cert;
}

LaurentPoly centered_derived_symbol(const LaurentPoly& b) {
  const Symmetry s = symmetry(b);
  if (s.kind != SymmetryKind::odd) {
    throw std::domain_error("derived symbol is not odd symmetric");
  }
  return b.shifted(-s.center);
}

FoldedMatrix folded_matrix(const LaurentPoly& b, int m) {
  if (m < 2) {
    throw std::invalid_argument("arity must be at least 2");
  }
  const Symmetry s = symmetry(b);
  if (s.kind != SymmetryKind::odd || s.center != 0) {
    throw std::domain_error("folded matrix needs an odd symmetric symbol centered at 0");
  }
  FoldedMatrix f;
  f.m = m;
  f.p = static_cast<int>(b.high());
  if (f.p < 1) {
    throw std::domain_error("folded matrix needs half-support p >= 1");
  }
  f.dim = (f.p - 1) / (m - 1) + 1;
  const auto dim = static_cast<std::size_t>(f.dim);
  f.entries.assign(dim, std::vector<Rational>(dim));
  for (long j = 0; j < f.dim; ++j) {
    f.entries[static_cast<std::size_t>(j)][0] = b.coeff(j);
    for (long k = 1; k < f.dim; ++k) {
      f.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
          b.coeff(std::labs(j - m * k)) + b.coeff(j + m * k);
    }
  }
  return f;
}

Matrix unfolded_matrix(const LaurentPoly& b, int m) {
  const Symmetry s = symmetry(b);
  if (s.kind != SymmetryKind::odd || s.center != 0 || b.high() < 1) {
    throw std::domain_error("unfolded matrix needs an odd symmetric symbol centered at 0 with p >= 1");
  }
  const long d = (b.high() - 1) / (m - 1);
  const auto size = static_cast<std::size_t>(2 * d + 1);
  Matrix out(size, std::vector<Rational>(size));
  for (long j = -d; j <= d; ++j) {
    for (long k = -d; k <= d; ++k) {
      out[static_cast<std::size_t>(j + d)][static_cast<std::size_t>(k + d)] = b.coeff(j - m * k);
    }
  }
  return out;
}

std::vector<std::vector<Rational>> iterate_window(const Matrix& M, int levels, std::size_t probe) {
  if (levels < 0) {
    throw std::invalid_argument("levels must be nonnegative");
  }
  const std::size_t n = M.size();
  if (probe >= n) {
    throw std::invalid_argument("probe index outside the matrix");
  }
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> v(n);
  v[probe] = Rational(1);
  out.push_back(v);
  for (int l = 0; l < levels; ++l) {
    std::vector<Rational> w(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!M[i][j].is_zero() && !v[j].is_zero()) {
          w[i] += M[i][j] * v[j];
        }
      }
    }
    v = std::move(w);
    out.push_back(v);
  }
  return out;
}

std::optional<double> window_root(const Matrix& M, int levels, std::size_t probe) {
  const std::size_t n = M.size();
  if (probe >= n || levels < 1) {
    return std::nullopt;
  }
  mpz_class D = 1;
  for (const auto& row : M) {
    for (const auto& x : row) {
      mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), x.raw().get_den_mpz_t());
    }
  }
  std::vector<std::vector<mpz_class>> B(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      B[i][j] = M[i][j].num() * (D / M[i][j].den());
    }
  }
  std::vector<mpz_class> v(n, mpz_class(0));
  v[probe] = 1;
  for (int l = 0; l < levels; ++l) {
    std::vector<mpz_class> w(n, mpz_class(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        mpz_addmul(w[i].get_mpz_t(), B[i][j].get_mpz_t(), v[j].get_mpz_t());
      }
    }
    v = std::move(w);
  }
  if (v[probe] <= 0) {
    return std::nullopt;
  }
  const double log_value = Rational(v[probe]).log_abs() - levels * Rational(D).log_abs();
  return std::exp(log_value / levels);
}

SpectralRadius spectral_radius(const Matrix& M, std::size_t probe) {
  SpectralRadius out;
  out.char_poly = char_poly(M);
  const SturmChain chain(out.char_poly);
  const std::vector<std::complex<double>> eigs = float_eigenvalues(M);
  std::optional<double> top;
  std::optional<double> bottom;
  for (const auto& ev : eigs) {
    if (std::fabs(ev.imag()) <= 1e-9 * std::max(1.0, std::abs(ev))) {
      top = top ? std::max(*top, ev.real()) : ev.real();
      bottom = bottom ? std::min(*bottom, ev.real()) : ev.real();
    }
  }
  // Only the largest and the smallest real root can carry the maximal modulus.
  std::vector<RealRoot> roots;
  for (const bool largest : {true, false}) {
    if (auto r = chain.extreme_root(largest, -chain.root_bound(), chain.root_bound(), kRootWidth(),
                                    largest ? top : bottom)) {
      roots.push_back(std::move(*r));
    }
  }
  const auto abs_range = [](const RealRoot& r) {
    const Rational a = r.lo.abs();
    const Rational b = r.hi.abs();
    const Rational lo = (r.lo.sign() < 0 && r.hi.sign() > 0) ? Rational(0) : std::min(a, b);
    return std::make_pair(lo, std::max(a, b));
  };

  // Enclosure of max |lambda| over the real roots.
  bool have_real = false;
  for (const auto& r : roots) {
    const auto [lo, hi] = abs_range(r);
    if (!have_real || out.lo < lo) {
      out.lo = lo;
    }
    if (!have_real || out.hi < hi) {
      out.hi = hi;
    }
    have_real = true;
  }
  if (have_real && out.lo == out.hi) {
    out.exact = out.lo;
  }

  const std::vector<ComplexBound> complex = complex_moduli(eigs, out.char_poly);
  const Rational width = out.hi - out.lo;
  for (const auto& c : complex) {
    if (!have_real || c.modulus_hi > (out.hi + width).to_double()) {
      if (!have_real || c.modulus_lo > out.hi.to_double()) {
        out.dominant_real = false;
      }
      out.flagged = true;
      out.flag_reason = "a complex eigenvalue may exceed the largest real root in modulus";
      if (!have_real) {
        out.lo = rational_from_double(std::max(0.0, c.modulus_lo));
        out.hi = rational_from_double(c.modulus_hi);
        have_real = true;
      }
    }
  }

  out.window_estimate = window_root(M, kWindowCheckLevel, probe);
  if (out.window_estimate) {
    const double mid = out.midpoint();
    if (mid > 0 && std::fabs(*out.window_estimate - mid) > 0.02 * mid) {
      out.flagged = true;
      if (!out.flag_reason.empty()) {
        out.flag_reason += "; ";
      }
      out.flag_reason += "window iteration disagrees with the certified radius";
    }
  }
  return out;
}

LaurentPoly full_iterated_mask(const LaurentPoly& b, int m, int levels) {
  if (levels < 0 || levels > kMaxFullIteration) {
    throw std::invalid_argument("full iterated mask supports levels in [0, 5]");
  }
  LaurentPoly out = LaurentPoly::constant(Rational(1));
  for (int l = 0; l < levels; ++l) {
    out = b * out.upsampled(m);
  }
  return out;
}

RegularityReport exact_regularity(const SchemeSpec& s) {
  RegularityReport rep;
  rep.r = s.r;
  rep.m = s.m;
  const LaurentPoly b = centered_derived_symbol(s.b);
  rep.positivity = certify_positivity(b);
  rep.p = static_cast<int>(b.high());
  if (rep.p == 0) {
    // B-spline case: the regularity is r.
    rep.folded.m = s.m;
    rep.folded.p = 0;
    rep.folded.dim = 1;
    rep.folded.entries = {{b.coeff(0)}};
    rep.char_poly = UniPoly(std::vector<Rational>{-b.coeff(0), Rational(1)});
    rep.rho_lo = rep.rho_hi = b.coeff(0);
    rep.rho_exact = b.coeff(0);
    rep.regularity = static_cast<double>(s.r) - std::log(b.coeff(0).to_double()) / std::log(s.m);
    rep.exact = rep.positivity.status == PositivityStatus::strictly_positive;
    return rep;
  }
  rep.folded = folded_matrix(b, s.m);
  const SpectralRadius sr = spectral_radius(rep.folded.entries);
  rep.char_poly = sr.char_poly;
  rep.rho_lo = sr.lo;
  rep.rho_hi = sr.hi;
  rep.rho_exact = sr.exact;
  rep.flagged = sr.flagged;
  rep.flag_reason = sr.flag_reason;
  rep.window_estimate = sr.window_estimate;
  const double rho = sr.midpoint();
  rep.regularity = static_cast<double>(s.r) - std::log(rho) / std::log(static_cast<double>(s.m));
  rep.exact = rep.positivity.status == PositivityStatus::strictly_positive &&
              sr.lo > Rational(1, s.m);
  return rep;
}

double decay_estimate(const SchemeSpec& s, int levels) {
  if (levels < 1) {
    throw std::invalid_argument("decay estimate needs at least one level");
  }
  const std::vector<double> maxima = difference_maxima(s, s.r, levels);
  const double last = maxima[static_cast<std::size_t>(levels)];
  const double prev = maxima[static_cast<std::size_t>(levels - 1)];
  return last / prev;
}

std::string display_value(double x) {
  const double rounded = std::nearbyint(x * 1e5) / 1e5;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", rounded == 0.0 ? 0.0 : rounded);
  return buf;
}

}  // namespace pseudospline
