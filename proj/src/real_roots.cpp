#include "pseudospline/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace pseudospline {

namespace {

using IntPoly = std::vector<mpz_class>;  // ascending, trimmed

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

void make_primitive(IntPoly& p) {
  trim(p);
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g > 1) {
    for (auto& c : p) {
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }
}

IntPoly to_integer(const UniPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    out.push_back(c.num() * (l / c.den()));
  }
  make_primitive(out);
  return out;
}

UniPoly to_uni(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& x : p) {
    c.emplace_back(x);
  }
  return UniPoly(std::move(c));
}

// Negated remainder of a by b, up to a positive factor.
IntPoly neg_prem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lead = b.back();
  int steps = 0;
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpz_class ca = a.back();
    for (auto& c : a) {
      c *= lead;
    }
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] -= ca * b[i];
    }
    ++steps;
    trim(a);
  }
  // lead^steps has the sign of the scaling applied to a.
  const bool flip = lead < 0 && steps % 2 == 1;
  if (!flip) {
    for (auto& c : a) {
      c = -c;
    }
  }
  make_primitive(a);
  return a;
}

// Sign of p(x) for x = num / den, den > 0, via the homogenized Horner form.
int sign_of(const IntPoly& p, const Rational& x) {
  if (p.empty()) {
    return 0;
  }
  const mpz_class num = x.num();
  const mpz_class den = x.den();
  mpz_class acc = p.back();
  mpz_class dpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    dpow *= den;
    acc = acc * num + p[i] * dpow;
  }
  return sgn(acc);
}

int variations(const std::vector<IntPoly>& chain, const Rational& x) {
  int v = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_of(p, x);
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++v;
    }
    last = s;
  }
  return v;
}

Rational mag_max(const Rational& a, const Rational& b) {
  const Rational x = a.abs();
  const Rational y = b.abs();
  return x < y ? y : x;
}

}  // namespace

UniPoly char_poly(const Matrix& M) {
  const std::size_t n = M.size();
  for (const auto& row : M) {
    if (row.size() != n) {
      throw std::invalid_argument("characteristic polynomial needs a square matrix");
    }
  }
  if (n == 0) {
    return UniPoly::constant(Rational(1));
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
  // Coefficients highest power first.
  std::vector<mpz_class> p{1, -B[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<mpz_class> t(r + 2);
    t[0] = 1;
    t[1] = -B[r][r];
    std::vector<mpz_class> v(r);
    for (std::size_t i = 0; i < r; ++i) {
      v[i] = B[i][r];
    }
    for (std::size_t k = 2; k < r + 2; ++k) {
      mpz_class dot = 0;
      for (std::size_t i = 0; i < r; ++i) {
        dot += B[r][i] * v[i];
      }
      t[k] = -dot;
      if (k + 1 < r + 2) {
        std::vector<mpz_class> w(r);
        for (std::size_t i = 0; i < r; ++i) {
          mpz_class acc = 0;
          for (std::size_t j = 0; j < r; ++j) {
            acc += B[i][j] * v[j];
          }
          w[i] = std::move(acc);
        }
        v = std::move(w);
      }
    }
    std::vector<mpz_class> q(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        q[i] += t[i - j] * p[j];
      }
    }
    p = std::move(q);
  }
  std::vector<Rational> asc(n + 1);
  mpz_class scale = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    asc[n - k] = Rational(p[k], scale);
    scale *= D;
  }
  return UniPoly(std::move(asc));
}

namespace {

std::vector<IntPoly> sturm_sequence(const IntPoly& f) {
  std::vector<IntPoly> chain{f};
  if (f.size() > 1) {
    IntPoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) {
      d[i - 1] = f[i] * static_cast<long>(i);
    }
    make_primitive(d);
    chain.push_back(d);
    while (chain.back().size() > 1) {
      IntPoly r = neg_prem(chain[chain.size() - 2], chain.back());
      if (r.empty()) {
        break;
      }
      chain.push_back(std::move(r));
    }
  }
  return chain;
}

}  // namespace

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) {
    throw std::domain_error("Sturm chain of the zero polynomial");
  }
  IntPoly sqf = to_integer(p);
  if (sqf.back() < 0) {
    for (auto& c : sqf) {
      c = -c;
    }
  }
  chain_ = sturm_sequence(sqf);
  if (chain_.back().size() > 1) {
    // The last element is gcd(f, f'); divide it out and start over.
    const UniPoly fu = to_uni(sqf);
    sqf = to_integer(divmod(fu, to_uni(chain_.back())).quotient);
    if (sqf.back() < 0) {
      for (auto& c : sqf) {
        c = -c;
      }
    }
    chain_ = sturm_sequence(sqf);
  }
  // Cauchy bound 1 + max |c_i / c_n|, rounded up to a power of two.
  Rational cmax(0);
  const Rational lead(sqf.back());
  for (std::size_t i = 0; i + 1 < sqf.size(); ++i) {
    const Rational ratio = (Rational(sqf[i]) / lead).abs();
    if (cmax < ratio) {
      cmax = ratio;
    }
  }
  bound_ = Rational(1);
  while (bound_ <= cmax + Rational(1)) {
    bound_ *= Rational(2);
  }
}

int SturmChain::squarefree_degree() const { return static_cast<int>(chain_.front().size()) - 1; }

int SturmChain::count(const Rational& a, const Rational& b) const {
  if (b <= a) {
    return 0;
  }
  return variations(chain_, a) - variations(chain_, b);
}

int SturmChain::count_closed(const Rational& a, const Rational& b) const {
  return count(a, b) + (sign_at(a) == 0 ? 1 : 0);
}

int SturmChain::sign_at(const Rational& x) const { return sign_of(chain_.front(), x); }

void SturmChain::refine(RealRoot& root, const Rational& rel_width) const {
  if (root.exact) {
    return;
  }
  // Invariant: the only root in (lo, hi] lies strictly inside unless hi is it.
  if (sign_at(root.hi) == 0) {
    root.lo = root.hi;
    root.exact = root.hi;
    return;
  }
  if (rel_width.sign() <= 0) {
    return;
  }
  const int s_hi = sign_at(root.hi);
  const Rational two(2);
  while (root.hi - root.lo > rel_width * std::max(Rational(1), mag_max(root.lo, root.hi))) {
    const Rational mid = (root.lo + root.hi) / two;
    const int s = sign_at(mid);
    if (s == 0) {
      root.lo = mid;
      root.hi = mid;
      root.exact = mid;
      return;
    }
    if (s == s_hi) {
      root.hi = mid;
    } else {
      root.lo = mid;
    }
  }
  const Rational candidate = simplest_between(root.lo, root.hi);
  if (sign_at(candidate) == 0) {
    root.lo = candidate;
    root.hi = candidate;
    root.exact = candidate;
  }
}

std::vector<RealRoot> SturmChain::isolate(const Rational& a, const Rational& b,
                                          const Rational& rel_width) const {
  std::vector<RealRoot> out;
  std::vector<std::pair<Rational, Rational>> stack{{a, b}};
  const Rational two(2);
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int k = count(lo, hi);
    if (k == 0) {
      continue;
    }
    if (k == 1) {
      RealRoot root{lo, hi, std::nullopt};
      refine(root, rel_width);
      out.push_back(std::move(root));
      continue;
    }
    const Rational mid = (lo + hi) / two;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return x.hi < y.hi; });
  return out;
}

std::optional<RealRoot> SturmChain::extreme_root(bool largest, const Rational& a, const Rational& b,
                                                 const Rational& rel_width,
                                                 std::optional<double> hint) const {
  if (hint && std::isfinite(*hint)) {
    const double w = 1e-6 * std::fabs(*hint) + 1e-12;
    const Rational hlo(mpq_class(*hint - w));
    const Rational hhi(mpq_class(*hint + w));
    if (a < hlo && hhi < b && count(hlo, hhi) == 1 &&
        (largest ? count(hhi, b) == 0 : count(a, hlo) == 0)) {
      RealRoot root{hlo, hhi, std::nullopt};
      refine(root, rel_width);
      return root;
    }
  }
  Rational lo = a;
  Rational hi = b;
  int k = count(lo, hi);
  if (k == 0) {
    return std::nullopt;
  }
  const Rational two(2);
  while (k > 1) {
    const Rational mid = (lo + hi) / two;
    const int upper = count(mid, hi);
    if (largest ? upper >= 1 : upper == k) {
      lo = mid;
      k = upper;
    } else {
      hi = mid;
      k -= upper;
    }
  }
  RealRoot root{lo, hi, std::nullopt};
  refine(root, rel_width);
  return root;
}

std::vector<RealRoot> SturmChain::isolate_all(const Rational& rel_width) const {
  return isolate(-bound_, bound_, rel_width);
}

}  // namespace pseudospline
