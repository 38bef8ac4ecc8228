#include "pseudospline/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pseudospline {

namespace {

void append_term(std::ostringstream& os, const Rational& c, const std::string& power, bool first) {
  if (first) {
    if (c.sign() < 0) {
      os << "-";
    }
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
  }
  const Rational mag = c.abs();
  if (power.empty()) {
    os << mag;
  } else if (mag != Rational(1)) {
    os << mag << "*" << power;
  } else {
    os << power;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) {
    c_.pop_back();
  }
}

Rational UniPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

Rational UniPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double UniPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + it->to_double();
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) {
    return {};
  }
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) {
    d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  }
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * inner + UniPoly::constant(*it);
  }
  return acc;
}

UniPoly UniPoly::truncated(std::size_t order) const {
  if (c_.size() <= order + 1) {
    return *this;
  }
  return UniPoly(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(order + 1)));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) {
    return *this;
  }
  const Rational inv = Rational(1) / leading();
  return *this * inv;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) {
    c_.resize(o.c_.size());
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] += o.c_[i];
  }
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) {
    c_.resize(o.c_.size());
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] -= o.c_[i];
  }
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      out[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) {
    c *= s;
  }
  return *this;
}

UniPoly operator-(const UniPoly& a) { return a * Rational(-1); }

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) {
      continue;
    }
    const std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    append_term(os, c, power, first);
    first = false;
  }
  return os.str();
}

UniDivision divmod(const UniPoly& a, const UniPoly& d) {
  if (d.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  if (a.degree() < d.degree()) {
    return {UniPoly(), a};
  }
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - d.degree() + 1));
  const Rational inv_lead = Rational(1) / d.leading();
  const auto dd = static_cast<std::size_t>(d.degree());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational q = rem[k + dd] * inv_lead;
    quo[k] = q;
    if (q.is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[k + j] -= q * d.coeffs()[j];
    }
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPoly pow(const UniPoly& p, unsigned k) {
  UniPoly out = UniPoly::constant(Rational(1));
  UniPoly base = p;
  while (k > 0) {
    if (k & 1U) {
      out *= base;
    }
    k >>= 1U;
    if (k > 0) {
      base *= base;
    }
  }
  return out;
}

UniPoly mul_truncated(const UniPoly& a, const UniPoly& b, std::size_t order) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> out(std::min(order + 1, a.coeffs().size() + b.coeffs().size() - 1));
  for (std::size_t i = 0; i < a.coeffs().size() && i < out.size(); ++i) {
    if (a.coeffs()[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < b.coeffs().size() && i + j < out.size(); ++j) {
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return UniPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long offset, std::vector<Rational> coeffs)
    : offset_(offset), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::constant(const Rational& c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(long exponent, const Rational& c) {
  return LaurentPoly(exponent, {c});
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) {
    c_.pop_back();
  }
  const auto first = std::find_if(c_.begin(), c_.end(), [](const Rational& r) { return !r.is_zero(); });
  if (first == c_.end()) {
    c_.clear();
    offset_ = 0;
    return;
  }
  offset_ += first - c_.begin();
  c_.erase(c_.begin(), first);
}

Rational LaurentPoly::coeff(long exponent) const {
  const long i = exponent - offset_;
  if (i < 0 || i >= static_cast<long>(c_.size())) {
    return Rational(0);
  }
  return c_[static_cast<std::size_t>(i)];
}

LaurentPoly LaurentPoly::shifted(long k) const {
  if (is_zero()) {
    return *this;
  }
  LaurentPoly out = *this;
  out.offset_ += k;
  return out;
}

LaurentPoly LaurentPoly::reversed() const {
  if (is_zero()) {
    return *this;
  }
  std::vector<Rational> r(c_.rbegin(), c_.rend());
  return LaurentPoly(-high(), std::move(r));
}

LaurentPoly LaurentPoly::upsampled(long m) const {
  if (m <= 0) {
    throw std::invalid_argument("upsampling factor must be positive");
  }
  if (is_zero()) {
    return *this;
  }
  std::vector<Rational> out((c_.size() - 1) * static_cast<std::size_t>(m) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[i * static_cast<std::size_t>(m)] = c_[i];
  }
  return LaurentPoly(offset_ * m, std::move(out));
}

LaurentPoly LaurentPoly::derivative() const {
  if (is_zero()) {
    return *this;
  }
  std::vector<Rational> d(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    d[i] = c_[i] * Rational(offset_ + static_cast<long>(i));
  }
  return LaurentPoly(offset_ - 1, std::move(d));
}

Rational LaurentPoly::eval(const Rational& z) const {
  if (is_zero()) {
    return Rational(0);
  }
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * z + *it;
  }
  if (offset_ >= 0) {
    return acc * pow(z, static_cast<unsigned>(offset_));
  }
  return acc / pow(z, static_cast<unsigned>(-offset_));
}

Rational LaurentPoly::derivative_at_one(int k) const {
  if (k < 0) {
    throw std::invalid_argument("derivative order must be nonnegative");
  }
  Rational acc(0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) {
      continue;
    }
    acc += c_[i] * falling_factorial(Rational(offset_ + static_cast<long>(i)), k);
  }
  return acc;
}

Rational LaurentPoly::sum() const {
  Rational acc(0);
  for (const auto& c : c_) {
    acc += c;
  }
  return acc;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) {
    return *this;
  }
  if (is_zero()) {
    return *this = o;
  }
  const long lo = std::min(low(), o.low());
  const long hi = std::max(high(), o.high());
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[static_cast<std::size_t>(offset_ - lo) + i] += c_[i];
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    out[static_cast<std::size_t>(o.offset_ - lo) + i] += o.c_[i];
  }
  offset_ = lo;
  c_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += o * Rational(-1); }

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    offset_ = 0;
    return *this;
  }
  for (auto& c : c_) {
    c *= s;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return LaurentPoly(a.offset_ + b.offset_, std::move(out));
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) {
      continue;
    }
    const long e = offset_ + static_cast<long>(i);
    const std::string power = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    append_term(os, c_[i], power, first);
    first = false;
  }
  return os.str();
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly out = LaurentPoly::constant(Rational(1));
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1U) {
      out = out * base;
    }
    k >>= 1U;
    if (k > 0) {
      base = base * base;
    }
  }
  return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& d) {
  if (d.is_zero()) {
    throw std::domain_error("division by the zero Laurent polynomial");
  }
  if (a.is_zero()) {
    return LaurentPoly();
  }
  if (a.length() < d.length()) {
    return std::nullopt;
  }
  // Synthetic division from the lowest coefficient upward.
  const auto& ac = a.coeffs();
  const auto& dc = d.coeffs();
  const std::size_t qlen = ac.size() - dc.size() + 1;
  std::vector<Rational> rem = ac;
  std::vector<Rational> q(qlen);
  const Rational inv0 = Rational(1) / dc[0];
  for (std::size_t i = 0; i < qlen; ++i) {
    q[i] = rem[i] * inv0;
    if (q[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < dc.size(); ++j) {
      rem[i + j] -= q[i] * dc[j];
    }
  }
  for (std::size_t i = qlen; i < rem.size(); ++i) {
    if (!rem[i].is_zero()) {
      return std::nullopt;
    }
  }
  return LaurentPoly(a.offset() - d.offset(), std::move(q));
}

std::optional<long> shift_between(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return a.is_zero() && b.is_zero() ? std::optional<long>(0) : std::nullopt;
  }
  if (a.coeffs() != b.coeffs()) {
    return std::nullopt;
  }
  return b.offset() - a.offset();
}

Symmetry symmetry(const LaurentPoly& a) {
  if (a.is_zero()) {
    return {};
  }
  const auto& c = a.coeffs();
  if (!std::equal(c.begin(), c.begin() + static_cast<long>(c.size() / 2), c.rbegin())) {
    return {};
  }
  const long twice = a.low() + a.high();
  if (c.size() % 2 == 1) {
    return {SymmetryKind::odd, twice / 2, twice};
  }
  // Even length: twice is odd, so twice - 1 = 2c exactly.
  return {SymmetryKind::even, (twice - 1) / 2, twice};
}

std::vector<UniPoly> chebyshev_t_shifted(int max_degree) {
  std::vector<UniPoly> t;
  if (max_degree < 0) {
    return t;
  }
  const UniPoly arg(std::vector<Rational>{Rational(1), Rational(-2)});  // 1 - 2t
  t.push_back(UniPoly::constant(Rational(1)));
  if (max_degree >= 1) {
    t.push_back(arg);
  }
  for (int j = 2; j <= max_degree; ++j) {
    t.push_back(Rational(2) * arg * t[static_cast<std::size_t>(j - 1)] - t[static_cast<std::size_t>(j - 2)]);
  }
  return t;
}

UniPoly fourier_as_tpoly(const LaurentPoly& b) {
  if (b.is_zero()) {
    return {};
  }
  const Symmetry s = symmetry(b);
  if (s.kind != SymmetryKind::odd || s.center != 0) {
    throw std::domain_error("expected an odd symmetric Laurent polynomial centered at 0");
  }
  const long p = b.high();
  const auto cheb = chebyshev_t_shifted(static_cast<int>(p));
  UniPoly q = UniPoly::constant(b.coeff(0));
  for (long j = 1; j <= p; ++j) {
    q += Rational(2) * b.coeff(j) * cheb[static_cast<std::size_t>(j)];
  }
  return q;
}

}  // namespace pseudospline
