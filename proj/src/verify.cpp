#include <array>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "pseudospline/api.hpp"
#include "pseudospline/genfun.hpp"

namespace pseudospline {

namespace {

// Accumulates one named check; the first failure's detail is kept.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& detail) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = detail();
    }
  }

  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string triple(int m, int n, int l) {
  std::ostringstream os;
  os << "(m=" << m << ", n=" << n << ", l=" << l << ")";
  return os.str();
}

// Pseudo-spline parameters of the published table: m in [2, 4], n in [1, 7], 2l' <= n, l' <= 3.
std::vector<std::array<int, 3>> table_grid() {
  std::vector<std::array<int, 3>> out;
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 7; ++n) {
      for (int lp = 0; lp <= 3 && 2 * lp <= n; ++lp) {
        out.push_back({m, n, 2 * lp + 1});
      }
    }
  }
  return out;
}

SuiteResult reproduction_suite() {
  SuiteResult out{"reproduction", {}};
  Check gen("generation degree equals n");
  Check rep("reproduction degree equals l");
  for (int m = 2; m <= 5; ++m) {
    for (int n = 1; n <= 7; ++n) {
      for (int l = 1; l <= n && l <= 7; l += 2) {
        const SchemeAnalysis a = analyze(make_pseudo_spline(m, n, l).a, m);
        gen.expect(a.generation_degree == n, [&] {
          return triple(m, n, l) + " has generation degree " + std::to_string(a.generation_degree);
        });
        rep.expect(a.reproduction_degree == l, [&] {
          return triple(m, n, l) + " has reproduction degree " + std::to_string(a.reproduction_degree);
        });
      }
    }
  }
  Check constants("constants are reproduced");
  Check lines("lines are reproduced at the shifted parameters");
  for (int m = 2; m <= 4; ++m) {
    for (int n = 1; n <= 5; ++n) {
      for (int l = 1; l <= 3; l += 2) {
        const SchemeSpec s = make_pseudo_spline(m, n, l);
        SubdivisionState c;
        c.finite = false;
        c.origin = -12;
        c.data.assign(25, Rational(7, 3));
        c.t0 = initial_parameter(s);
        const SubdivisionState c1 = refine(c, s);
        bool same = true;
        for (const auto& x : c1.data) {
          same = same && x == Rational(7, 3);
        }
        constants.expect(same, [&] { return triple(m, n, l); });

        const Rational alpha(5, 2);
        const Rational beta(-1, 3);
        SubdivisionState f;
        f.finite = false;
        f.origin = -12;
        f.t0 = initial_parameter(s);
        for (long j = -12; j <= 12; ++j) {
          f.data.push_back(alpha * f.parameter(j, m) + beta);
        }
        const SubdivisionState f1 = refine(refine(f, s), s);
        bool linear = !f1.data.empty();
        for (std::size_t i = 0; i < f1.data.size(); ++i) {
          const long j = f1.origin + static_cast<long>(i);
          linear = linear && f1.data[i] == alpha * f1.parameter(j, m) + beta;
        }
        lines.expect(linear, [&] { return triple(m, n, l); });
      }
    }
  }
  out.checks = {gen.done(), rep.done(), constants.done(), lines.done()};
  return out;
}

SuiteResult positivity_suite() {
  SuiteResult out{"positivity", {}};
  Check coeffs("generating function coefficients are positive");
  for (int m = 2; m <= 7; ++m) {
    for (int n = 0; n <= 8; ++n) {
      const GenFunExpansion g = taylor_g(m, n, 8);
      for (std::size_t k = 0; k < g.g.size(); ++k) {
        coeffs.expect(g.g[k].sign() > 0, [&] {
          return "g_" + std::to_string(k) + " for m=" + std::to_string(m) + ", n=" + std::to_string(n);
        });
      }
    }
  }
  Check strict("Fourier transform of b is strictly positive on the table grid");
  for (const auto& [m, n, l] : table_grid()) {
    const auto cert = certify_positivity(make_pseudo_spline(m, n, l).b);
    strict.expect(cert.status == PositivityStatus::strictly_positive,
                  [&] { return triple(m, n, l) + " is " + positivity_name(cert.status); });
  }
  out.checks = {coeffs.done(), strict.done()};
  return out;
}

SuiteResult rioul_suite() {
  SuiteResult out{"rioul", {}};
  Check dom("iterated masks peak at the center");
  for (const auto& [m, n, l] : table_grid()) {
    const LaurentPoly b = make_pseudo_spline(m, n, l).b;
    for (int level = 1; level <= 4; ++level) {
      const LaurentPoly bl = full_iterated_mask(b, m, level);
      const Rational center = bl.coeff(0);
      bool ok = true;
      for (const auto& c : bl.coeffs()) {
        ok = ok && c.abs() <= center;
      }
      dom.expect(ok, [&] { return triple(m, n, l) + " at level " + std::to_string(level); });
    }
  }
  out.checks = {dom.done()};
  return out;
}

SuiteResult oracle_suite() {
  SuiteResult out{"oracle", {}};
  Check window("window iteration matches the full iterated mask");
  Check limit("(b_{64,0})^(1/64) within 2% of rho");
  for (const auto& [m, n, l] : table_grid()) {
    const LaurentPoly b = make_pseudo_spline(m, n, l).b;
    if (b.high() < 1) {
      continue;
    }
    const FoldedMatrix f = folded_matrix(b, m);
    const auto windows = iterate_window(f.entries, 4);
    for (int level = 0; level <= 4; ++level) {
      const LaurentPoly full = full_iterated_mask(b, m, level);
      bool ok = true;
      for (int j = 0; j < f.dim; ++j) {
        ok = ok && full.coeff(j) == windows[static_cast<std::size_t>(level)][static_cast<std::size_t>(j)];
      }
      window.expect(ok, [&] { return triple(m, n, l) + " at level " + std::to_string(level); });
    }
    const SpectralRadius sr = spectral_radius(f.entries);
    const auto est = window_root(f.entries, kWindowCheckLevel);
    limit.expect(est && std::fabs(*est - sr.midpoint()) <= 0.02 * sr.midpoint(),
                 [&] { return triple(m, n, l); });
  }
  Check fold("folded and unfolded matrices give the same rho");
  for (int m = 2; m <= 4; ++m) {
    for (int p = 2; p <= 5; ++p) {
      const LaurentPoly b = make_pseudo_spline(m, 2 * p + 1, 2 * p + 1).b;
      const SpectralRadius a = spectral_radius(folded_matrix(b, m).entries);
      const Matrix u = unfolded_matrix(b, m);
      const SpectralRadius c = spectral_radius(u, u.size() / 2);
      const bool overlap = a.lo <= c.hi && c.lo <= a.hi;
      fold.expect(overlap, [&] { return "m=" + std::to_string(m) + ", p=" + std::to_string(p); });
    }
  }
  out.checks = {window.done(), limit.done(), fold.done()};
  return out;
}

SuiteResult dd_equivalence_suite() {
  SuiteResult out{"dd-equivalence", {}};
  Check primal("primal Dubuc-Deslauriers equals pseudo-spline (2l'+1, 2l'+1)");
  for (int m = 2; m <= 4; ++m) {
    for (int lp = 0; lp <= 2; ++lp) {
      primal.expect(equal_up_to_shift(make_dd_primal(m, lp).a, make_pseudo_spline(m, 2 * lp + 1, 2 * lp + 1).a),
                    [&] { return "m=" + std::to_string(m) + ", l'=" + std::to_string(lp); });
    }
  }
  Check lian("odd-arity interpolatory scheme equals pseudo-spline (2l', 2l'+1)");
  for (int lp = 1; lp <= 2; ++lp) {
    lian.expect(equal_up_to_shift(make_interpolatory_lian(3, lp).a, make_pseudo_spline(3, 2 * lp, 2 * lp + 1).a),
                [&] { return "m=3, l'=" + std::to_string(lp); });
  }
  Check interp("interpolatory masks satisfy a_{mj} = delta_{j,0}");
  for (int m = 2; m <= 4; ++m) {
    for (int lp = 0; lp <= 2; ++lp) {
      interp.expect(analyze(make_dd_primal(m, lp).a, m).interpolatory,
                    [&] { return "dd-primal m=" + std::to_string(m) + ", l'=" + std::to_string(lp); });
    }
  }
  for (int lp = 1; lp <= 2; ++lp) {
    interp.expect(analyze(make_interpolatory_lian(3, lp).a, 3).interpolatory,
                  [&] { return "lian m=3, l'=" + std::to_string(lp); });
  }
  out.checks = {primal.done(), lian.done(), interp.done()};
  return out;
}

SuiteResult dual_conjecture_suite() {
  SuiteResult out{"dual-conjecture", {}};
  Check eq("conjectured dual symbol equals the dual Lagrange symbol");
  for (int m = 2; m <= 3; ++m) {
    for (int lp = 1; lp <= 2; ++lp) {
      eq.expect(equal_up_to_shift(make_dd_dual_conjecture(m, 2 * lp + 1).a, make_dd_dual(m, lp).a),
                [&] { return "m=" + std::to_string(m) + ", l'=" + std::to_string(lp); });
    }
  }
  Check sym("dual symbols are even symmetric");
  for (int m = 2; m <= 3; ++m) {
    for (int lp = 0; lp <= 2; ++lp) {
      const Symmetry s = symmetry(make_dd_dual(m, lp).a);
      sym.expect(s.kind == SymmetryKind::even,
                 [&] { return "m=" + std::to_string(m) + ", l'=" + std::to_string(lp); });
    }
  }
  out.checks = {eq.done(), sym.done()};
  return out;
}

SuiteResult lp1_suite() {
  SuiteResult out{"lp1", {}};
  Check closed("l' = 1 closed form matches the exact regularity");
  Check nine("regularity is exactly 9 at n = 11");
  Check mono("monotone in m on either side of n = 11");
  for (int n = 2; n <= 11; ++n) {
    double prev = 0.0;
    for (int m = 2; m <= 7; ++m) {
      const RegularityReport r = exact_regularity(make_pseudo_spline(m, n, 3));
      const double cf = lp1_closed_form(m, n);
      closed.expect(std::fabs(r.regularity - cf) <= 1e-10, [&] {
        return "m=" + std::to_string(m) + ", n=" + std::to_string(n) + ": " + format_double(r.regularity) +
               " vs " + format_double(cf);
      });
      if (n == 11) {
        nine.expect(r.rho_exact && *r.rho_exact == Rational(m * m), [&] { return "m=" + std::to_string(m); });
      }
      if (m > 2 && n != 11) {
        mono.expect(n < 11 ? r.regularity < prev : r.regularity > prev,
                    [&] { return "m=" + std::to_string(m) + ", n=" + std::to_string(n); });
      }
      prev = r.regularity;
    }
  }
  // Beyond n = 11 the closed form increases with m.
  for (int n = 12; n <= 13; ++n) {
    for (int m = 3; m <= 7; ++m) {
      mono.expect(lp1_closed_form(m, n) > lp1_closed_form(m - 1, n),
                  [&] { return "closed form, m=" + std::to_string(m) + ", n=" + std::to_string(n); });
    }
  }
  out.checks = {closed.done(), nine.done(), mono.done()};
  return out;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"reproduction",   "positivity",      "rioul", "oracle",
                                              "dd-equivalence", "dual-conjecture", "lp1"};
  return names;
}

SuiteResult run_verify_suite(const std::string& name) {
  if (name == "reproduction") {
    return reproduction_suite();
  }
  if (name == "positivity") {
    return positivity_suite();
  }
  if (name == "rioul") {
    return rioul_suite();
  }
  if (name == "oracle") {
    return oracle_suite();
  }
  if (name == "dd-equivalence") {
    return dd_equivalence_suite();
  }
  if (name == "dual-conjecture") {
    return dual_conjecture_suite();
  }
  if (name == "lp1") {
    return lp1_suite();
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace pseudospline
