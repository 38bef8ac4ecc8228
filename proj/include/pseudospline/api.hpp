#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pseudospline/json_io.hpp"
#include "pseudospline/regularity.hpp"
#include "pseudospline/schemes.hpp"
#include "pseudospline/subdivision.hpp"

namespace pseudospline {

/// Family name plus raw parameters, as typed on the command line or sent to the service.
struct SchemeQuery {
  std::string family;
  int m = 0;
  std::optional<int> n;
  std::optional<int> l;
  std::optional<int> lprime;
  std::optional<Rational> omega;
  std::optional<LaurentPoly> mask;
};

/// Throws std::invalid_argument with a user-facing reason.
SchemeSpec build_scheme(const SchemeQuery& q);

/// Positional parameters per family:
///   pseudo m n l | bspline m n | dd-primal m l' | dd-dual m l' |
///   dd-dual-conjecture m n | lian m l' | tension m omega [l'] |
///   custom m offset c0 c1 ...
SchemeQuery query_from_positional(const std::string& family, const std::vector<std::string>& args);

/// Query-string form: family, m, n, l, lprime, omega, offset, coeffs (comma separated).
SchemeQuery query_from_params(const std::map<std::string, std::string>& params);

int parse_int(const std::string& text, const std::string& what);

/// Runs fn(i) for i in [0, count) on a few worker threads; results keep index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn fn) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) {
          out[i] = fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  for (const auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return out;
}

// Table of pseudo-spline regularities.

struct TableCell {
  int m = 2;
  int n = 0;
  int lprime = 0;
  RegularityReport report;
};

/// Cells with 2 l' <= n, as in the published table layout.
std::vector<TableCell> regularity_table(int m, int n_max, int lprime_max);
std::string table_text(const std::vector<TableCell>& cells, int lprime_max);
std::string table_csv(const std::vector<TableCell>& cells);
Json table_json(const std::vector<TableCell>& cells);

// Four-point scheme with tension.

struct SweepRow {
  Rational omega;
  RegularityReport report;
  double closed_form = 0.0;
};

/// 1 - log_m of the largest root of the folded 2x2 matrix, in closed form.
double tension_closed_form(int m, double omega);
inline constexpr int kMaxSweepSteps = 512;
std::vector<SweepRow> tension_sweep(int m, int steps);
std::string sweep_csv(const std::vector<SweepRow>& rows);
Json sweep_json(int m, const std::vector<SweepRow>& rows);

// Regularity of primal Dubuc-Deslauriers schemes joined by tension blends.

struct CurvePoint {
  int m = 2;
  int lprime = 0;
  Rational omega;
  double x = 0.0;  // l' - 1 + omega
  double regularity = 0.0;
  bool exact = false;
};

inline constexpr int kMaxCurveLprime = 30;
std::vector<CurvePoint> dd_curve(const std::vector<int>& arities, int lprime_max, int steps);
std::string curve_csv(const std::vector<CurvePoint>& points);

/// Header "t,value", 17 significant digits.
std::string samples_csv(const CardinalSamples& c);

/// %.17g
std::string format_double(double x);

// Verification suites.

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample when failed
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

const std::vector<std::string>& verify_suite_names();
SuiteResult run_verify_suite(const std::string& name);

/// Closed form for l' = 1: n - 2 - log_m(1/m^2 + (n+1)/12 (1 - 1/m^2)).
double lp1_closed_form(int m, int n);

}  // namespace pseudospline
