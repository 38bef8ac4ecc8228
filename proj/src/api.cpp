#include "pseudospline/api.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace pseudospline {

namespace {

int require(const std::optional<int>& v, const char* what) {
  if (!v) {
    throw std::invalid_argument(std::string("missing parameter ") + what);
  }
  return *v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) {
      out.push_back(cur);
    }
  }
  return out;
}

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + " must be a rational number, got '" + text + "'");
  }
}

LaurentPoly mask_from(long offset, const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) {
    c.push_back(parse_rational(s, "mask coefficient"));
  }
  return LaurentPoly(offset, std::move(c));
}

}  // namespace

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument(what + " must be an integer, got '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument(what + " must be an integer, got '" + text + "'");
  }
  return value;
}

SchemeSpec build_scheme(const SchemeQuery& q) {
  const auto family = parse_family(q.family);
  if (!family) {
    throw std::invalid_argument("unknown family '" + q.family + "'");
  }
  switch (*family) {
    case Family::pseudo:
      return make_pseudo_spline(q.m, require(q.n, "n"), require(q.l, "l"));
    case Family::bspline:
      return make_bspline(q.m, require(q.n, "n"));
    case Family::dd_primal:
      return make_dd_primal(q.m, require(q.lprime, "lprime"));
    case Family::dd_dual:
      return make_dd_dual(q.m, require(q.lprime, "lprime"));
    case Family::dd_dual_conjecture:
      return make_dd_dual_conjecture(q.m, require(q.n, "n"));
    case Family::lian:
      return make_interpolatory_lian(q.m, require(q.lprime, "lprime"));
    case Family::tension:
      if (!q.omega) {
        throw std::invalid_argument("missing parameter omega");
      }
      return make_dd_tension(q.m, q.lprime.value_or(1), *q.omega);
    case Family::custom:
      if (!q.mask) {
        throw std::invalid_argument("missing mask coefficients");
      }
      return make_custom(q.m, *q.mask);
  }
  throw std::invalid_argument("unknown family");
}

SchemeQuery query_from_positional(const std::string& family, const std::vector<std::string>& args) {
  SchemeQuery q;
  q.family = family;
  const auto f = parse_family(family);
  if (!f) {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  const auto need = [&](std::size_t lo, std::size_t hi, const char* usage) {
    if (args.size() < lo || args.size() > hi) {
      throw std::invalid_argument(std::string("usage: ") + family + " " + usage);
    }
  };
  switch (*f) {
    case Family::pseudo:
      need(3, 3, "m n l");
      q.n = parse_int(args[1], "n");
      q.l = parse_int(args[2], "l");
      break;
    case Family::bspline:
      need(2, 2, "m n");
      q.n = parse_int(args[1], "n");
      break;
    case Family::dd_primal:
    case Family::dd_dual:
    case Family::lian:
      need(2, 2, "m lprime");
      q.lprime = parse_int(args[1], "lprime");
      break;
    case Family::dd_dual_conjecture:
      need(2, 2, "m n");
      q.n = parse_int(args[1], "n");
      break;
    case Family::tension:
      need(2, 3, "m omega [lprime]");
      q.omega = parse_rational(args[1], "omega");
      if (args.size() == 3) {
        q.lprime = parse_int(args[2], "lprime");
      }
      break;
    case Family::custom:
      need(3, 4096, "m offset c0 c1 ...");
      q.mask = mask_from(parse_int(args[1], "offset"), std::vector<std::string>(args.begin() + 2, args.end()));
      break;
  }
  q.m = parse_int(args[0], "m");
  return q;
}

SchemeQuery query_from_params(const std::map<std::string, std::string>& params) {
  const auto get = [&](const char* key) -> std::optional<std::string> {
    const auto it = params.find(key);
    return it == params.end() ? std::nullopt : std::optional<std::string>(it->second);
  };
  SchemeQuery q;
  q.family = get("family").value_or("");
  if (q.family.empty()) {
    throw std::invalid_argument("missing parameter family");
  }
  const auto m = get("m");
  if (!m) {
    throw std::invalid_argument("missing parameter m");
  }
  q.m = parse_int(*m, "m");
  if (const auto v = get("n")) {
    q.n = parse_int(*v, "n");
  }
  if (const auto v = get("l")) {
    q.l = parse_int(*v, "l");
  }
  if (const auto v = get("lprime")) {
    q.lprime = parse_int(*v, "lprime");
  }
  if (const auto v = get("omega")) {
    q.omega = parse_rational(*v, "omega");
  }
  if (const auto v = get("coeffs")) {
    q.mask = mask_from(parse_int(get("offset").value_or("0"), "offset"), split(*v, ','));
  }
  return q;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<TableCell> regularity_table(int m, int n_max, int lprime_max) {
  if (m < 2 || m > 9) {
    throw std::invalid_argument("table arity must be in [2, 9]");
  }
  if (n_max < 1 || n_max > 12) {
    throw std::invalid_argument("n_max must be in [1, 12]");
  }
  if (lprime_max < 0 || lprime_max > 6) {
    throw std::invalid_argument("lprime_max must be in [0, 6]");
  }
  std::vector<TableCell> cells;
  for (int n = 1; n <= n_max; ++n) {
    for (int lp = 0; lp <= lprime_max && 2 * lp <= n; ++lp) {
      cells.push_back({m, n, lp, {}});
    }
  }
  auto reports = parallel_map<RegularityReport>(cells.size(), [&](std::size_t i) {
    return exact_regularity(make_pseudo_spline(m, cells[i].n, 2 * cells[i].lprime + 1));
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    cells[i].report = std::move(reports[i]);
  }
  return cells;
}

std::string table_text(const std::vector<TableCell>& cells, int lprime_max) {
  std::ostringstream os;
  if (cells.empty()) {
    return "";
  }
  os << "m = " << cells.front().m << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%6s", "");
  os << buf;
  for (int lp = 0; lp <= lprime_max; ++lp) {
    std::snprintf(buf, sizeof buf, "%12s", ("l'=" + std::to_string(lp)).c_str());
    os << buf;
  }
  os << "\n";
  int row = -1;
  int col = 0;
  for (const auto& c : cells) {
    if (c.n != row) {
      if (row != -1) {
        os << "\n";
      }
      row = c.n;
      col = 0;
      std::snprintf(buf, sizeof buf, "%-6s", ("n=" + std::to_string(c.n)).c_str());
      os << buf;
    }
    for (; col < c.lprime; ++col) {
      std::snprintf(buf, sizeof buf, "%12s", "");
      os << buf;
    }
    const std::string mark = c.report.exact ? "" : "*";
    std::snprintf(buf, sizeof buf, "%12s", (display_value(c.report.regularity) + mark).c_str());
    os << buf;
    ++col;
  }
  os << "\n";
  return os.str();
}

std::string table_csv(const std::vector<TableCell>& cells) {
  std::ostringstream os;
  os << "m,n,lprime,regularity\n";
  for (const auto& c : cells) {
    os << c.m << "," << c.n << "," << c.lprime << "," << display_value(c.report.regularity) << "\n";
  }
  return os.str();
}

Json table_json(const std::vector<TableCell>& cells) {
  Json rows = Json::array();
  for (const auto& c : cells) {
    rows.push_back({{"m", c.m}, {"n", c.n}, {"lprime", c.lprime}, {"report", to_json(c.report)}});
  }
  return {{"cells", rows}};
}

double tension_closed_form(int m, double omega) {
  const double m2 = static_cast<double>(m) * m;
  const double m3 = m2 * m;
  const double m4 = m2 * m2;
  const double D = (4 * m4 - 24 * m3 + 37 * m2 - 12 * m + 4) * omega * omega -
                   6 * (2 * m4 - 3 * m3 + 4 * m2) * omega + 9 * m4;
  const double rho = (3 * m2 - 2 * m2 * omega + 3 * m * omega + 2 * omega + std::sqrt(D)) / (6 * m2);
  return 1.0 - std::log(rho) / std::log(static_cast<double>(m));
}

std::vector<SweepRow> tension_sweep(int m, int steps) {
  if (steps < 2 || steps > kMaxSweepSteps) {
    throw std::invalid_argument("steps must be in [2, " + std::to_string(kMaxSweepSteps) + "]");
  }
  if (m < 2 || m > kMaxArity) {
    throw std::invalid_argument("arity must be in [2, " + std::to_string(kMaxArity) + "]");
  }
  return parallel_map<SweepRow>(static_cast<std::size_t>(steps), [&](std::size_t i) {
    SweepRow row;
    row.omega = Rational(static_cast<long>(i), steps - 1);
    row.report = exact_regularity(make_tension(m, row.omega));
    row.closed_form = tension_closed_form(m, row.omega.to_double());
    return row;
  });
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "omega,rho,regularity\n";
  for (const auto& r : rows) {
    const double rho = ((r.report.rho_lo + r.report.rho_hi) / Rational(2)).to_double();
    os << format_double(r.omega.to_double()) << "," << format_double(rho) << ","
       << format_double(r.report.regularity) << "\n";
  }
  return os.str();
}

Json sweep_json(int m, const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({
        {"omega", to_json(r.omega)},
        {"omega_float", r.omega.to_double()},
        {"rho", {{"lo", to_json(r.report.rho_lo)}, {"hi", to_json(r.report.rho_hi)},
                 {"exact", r.report.rho_exact ? Json(r.report.rho_exact->str()) : Json(nullptr)}}},
        {"regularity", r.report.regularity},
        {"display", display_value(r.report.regularity)},
        {"exact", r.report.exact},
        {"closed_form", r.closed_form},
    });
  }
  return {{"m", m}, {"rows", out}};
}

std::vector<CurvePoint> dd_curve(const std::vector<int>& arities, int lprime_max, int steps) {
  if (lprime_max < 0 || lprime_max > kMaxCurveLprime) {
    throw std::invalid_argument("lprime_max must be in [0, " + std::to_string(kMaxCurveLprime) + "]");
  }
  if (steps < 1 || steps > 64) {
    throw std::invalid_argument("steps must be in [1, 64]");
  }
  std::vector<CurvePoint> points;
  for (const int m : arities) {
    if (m < 2 || m > 7) {
      throw std::invalid_argument("curve arities must be in [2, 7]");
    }
    points.push_back({m, 0, Rational(1), 0.0, 0.0, false});
    for (int lp = 1; lp <= lprime_max; ++lp) {
      for (int k = 1; k <= steps; ++k) {
        const Rational omega(k, steps);
        points.push_back({m, lp, omega, lp - 1 + omega.to_double(), 0.0, false});
      }
    }
  }
  auto reports = parallel_map<RegularityReport>(points.size(), [&](std::size_t i) {
    const CurvePoint& p = points[i];
    // Whole-l' nodes are the Dubuc-Deslauriers schemes themselves.
    if (p.omega == Rational(1)) {
      return exact_regularity(make_dd_primal(p.m, p.lprime));
    }
    return exact_regularity(make_dd_tension(p.m, p.lprime, p.omega));
  });
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i].regularity = reports[i].regularity;
    points[i].exact = reports[i].exact;
  }
  return points;
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
  std::ostringstream os;
  os << "m,lprime,omega,x,regularity,exact\n";
  for (const auto& p : points) {
    os << p.m << "," << p.lprime << "," << p.omega.str() << "," << format_double(p.x) << ","
       << format_double(p.regularity) << "," << (p.exact ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string samples_csv(const CardinalSamples& c) {
  std::string out = "t,value\n";
  out.reserve(c.size() * 44);
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += format_double(c.t_double(i));
    out += ',';
    out += format_double(c.value_double(i));
    out += '\n';
  }
  return out;
}

double lp1_closed_form(int m, int n) {
  const double m2 = static_cast<double>(m) * m;
  const double inner = 1.0 / m2 + (n + 1) / 12.0 * (1.0 - 1.0 / m2);
  return n - 2 - std::log(inner) / std::log(static_cast<double>(m));
}

}  // namespace pseudospline
