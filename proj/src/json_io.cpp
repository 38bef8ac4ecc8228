#include "pseudospline/json_io.hpp"

#include <stdexcept>

namespace pseudospline {

namespace {

PositivityStatus positivity_from_name(const std::string& name) {
  if (name == "strict") {
    return PositivityStatus::strictly_positive;
  }
  if (name == "nonneg") {
    return PositivityStatus::nonnegative_with_zero;
  }
  if (name == "indefinite") {
    return PositivityStatus::indefinite;
  }
  throw std::invalid_argument("unknown positivity status: " + name);
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(to_json(*v)) : Json(nullptr);
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<int> int_or_null(const Json& j) {
  return j.is_null() ? std::nullopt : std::optional<int>(j.get<int>());
}

}  // namespace

Json to_json(const Rational& x) { return x.str(); }

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) {
    coeffs.push_back(c.str());
  }
  return {{"offset", p.offset()}, {"coeffs", coeffs}};
}

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) {
    out.push_back(c.str());
  }
  return out;
}

Json to_json(const Matrix& M) {
  Json out = Json::array();
  for (const auto& row : M) {
    Json r = Json::array();
    for (const auto& x : row) {
      r.push_back(x.str());
    }
    out.push_back(r);
  }
  return out;
}

Json to_json(const SchemeSpec& s) {
  return {
      {"family", family_name(s.family)},
      {"m", s.m},
      {"n", optional_int(s.n)},
      {"l", optional_int(s.l)},
      {"omega", optional_json(s.omega)},
      {"tau", to_json(s.tau)},
      {"a", to_json(s.a)},
      {"b", to_json(s.b)},
      {"r", s.r},
  };
}

Json to_json(const RegularityReport& r) {
  return {
      {"r", r.r},
      {"m", r.m},
      {"p", r.p},
      {"char_poly", to_json(r.char_poly)},
      {"rho", {{"lo", to_json(r.rho_lo)}, {"hi", to_json(r.rho_hi)}, {"exact", optional_json(r.rho_exact)}}},
      {"regularity", r.regularity},
      {"display", display_value(r.regularity)},
      {"exact", r.exact},
      {"positivity", positivity_name(r.positivity.status)},
      {"positivity_poly", to_json(r.positivity.tpoly)},
      {"folded_matrix", to_json(r.folded.entries)},
      {"flagged", r.flagged},
      {"flag_reason", r.flag_reason.empty() ? Json(nullptr) : Json(r.flag_reason)},
      {"window_estimate", r.window_estimate ? Json(*r.window_estimate) : Json(nullptr)},
  };
}

Json to_json(const CardinalSamples& c) {
  Json points = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    points.push_back(Json::array({c.t_double(i), c.value_double(i)}));
  }
  return {
      {"level", c.level},
      {"support", {{"lo", to_json(c.support_lo)}, {"hi", to_json(c.support_hi)}}},
      {"points", std::move(points)},
  };
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) {
    throw std::invalid_argument("expected a rational string");
  }
  return Rational::parse(j.get<std::string>());
}

LaurentPoly laurent_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) {
    c.push_back(rational_from_json(x));
  }
  return LaurentPoly(j.at("offset").get<long>(), std::move(c));
}

UniPoly unipoly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j) {
    c.push_back(rational_from_json(x));
  }
  return UniPoly(std::move(c));
}

Matrix matrix_from_json(const Json& j) {
  Matrix out;
  for (const auto& row : j) {
    std::vector<Rational> r;
    for (const auto& x : row) {
      r.push_back(rational_from_json(x));
    }
    out.push_back(std::move(r));
  }
  return out;
}

SchemeSpec scheme_from_json(const Json& j) {
  SchemeSpec s;
  const auto family = parse_family(j.at("family").get<std::string>());
  if (!family) {
    throw std::invalid_argument("unknown family");
  }
  s.family = *family;
  s.m = j.at("m").get<int>();
  s.n = int_or_null(j.at("n"));
  s.l = int_or_null(j.at("l"));
  if (!j.at("omega").is_null()) {
    s.omega = rational_from_json(j.at("omega"));
  }
  s.tau = rational_from_json(j.at("tau"));
  s.a = laurent_from_json(j.at("a"));
  s.b = laurent_from_json(j.at("b"));
  s.r = j.at("r").get<int>();
  return s;
}

RegularityReport report_from_json(const Json& j) {
  RegularityReport r;
  r.r = j.at("r").get<int>();
  r.m = j.at("m").get<int>();
  r.p = j.at("p").get<int>();
  r.char_poly = unipoly_from_json(j.at("char_poly"));
  const Json& rho = j.at("rho");
  r.rho_lo = rational_from_json(rho.at("lo"));
  r.rho_hi = rational_from_json(rho.at("hi"));
  if (!rho.at("exact").is_null()) {
    r.rho_exact = rational_from_json(rho.at("exact"));
  }
  r.regularity = j.at("regularity").get<double>();
  r.exact = j.at("exact").get<bool>();
  r.positivity.status = positivity_from_name(j.at("positivity").get<std::string>());
  r.positivity.tpoly = unipoly_from_json(j.at("positivity_poly"));
  r.folded.m = r.m;
  r.folded.p = r.p;
  r.folded.entries = matrix_from_json(j.at("folded_matrix"));
  r.folded.dim = static_cast<int>(r.folded.entries.size());
  r.flagged = j.at("flagged").get<bool>();
  if (!j.at("flag_reason").is_null()) {
    r.flag_reason = j.at("flag_reason").get<std::string>();
  }
  if (!j.at("window_estimate").is_null()) {
    r.window_estimate = j.at("window_estimate").get<double>();
  }
  return r;
}

}  // namespace pseudospline
