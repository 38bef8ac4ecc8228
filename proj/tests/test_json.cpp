#include <doctest.h>

#include "pseudospline/api.hpp"
#include "pseudospline/json_io.hpp"

using namespace pseudospline;

namespace {

std::string reserialized(const Json& j, Json (*roundtrip)(const Json&)) { return roundtrip(j).dump(); }

}  // namespace

TEST_CASE("rationals and polynomials round-trip") {
  for (const Rational& x : {Rational(0), Rational(-7, 3), pow(Rational(10), 40) / Rational(3)}) {
    CHECK(rational_from_json(to_json(x)) == x);
  }
  const LaurentPoly p(-2, {Rational(1, 2), Rational(0), Rational(-3)});
  CHECK(to_json(p) == Json::parse(R"({"coeffs":["1/2","0","-3"],"offset":-2})"));
  CHECK(laurent_from_json(to_json(p)) == p);
  const UniPoly u({Rational(1), Rational(0), Rational(5, 4)});
  CHECK(to_json(u) == Json::parse(R"(["1","0","5/4"])"));
  CHECK(unipoly_from_json(to_json(u)) == u);
  const Matrix M{{Rational(1), Rational(2, 3)}, {Rational(0), Rational(-1)}};
  CHECK(matrix_from_json(to_json(M)) == M);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), std::invalid_argument);
}

TEST_CASE("scheme documents round-trip byte-identically") {
  const std::vector<SchemeSpec> schemes{make_pseudo_spline(3, 3, 3), make_bspline(4, 2), make_dd_dual(2, 1),
                                        make_tension(3, Rational(1, 4)), make_interpolatory_lian(5, 1),
                                        make_custom(2, LaurentPoly(0, {Rational(1), Rational(1)}))};
  for (const auto& s : schemes) {
    const Json j = to_json(s);
    CHECK(scheme_from_json(j) == s);
    CHECK(reserialized(j, [](const Json& x) { return to_json(scheme_from_json(x)); }) == j.dump());
  }
  const Json j = to_json(make_pseudo_spline(2, 1, 1));
  for (const char* key : {"family", "m", "n", "l", "omega", "tau", "a", "b", "r"}) {
    CHECK(j.contains(key));
  }
}

TEST_CASE("regularity reports round-trip byte-identically") {
  for (const auto& s : {make_pseudo_spline(2, 2, 3), make_pseudo_spline(4, 7, 7), make_tension(2, Rational(1, 2)),
                        make_bspline(3, 2), make_tension(3, Rational(1))}) {
    const Json j = to_json(exact_regularity(s));
    CHECK(reserialized(j, [](const Json& x) { return to_json(report_from_json(x)); }) == j.dump());
    for (const char* key : {"r", "char_poly", "rho", "regularity", "exact", "positivity", "display"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["rho"].contains("lo"));
    CHECK(j["rho"].contains("hi"));
    CHECK(j["rho"].contains("exact"));
  }
  const Json r = to_json(exact_regularity(make_pseudo_spline(2, 2, 3)));
  CHECK(r["rho"]["exact"] == "7/4");
  CHECK(r["positivity"] == "strict");
  CHECK(r["display"] == "1.19265");
}

TEST_CASE("sample documents carry float points and a rational support") {
  const Json j = to_json(cardinal_samples(make_bspline(2, 1), 2));
  CHECK(j["support"]["lo"] == "0");
  CHECK(j["support"]["hi"] == "2");
  CHECK(j["points"][3] == Json::array({1.0, 1.0}));
}
