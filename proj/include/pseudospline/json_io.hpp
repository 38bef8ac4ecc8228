#pragma once

#include <json.hpp>

#include "pseudospline/polynomial.hpp"
#include "pseudospline/rational.hpp"
#include "pseudospline/regularity.hpp"
#include "pseudospline/schemes.hpp"
#include "pseudospline/subdivision.hpp"

namespace pseudospline {

using Json = nlohmann::json;

Json to_json(const Rational& x);
Json to_json(const LaurentPoly& p);
/// Ascending coefficient strings.
Json to_json(const UniPoly& p);
Json to_json(const Matrix& M);
Json to_json(const SchemeSpec& s);
Json to_json(const RegularityReport& r);
/// {"level", "support": {"lo", "hi"}, "points": [[t, value], ...]} with float points.
Json to_json(const CardinalSamples& c);

Rational rational_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
UniPoly unipoly_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
SchemeSpec scheme_from_json(const Json& j);
RegularityReport report_from_json(const Json& j);

}  // namespace pseudospline
