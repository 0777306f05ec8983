#pragma once
// JSON interchange. Rationals are canonical "p/q" strings, rank-two values
// are ["p/q","r/s"] or "inf". Every emitted document parses back into an
// equal object. Malformed input raises ParseError.

#include "trop2/convexity.hpp"
#include "trop2/hypersurface.hpp"
#include "trop2/stable.hpp"

#include <json.hpp>

namespace trop2 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

Json to_json(const Rational& x);
Json to_json(const Rank2Value& x);
Json to_json(const Polyhedron& p);
Json to_json(const LexPolyhedron& p);
Json to_json(const PuiseuxPoly& p);
Json to_json(const LaurentPolynomial& f);
Json to_json(const TropPoly2& f);
Json to_json(const SupportSet& s);
Json to_json(const Rank2Decomposition& dec);
Json to_json(const Covector& c);
Json to_json(const GeneratorMatrix& v);
Json to_json(const ConeDecomposition& dec);
Json to_json(const BetaCertificate& c);
Json to_json(const StableResult& r);
Json to_json(const GoldfarbSit& gs);
Json to_json(const std::vector<SupportCell1>& cells);

Rational rational_from_json(const Json& j);
Rank2Value rank2_from_json(const Json& j);
Polyhedron polyhedron_from_json(const Json& j);
LexPolyhedron lex_polyhedron_from_json(const Json& j);
/// Accepts the term list or the text syntax.
PuiseuxPoly puiseux_from_json(const Json& j);
/// Terms carry "coeff" (Puiseux); see trop_poly2_from_json for "val".
LaurentPolynomial laurent_from_json(const Json& j);
/// Terms carry "val" (rank-two value), or "coeff" which is tropicalised.
TropPoly2 trop_poly2_from_json(const Json& j);
SupportSet support_set_from_json(const Json& j);
Rank2Decomposition decomposition_from_json(const Json& j);
Covector covector_from_json(const Json& j);
GeneratorMatrix generators_from_json(const Json& j);
ConeDecomposition cone_decomposition_from_json(const Json& j);
BetaCertificate beta_certificate_from_json(const Json& j);
StableResult stable_result_from_json(const Json& j);
GoldfarbSit goldfarb_sit_from_json(const Json& j);
std::vector<SupportCell1> support_cells_from_json(const Json& j);

/// Parses text; throws ParseError.
Json parse_json_text(const std::string& text);

}  // namespace trop2
