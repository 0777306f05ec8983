#include "trop2/io.hpp"

#include "trop2/error.hpp"

namespace trop2 {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) fail(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(std::string("field \"") + key + "\" must be a count");
  return v.get<std::size_t>();
}

ExponentVector exponent_from_json(const Json& j) {
  if (!j.is_array()) fail("exponent vector must be an array");
  ExponentVector s;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail("exponents must be integers");
    s.push_back(x.get<std::int64_t>());
  }
  return s;
}

Json constraints_to_json(const std::vector<Constraint>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) {
    Json a = Json::array();
    for (const auto& x : c.a) a.push_back(to_json(x));
    out.push_back(Json::array({a, to_json(c.b)}));
  }
  return out;
}

std::vector<Constraint> constraints_from_json(const Json& j, std::size_t n) {
  if (!j.is_array()) fail("constraint list must be an array");
  std::vector<Constraint> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_array()) fail("constraint must be [[a...], b]");
    if (row[0].size() != n) fail("constraint length differs from n");
    Constraint c;
    for (const auto& x : row[0]) c.a.push_back(rational_from_json(x));
    c.b = rational_from_json(row[1]);
    out.push_back(std::move(c));
  }
  return out;
}

Json optional_index(const std::optional<std::size_t>& k) { return k ? Json(*k + 1) : Json(nullptr); }

std::optional<std::size_t> optional_index_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_number_integer() || j.get<long long>() < 1) fail("variable index must be a positive integer or null");
  return j.get<std::size_t>() - 1;
}

Json row_to_json(const LinearRow& r) {
  Json a = Json::array();
  for (const auto& c : r.a) a.push_back(to_json(c));
  return {{"a", a}, {"b", to_json(r.b)}, {"text", row_to_string(r)}};
}

LinearRow row_from_json(const Json& j) {
  LinearRow r;
  for (const auto& c : array_field(j, "a")) r.a.push_back(puiseux_from_json(c));
  r.b = puiseux_from_json(field(j, "b"));
  return r;
}

std::vector<LinearRow> rows_from_json(const Json& j) {
  if (!j.is_array()) fail("row list must be an array");
  std::vector<LinearRow> out;
  for (const auto& r : j) out.push_back(row_from_json(r));
  return out;
}

}  // namespace

Json to_json(const Rational& x) { return format_rational(x); }

Json to_json(const Rank2Value& x) {
  if (x.is_zero()) return "inf";
  return Json::array({to_json(x.first()), to_json(x.second())});
}

Json to_json(const Polyhedron& p) {
  return {{"n", p.ambient_dim()}, {"le", constraints_to_json(p.inequalities())}, {"eq", constraints_to_json(p.equalities())}};
}

Json to_json(const LexPolyhedron& p) {
  Json hs = Json::array();
  for (const auto& h : p.halfspaces()) hs.push_back({{"s", h.s}, {"q", to_json(h.q)}});
  return {{"d", p.d()}, {"hs", hs}};
}

Json to_json(const PuiseuxPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"c", to_json(c)}, {"t", to_json(e.t)}, {"u", to_json(e.u)}});
  return out;
}

Json to_json(const LaurentPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [s, c] : f.terms) terms.push_back({{"exp", s}, {"coeff", to_json(c)}});
  return {{"d", f.d}, {"terms", terms}};
}

Json to_json(const TropPoly2& f) {
  Json terms = Json::array();
  for (const auto& [s, v] : f.coeffs) terms.push_back({{"exp", s}, {"val", to_json(v)}});
  return {{"d", f.d}, {"terms", terms}};
}

Json to_json(const SupportSet& s) {
  Json out = Json::array();
  for (const auto& e : s) out.push_back(e);
  return out;
}

Json to_json(const Rank2Decomposition& dec) {
  Json pieces = Json::array();
  for (const auto& p : dec.pieces)
    pieces.push_back({{"T", to_json(p.t)}, {"S", to_json(p.s)}, {"Qt", to_json(p.piece.t_part())},
                      {"Ru", to_json(p.piece.u_part())}});
  return {{"d", dec.d}, {"pieces", pieces}};
}

Json to_json(const Covector& c) {
  Json out = Json::array();
  for (const auto& [i, j] : c.edges) out.push_back(Json::array({i + 1, j + 1}));
  return out;
}

Json to_json(const GeneratorMatrix& v) {
  Json gens = Json::array();
  for (const auto& g : v.gens) {
    Json row = Json::array();
    for (const auto& x : g) row.push_back(to_json(x));
    gens.push_back(row);
  }
  return {{"d", v.d}, {"gens", gens}};
}

Json to_json(const ConeDecomposition& dec) {
  Json pieces = Json::array();
  for (const auto& p : dec.pieces)
    pieces.push_back({{"T", to_json(p.t)}, {"S", to_json(p.s)}, {"At", to_json(p.piece.t_part())},
                      {"Bu", to_json(p.piece.u_part())}});
  return {{"d", dec.d}, {"pieces", pieces}};
}

Json to_json(const BetaCertificate& c) {
  Json vs = Json::array();
  for (const auto& s : c.checked_vectors) vs.push_back(s);
  return {{"beta", to_json(c.beta)}, {"checked_vectors", vs}, {"all_nonzero", c.all_nonzero}};
}

Json to_json(const StableResult& r) {
  Json pieces = Json::array();
  for (const auto& p : r.pieces) pieces.push_back({{"dim", p.affine_dim()}, {"polyhedron", to_json(p)}});
  Json lifted = Json::array();
  for (const auto& p : r.lifted) lifted.push_back({{"Qt", to_json(p.t_part())}, {"Ru", to_json(p.u_part())}});
  return {{"method", r.method}, {"beta", to_json(r.beta)}, {"pieces", pieces}, {"lifted", lifted}};
}

Json to_json(const GoldfarbSit& gs) {
  auto rows = [](const std::vector<LinearRow>& rs) {
    Json out = Json::array();
    for (const auto& r : rs) out.push_back(row_to_json(r));
    return out;
  };
  Json rank2 = Json::array(), rank1 = Json::array();
  for (const auto& r : gs.rank2)
    rank2.push_back({{"lhs", optional_index(r.lhs)}, {"rhs", optional_index(r.rhs)}, {"offset", to_json(r.offset)},
                     {"text", row_to_string(r)}});
  for (const auto& r : gs.rank1)
    rank1.push_back({{"lhs", optional_index(r.lhs)}, {"rhs", optional_index(r.rhs)}, {"offset", to_json(r.offset)},
                     {"text", row_to_string(r)}});
  Json vertices = Json::array();
  for (const auto& v : gs.vertices) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_json(x));
    vertices.push_back(row);
  }
  return {{"d", gs.d},           {"ordinary", rows(gs.ordinary)}, {"rank2", rank2},      {"partial", rows(gs.partial)},
          {"rank1", rank1},      {"cube", rows(gs.cube)},         {"vertices", vertices}, {"tight", gs.tight}};
}

Json to_json(const std::vector<SupportCell1>& cells) {
  Json out = Json::array();
  for (const auto& c : cells)
    out.push_back({{"S", to_json(c.support_set)}, {"dim", c.cell.affine_dim()}, {"cell", to_json(c.cell)}});
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail("rational must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

Rank2Value rank2_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Rank2Value::zero();
  if (!j.is_array() || j.size() != 2) fail("rank-two value must be [a, b] or \"inf\"");
  return Rank2Value(rational_from_json(j[0]), rational_from_json(j[1]));
}

Polyhedron polyhedron_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  auto le = j.contains("le") ? constraints_from_json(j.at("le"), n) : std::vector<Constraint>{};
  auto eq = j.contains("eq") ? constraints_from_json(j.at("eq"), n) : std::vector<Constraint>{};
  return Polyhedron(n, std::move(le), std::move(eq));
}

LexPolyhedron lex_polyhedron_from_json(const Json& j) {
  const std::size_t d = size_field(j, "d");
  std::vector<LexHalfspace> hs;
  for (const auto& h : array_field(j, "hs")) {
    LexHalfspace x{exponent_from_json(field(h, "s")), rank2_from_json(field(h, "q"))};
    if (x.s.size() != d) fail("lex halfspace slope length differs from d");
    hs.push_back(std::move(x));
  }
  return LexPolyhedron(d, std::move(hs));
}

PuiseuxPoly puiseux_from_json(const Json& j) {
  if (j.is_string()) return parse_puiseux(j.get<std::string>());
  if (j.is_number_integer()) return PuiseuxPoly::constant(j.get<long>());
  if (!j.is_array()) fail("Puiseux coefficient must be text or a term list");
  PuiseuxPoly p;
  for (const auto& term : j) {
    Rational t = term.contains("t") ? rational_from_json(term.at("t")) : Rational(0);
    Rational u = term.contains("u") ? rational_from_json(term.at("u")) : Rational(0);
    p.add_term(rational_from_json(field(term, "c")), t, u);
  }
  return p;
}

LaurentPolynomial laurent_from_json(const Json& j) {
  LaurentPolynomial f;
  f.d = size_field(j, "d");
  for (const auto& term : array_field(j, "terms")) {
    auto s = exponent_from_json(field(term, "exp"));
    if (s.size() != f.d) fail("exponent length differs from d");
    f.add(s, puiseux_from_json(field(term, "coeff")));
  }
  return f;
}

TropPoly2 trop_poly2_from_json(const Json& j) {
  const auto& terms = array_field(j, "terms");
  bool valued = std::any_of(terms.begin(), terms.end(), [](const Json& t) { return t.contains("val"); });
  if (!valued) return tropicalize2(laurent_from_json(j));
  TropPoly2 f;
  f.d = size_field(j, "d");
  for (const auto& term : terms) {
    auto s = exponent_from_json(field(term, "exp"));
    if (s.size() != f.d) fail("exponent length differs from d");
    auto v = rank2_from_json(field(term, "val"));
    if (v.is_zero()) fail("coefficient valuation may not be inf");
    if (!f.coeffs.emplace(s, v).second) fail("repeated exponent " + exponent_to_string(s));
  }
  return f;
}

SupportSet support_set_from_json(const Json& j) {
  if (!j.is_array()) fail("support set must be an array");
  SupportSet s;
  for (const auto& e : j) s.push_back(exponent_from_json(e));
  return s;
}

Rank2Decomposition decomposition_from_json(const Json& j) {
  Rank2Decomposition dec;
  dec.d = size_field(j, "d");
  for (const auto& p : array_field(j, "pieces"))
    dec.pieces.push_back({support_set_from_json(field(p, "T")), support_set_from_json(field(p, "S")),
                          PiecePolyhedron(polyhedron_from_json(field(p, "Qt")), polyhedron_from_json(field(p, "Ru")))});
  return dec;
}

Covector covector_from_json(const Json& j) {
  if (!j.is_array()) fail("covector must be a list of [i, j] edges");
  Covector c;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        e[0].get<long long>() < 1 || e[1].get<long long>() < 1)
      fail("covector edge must be [i, j] with 1-based indices");
    c.edges.emplace_back(e[0].get<std::size_t>() - 1, e[1].get<std::size_t>() - 1);
  }
  std::sort(c.edges.begin(), c.edges.end());
  return c;
}

GeneratorMatrix generators_from_json(const Json& j) {
  GeneratorMatrix v;
  v.d = size_field(j, "d");
  for (const auto& g : array_field(j, "gens")) {
    if (!g.is_array()) fail("generator must be an array");
    TropPoint2 p;
    for (const auto& x : g) p.push_back(rank2_from_json(x));
    v.gens.push_back(std::move(p));
  }
  validate(v);
  return v;
}

ConeDecomposition cone_decomposition_from_json(const Json& j) {
  ConeDecomposition dec;
  dec.d = size_field(j, "d");
  for (const auto& p : array_field(j, "pieces"))
    dec.pieces.push_back({covector_from_json(field(p, "T")), covector_from_json(field(p, "S")),
                          PiecePolyhedron(polyhedron_from_json(field(p, "At")), polyhedron_from_json(field(p, "Bu")))});
  return dec;
}

BetaCertificate beta_certificate_from_json(const Json& j) {
  BetaCertificate c;
  c.beta = rational_from_json(field(j, "beta"));
  for (const auto& s : array_field(j, "checked_vectors")) c.checked_vectors.push_back(exponent_from_json(s));
  const Json& ok = field(j, "all_nonzero");
  if (!ok.is_boolean()) fail("all_nonzero must be a boolean");
  c.all_nonzero = ok.get<bool>();
  return c;
}

StableResult stable_result_from_json(const Json& j) {
  StableResult r;
  const Json& m = field(j, "method");
  if (!m.is_string()) fail("method must be a string");
  r.method = m.get<std::string>();
  r.beta = rational_from_json(field(j, "beta"));
  for (const auto& p : array_field(j, "pieces")) r.pieces.push_back(polyhedron_from_json(field(p, "polyhedron")));
  for (const auto& p : array_field(j, "lifted"))
    r.lifted.emplace_back(polyhedron_from_json(field(p, "Qt")), polyhedron_from_json(field(p, "Ru")));
  return r;
}

GoldfarbSit goldfarb_sit_from_json(const Json& j) {
  GoldfarbSit gs;
  gs.d = size_field(j, "d");
  gs.ordinary = rows_from_json(field(j, "ordinary"));
  gs.partial = rows_from_json(field(j, "partial"));
  gs.cube = rows_from_json(field(j, "cube"));
  for (const auto& r : array_field(j, "rank2"))
    gs.rank2.push_back({optional_index_from_json(field(r, "lhs")), optional_index_from_json(field(r, "rhs")),
                        rank2_from_json(field(r, "offset"))});
  for (const auto& r : array_field(j, "rank1"))
    gs.rank1.push_back({optional_index_from_json(field(r, "lhs")), optional_index_from_json(field(r, "rhs")),
                        rational_from_json(field(r, "offset"))});
  for (const auto& v : array_field(j, "vertices")) {
    if (!v.is_array()) fail("vertex must be an array");
    std::vector<PuiseuxPoly> x;
    for (const auto& c : v) x.push_back(puiseux_from_json(c));
    gs.vertices.push_back(std::move(x));
  }
  for (const auto& t : array_field(j, "tight")) {
    if (!t.is_array()) fail("tight set must be an array");
    gs.tight.push_back(t.get<std::vector<std::size_t>>());
  }
  return gs;
}

std::vector<SupportCell1> support_cells_from_json(const Json& j) {
  if (!j.is_array()) fail("cell list must be an array");
  std::vector<SupportCell1> out;
  for (const auto& c : j) out.push_back({support_set_from_json(field(c, "S")), polyhedron_from_json(field(c, "cell"))});
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace trop2
