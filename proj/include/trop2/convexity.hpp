#pragma once
// Rank-two tropical cones: sectors, covectors, covector cells and the
// decomposition of K cap T_2^d into block products A_T + B_S of rank-one
// covector cells. Polytopes are handled by homogenisation. Also the
// Goldfarb-Sit cube over (t,u).

#include "trop2/core.hpp"
#include "trop2/polyhedron.hpp"
#include "trop2/puiseux.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace trop2 {

struct GeneratorMatrix {
  std::size_t d = 0;
  std::vector<TropPoint2> gens;  // TropZero allowed, never a whole generator
};

/// Throws ValidationError on length mismatch or an all-TropZero generator.
void validate(const GeneratorMatrix& v);

/// Prepends the coordinate (0,0) to every generator.
GeneratorMatrix homogenize(const GeneratorMatrix& v);

/// Bipartite graph on [d] + [n]; edges (i, j) sorted lexicographically.
struct Covector {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  friend bool operator==(const Covector&, const Covector&) = default;
};

bool covector_less(const Covector& a, const Covector& b);
bool covector_subset(const Covector& small, const Covector& big);
/// No node of [d] isolated.
bool is_bounded(const Covector& c, std::size_t d);
std::string covector_to_string(const Covector& c);

/// p in the i-th sector of v: p_k - p_i <= v_k - v_i for every finite v_k.
bool in_sector(const TropPoint2& p, const TropPoint2& v, std::size_t i);
Covector covector_of_point(const TropPoint2& p, const GeneratorMatrix& v);
bool is_in_cone(const TropPoint2& p, const GeneratorMatrix& v);

/// Lex-halfspaces p_k - p_i <= v_k - v_i for (i,j) in S and finite v_k.
/// Throws IsolatedGenerator when some generator has no edge in S.
LexPolyhedron covector_cell(const Covector& s, const GeneratorMatrix& v);

/// Rank-one generators over R cup {inf}.
using Generators1 = std::vector<std::vector<std::optional<Rational>>>;

Generators1 project_generators(const GeneratorMatrix& v, Axis axis);

struct CovectorCell1 {
  Covector covector;
  Polyhedron cell;
};

/// All covector cells of the rank-one arrangement in R^d (every generator
/// has an edge), sorted by (size, lex).
std::vector<CovectorCell1> covector_cells1(std::size_t d, const Generators1& gens);

struct ConePiece {
  Covector t;
  Covector s;
  PiecePolyhedron piece;
};

struct ConeDecomposition {
  std::size_t d = 0;
  std::vector<ConePiece> pieces;
};

ConeDecomposition cone_decompose(const GeneratorMatrix& v);
std::vector<PiecePolyhedron> cone_closure(const ConeDecomposition& dec);

/// (t^{p_1} u^{p_2}, ...) per generator; TropZero becomes 0.
std::vector<std::vector<PuiseuxPoly>> monomial_lift(const std::vector<TropPoint2>& points);

/// a . x <= b over Puiseux coefficients.
struct LinearRow {
  std::vector<PuiseuxPoly> a;
  PuiseuxPoly b;
};

/// Tropical inequality x_lhs >= offset + x_rhs; an empty lhs stands for
/// infinity, an empty rhs for the constant offset alone.
struct TropRow2 {
  std::optional<std::size_t> lhs;
  std::optional<std::size_t> rhs;
  Rank2Value offset;
};

struct TropRow1 {
  std::optional<std::size_t> lhs;
  std::optional<std::size_t> rhs;
  Rational offset;
};

struct GoldfarbSit {
  std::size_t d = 0;
  std::vector<LinearRow> ordinary;   // 2d rows, pair j = rows 2j, 2j+1
  std::vector<TropRow2> rank2;
  std::vector<LinearRow> partial;    // u -> 1/2
  std::vector<TropRow1> rank1;
  std::vector<LinearRow> cube;       // system used for the vertices
  std::vector<std::vector<PuiseuxPoly>> vertices;
  std::vector<std::vector<std::size_t>> tight;  // tight rows of cube per vertex
};

/// Requires d >= 2.
GoldfarbSit goldfarb_sit(std::size_t d);

/// Valuation of a row over the positive orthant: c x_p <= c' x_q becomes
/// x_p >= val(c') - val(c) + x_q, c x_p <= b becomes x_p >= val(b) - val(c),
/// and -x_p <= 0 becomes inf >= x_p. Throws ValidationError for other shapes.
TropRow2 tropicalize_row(const LinearRow& r);

/// Every vertex has d tight rows, one per pair; flipping one pair gives
/// another vertex; vertices are distinct. Returns false otherwise.
bool check_cube_incidence(const GoldfarbSit& gs);

std::string row_to_string(const LinearRow& r);
std::string row_to_string(const TropRow2& r);
std::string row_to_string(const TropRow1& r);

}  // namespace trop2
