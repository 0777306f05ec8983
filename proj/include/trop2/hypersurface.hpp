#pragma once

// Rank-one and rank-two tropical hypersurfaces.
//
// The rank-two hypersurface of f is the disjoint union of interiors
// int(Q_T) + int(R_S), where Q_T runs over support cells of the t-projection
// of trop2(f) in R_t^d and R_S over support cells of the u-projection of the
// restriction f_T in R_u^d (S a subset of T, |S| > 1).

#include "trop2/cells.hpp"
#include "trop2/core.hpp"
#include "trop2/polyhedron.hpp"
#include "trop2/puiseux.hpp"

#include <map>
#include <string>
#include <vector>

namespace trop2 {

using SupportSet = std::vector<ExponentVector>;  // sorted

struct TropPoly2 {
  std::size_t d = 0;
  std::map<ExponentVector, Rank2Value> coeffs;
};

struct TropPoly1 {
  std::size_t d = 0;
  std::map<ExponentVector, Rational> coeffs;
};


struct SupportCell1 {
  SupportSet support_set;
  Polyhedron cell;
};

struct EvalResult2 {
  Rank2Value value;
  SupportSet argmin;
};

struct EvalResult1 {
  Rational value;
  SupportSet argmin;
};

/// Value and argmin D_p(F) of the rank-two tropical polynomial at p.
EvalResult2 trop2_eval(const TropPoly2& f, const TropPoint2& p);
/// |D_p(F)| > 1.
bool is_in_hypersurface2(const TropPoly2& f, const TropPoint2& p);

EvalResult1 trop1_eval(const TropPoly1& f, const RationalVector& x);
bool is_in_hypersurface1(const TropPoly1& f, const RationalVector& x);

/// Coefficientwise val2. Throws ZeroCoefficient.
TropPoly2 tropicalize2(const LaurentPolynomial& f);
/// First (t) or second (u) component of every coefficient.
TropPoly1 project_poly(const TropPoly2& f, Axis axis);
/// Restriction f_T to the monomials of T.
TropPoly2 restrict_poly(const TropPoly2& f, const SupportSet& t);

/// Every support set with its support cell, singletons included, sorted by
/// (|S|, lex S).
std::vector<SupportCell1> support_cells1(const TropPoly1& f);
/// The cells of the rank-one hypersurface (|S| > 1).
std::vector<SupportCell1> hypersurface_cells1(const std::vector<SupportCell1>& all);
/// Cells of maximal dimension (d-1) of the rank-one hypersurface.
std::vector<SupportCell1> maximal_cells1(const std::vector<SupportCell1>& all);

/// Lex-polyhedral support cell of S in the rank-two sense.
LexPolyhedron support_lex_cell(const TropPoly2& f, const SupportSet& s);

struct DecompositionPiece {
  SupportSet t;  // support set of the t-projection
  SupportSet s;  // support set of the u-projection of f_T, subset of t
  PiecePolyhedron piece;
};

struct Rank2Decomposition {
  std::size_t d = 0;
  std::vector<DecompositionPiece> pieces;
};

Rank2Decomposition rank2_decompose(const TropPoly2& f);
Rank2Decomposition rank2_decompose(const LaurentPolynomial& f);

/// Closed pieces Q_T + R_S, deduplicated.
std::vector<PiecePolyhedron> closure2(const Rank2Decomposition& dec);

/// Point p lies in exactly one relative interior of a piece; returns its index.
std::vector<std::size_t> pieces_containing_interior(const Rank2Decomposition& dec, const TropPoint2& p);

/// Tangent cones {lambda (q - p)} of every hypersurface cell Q containing P.
/// Throws CellNotInComplex.
std::vector<Polyhedron> star_of_cell(const std::vector<SupportCell1>& cells, const SupportCell1& p);

/// Specialisation for coefficients free of u: pieces int(P_T) + int(cone of
/// P_S at P_T). Throws CoefficientDependsOnU.
Rank2Decomposition kk_decompose(const TropPoly2& f);
Rank2Decomposition kk_decompose(const LaurentPolynomial& f);

/// Exhaustive check of a decomposition on a grid (d = 2 only). The boxes
/// cover every crossing of two tie lines with a margin of one. Grid points
/// with |D_p| > 1 are exactly the points lying on a t tie line and a u tie
/// line of the same pair, so only those lines are walked. Each must lie in
/// exactly one piece interior; every piece's interior sample must have
/// |D_p| > 1.
struct GridCheck {
  Rational step;
  RationalVector t_lo, t_hi, u_lo, u_hi;
  std::size_t samples = 0;
  std::size_t grid_points = 0;
  std::vector<TropPoint2> failures;
  bool ok() const { return failures.empty(); }
};

GridCheck grid_check(const TropPoly2& f, const Rank2Decomposition& dec, const Rational& step);

std::string support_set_to_string(const SupportSet& s);
bool support_less(const SupportSet& a, const SupportSet& b);

}  // namespace trop2
