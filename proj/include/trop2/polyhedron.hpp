#pragma once

// Exact H-representation polyhedra in Q^n.
//
// A Polyhedron is immutable after construction. Feasibility, the implicit
// equalities, a relative-interior point and the affine dimension are computed
// together on first request and cached behind a std::once_flag, so concurrent
// queries on a shared instance are safe.

#include "trop2/core.hpp"
#include "trop2/lp.hpp"
#include "trop2/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace trop2 {

/// a.x <= b (inequality) or a.x = b (equality).
struct Constraint {
  RationalVector a;
  Rational b = 0;
};

namespace detail {
struct AnalysisCache;
}

class Polyhedron {
 public:
  /// The whole space Q^n.
  explicit Polyhedron(std::size_t n = 0);
  Polyhedron(std::size_t n, std::vector<Constraint> inequalities, std::vector<Constraint> equalities = {});

  static Polyhedron point(const RationalVector& x);

  std::size_t ambient_dim() const { return n_; }
  const std::vector<Constraint>& inequalities() const { return le_; }
  const std::vector<Constraint>& equalities() const { return eq_; }

  bool is_feasible() const;
  bool is_empty() const { return !is_feasible(); }
  /// -1 when empty.
  int affine_dim() const;
  /// Flags, per inequality, whether it holds with equality on the whole set.
  const std::vector<bool>& implicit_equalities() const;
  /// Throws EmptyPolyhedron.
  const RationalVector& rel_int_point() const;

  /// Equalities plus implicit inequalities: the affine hull.
  std::vector<Constraint> affine_hull_equalities() const;
  /// The linear space parallel to the affine hull, as an H-representation.
  Polyhedron direction_space() const;

  bool contains_point(const RationalVector& x) const;
  /// Equalities and implicit equalities hold; every other inequality is strict.
  bool relative_interior_contains(const RationalVector& x) const;

  LpResult maximize(const RationalVector& objective) const;

  Polyhedron with_inequality(RationalVector a, Rational b) const;
  Polyhedron with_equality(RationalVector a, Rational b) const;
  Polyhedron translated(const RationalVector& v) const;

  std::string to_string() const;

 private:
  const detail::AnalysisCache& analyzed() const;

  std::size_t n_ = 0;
  std::vector<Constraint> le_;
  std::vector<Constraint> eq_;
  std::shared_ptr<detail::AnalysisCache> cache_;
};

/// Concatenates the constraint lists. Throws DimensionMismatch.
Polyhedron intersect(const Polyhedron& p, const Polyhedron& q);

bool lp_feasible(const Polyhedron& p);
int affine_dim(const Polyhedron& p);
RationalVector rel_int_point(const Polyhedron& p);

/// inner is a subset of outer (per-constraint LP).
bool contains(const Polyhedron& outer, const Polyhedron& inner);
/// Mutual containment. Throws DimensionMismatch.
bool poly_equal(const Polyhedron& p, const Polyhedron& q);

/// Feasibility of p together with strict inequalities a.x < b.
bool feasible_with_strict(const Polyhedron& p, const std::vector<Constraint>& strict);

/// region is a subset of the union of the pieces (exact, by recursive set
/// difference with strict inequalities).
bool covered_by_union(const Polyhedron& region, const std::vector<Polyhedron>& pieces);
/// Set equality of two finite unions.
bool union_equal(const std::vector<Polyhedron>& a, const std::vector<Polyhedron>& b);

/// Rank of the direction space of aff(p) + aff(q), i.e. dim(p + q) for nonempty p, q.
int minkowski_sum_dim(const Polyhedron& p, const Polyhedron& q);

/// t_part x u_part in R^{2d}: the t-block and u-block never mix coordinates.
class PiecePolyhedron {
 public:
  PiecePolyhedron(Polyhedron t_part, Polyhedron u_part);

  std::size_t d() const { return t_.ambient_dim(); }
  const Polyhedron& t_part() const { return t_; }
  const Polyhedron& u_part() const { return u_; }

  bool is_empty() const { return t_.is_empty() || u_.is_empty(); }
  int affine_dim() const;
  bool contains_point(const TropPoint2& p) const;
  bool relative_interior_contains(const TropPoint2& p) const;
  /// The same set in block coordinates [t-block | u-block] of R^{2d}.
  Polyhedron as_block_polyhedron() const;
  PiecePolyhedron translated(const RationalVector& t_shift, const RationalVector& u_shift) const;

 private:
  Polyhedron t_;
  Polyhedron u_;
};

PiecePolyhedron direct_sum(const Polyhedron& tp, const Polyhedron& up);
bool piece_equal(const PiecePolyhedron& a, const PiecePolyhedron& b);
bool piece_contains(const PiecePolyhedron& outer, const PiecePolyhedron& inner);
PiecePolyhedron intersect(const PiecePolyhedron& a, const PiecePolyhedron& b);

/// Drops pieces equal to an earlier one (order preserved).
std::vector<PiecePolyhedron> dedupe_pieces(const std::vector<PiecePolyhedron>& pieces);
/// Keeps pieces not contained in another piece (equal pieces kept once).
std::vector<PiecePolyhedron> maximal_pieces(const std::vector<PiecePolyhedron>& pieces);
std::vector<Polyhedron> dedupe_polyhedra(const std::vector<Polyhedron>& polys);

/// <s,p> <=_lex q.
struct LexHalfspace {
  ExponentVector s;
  Rank2Value q;
};

class LexPolyhedron {
 public:
  explicit LexPolyhedron(std::size_t d = 0, std::vector<LexHalfspace> halfspaces = {});

  std::size_t d() const { return d_; }
  const std::vector<LexHalfspace>& halfspaces() const { return hs_; }

  /// First-coordinate system s.p_t <= q_1 (the image under the t-projection
  /// contains the lex set, with equality on the tight part).
  Polyhedron t_system() const;

  friend LexPolyhedron intersect(const LexPolyhedron& a, const LexPolyhedron& b);

 private:
  std::size_t d_;
  std::vector<LexHalfspace> hs_;
};

/// Requires p finite.
bool lex_member(const LexPolyhedron& lp, const TropPoint2& p);

}  // namespace trop2
