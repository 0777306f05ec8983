#include "random.hpp"
#include "support.hpp"
#include "trop2/error.hpp"
#include "trop2/lp.hpp"
#include "trop2/polyhedron.hpp"

#include <gtest/gtest.h>

using namespace trop2;
using namespace trop2::testing;

namespace {

struct Row {
  RationalVector a;
  Rational b;
};

// Gaussian elimination on a square system; nullopt when singular.
std::optional<RationalVector> solve_square(std::vector<Row> rows) {
  const std::size_t n = rows.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && rows[piv].a[c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(rows[c], rows[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || rows[r].a[c] == 0) continue;
      Rational f = rows[r].a[c] / rows[c].a[c];
      for (std::size_t k = 0; k < n; ++k) rows[r].a[k] -= f * rows[c].a[k];
      rows[r].b -= f * rows[c].b;
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rows[i].b / rows[i].a[i];
  return x;
}

// Vertices of {rows} intersected with the box |x_i| <= M, by trying every
// square subsystem.
std::vector<RationalVector> brute_vertices(std::size_t n, std::vector<Row> rows, const Rational& big) {
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, 0);
    e[i] = 1;
    rows.push_back({e, big});
    e[i] = -1;
    rows.push_back({e, big});
  }
  std::vector<RationalVector> out;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t from) {
    if (k == n) {
      std::vector<Row> sys;
      for (auto i : pick) sys.push_back(rows[i]);
      auto x = solve_square(sys);
      if (!x) return;
      for (const auto& r : rows)
        if (dot(r.a, *x) > r.b) return;
      out.push_back(*x);
      return;
    }
    for (std::size_t i = from; i < rows.size(); ++i) {
      pick[k] = i;
      rec(k + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

Polyhedron from_rows(std::size_t n, const std::vector<Row>& rows) {
  std::vector<Constraint> le;
  for (const auto& r : rows) le.push_back({r.a, r.b});
  return Polyhedron(n, le);
}

std::vector<Row> random_rows(Random& rng, std::size_t n, std::size_t m) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector a(n);
    for (auto& x : a) x = rng.integer(-3, 3);
    rows.push_back({a, rng.integer(-4, 4)});
  }
  return rows;
}

}  // namespace

TEST(Lp, SmallProblems) {
  // max x + y, x + 2y <= 4, 3x + y <= 6, x, y >= 0  ->  (8/5, 6/5), value 14/5
  std::vector<LinearConstraint> cs{{vec({1, 2}), Relation::LessEqual, 4},
                                   {vec({3, 1}), Relation::LessEqual, 6},
                                   {vec({1, 0}), Relation::GreaterEqual, 0},
                                   {vec({0, 1}), Relation::GreaterEqual, 0}};
  auto r = maximize(2, cs, vec({1, 1}));
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rational(14, 5));
  EXPECT_EQ(r.x, (RationalVector{Rational(8, 5), Rational(6, 5)}));
  EXPECT_EQ(maximize(2, cs, vec({-1, 0})).value, 0);
  EXPECT_EQ(maximize(1, {{vec({1}), Relation::GreaterEqual, 0}}, vec({1})).status, LpStatus::Unbounded);
  EXPECT_EQ(find_feasible_point(1, {{vec({1}), Relation::GreaterEqual, 0}, {vec({1}), Relation::LessEqual, -1}}).status,
            LpStatus::Infeasible);
  auto eq = find_feasible_point(2, {{vec({1, 1}), Relation::Equal, 3}, {vec({1, -1}), Relation::Equal, 1}});
  ASSERT_EQ(eq.status, LpStatus::Optimal);
  EXPECT_EQ(eq.x, vec({2, 1}));
}

TEST(Lp, MatrixRank) {
  EXPECT_EQ(matrix_rank({vec({1, 2}), vec({2, 4})}), 1u);
  EXPECT_EQ(matrix_rank({vec({1, 2, 0}), vec({0, 1, 1}), vec({1, 3, 1})}), 2u);
  EXPECT_EQ(matrix_rank({}), 0u);
}

TEST(Polyhedron, Feasibility) {
  EXPECT_FALSE(lp_feasible(hpoly(1, {{vec({-1}), 0}, {vec({1}), -1}}, {})));
  EXPECT_TRUE(lp_feasible(Polyhedron(2)));
  // t-part of the cell of {(0,0),(1,0),(0,1)} for x1 + t x2 + t^2 u: the point (2,1)
  auto cell = hpoly(2, {}, {{vec({1, 0}), 2}, {vec({0, 1}), 1}});
  EXPECT_TRUE(lp_feasible(cell));
  EXPECT_EQ(affine_dim(cell), 0);
}

TEST(Polyhedron, AffineDimension) {
  EXPECT_EQ(affine_dim(Polyhedron::point(vec({3, 4}))), 0);
  EXPECT_EQ(affine_dim(hpoly(2, {}, {{vec({1, 0}), 0}})), 1);
  EXPECT_EQ(affine_dim(hpoly(2, {{vec({-1, 0}), -2}}, {{vec({0, 1}), 1}})), 1);  // ray x >= 2, y = 1
  EXPECT_EQ(affine_dim(hpoly(2, {{vec({1, 0}), 0}, {vec({-1, 0}), 0}}, {})), 1);    // implicit equality
  EXPECT_EQ(affine_dim(hpoly(1, {{vec({1}), -1}, {vec({-1}), 0}}, {})), -1);
}

TEST(Polyhedron, RelativeInteriorPoints) {
  auto seg = hpoly(1, {{vec({-1}), 0}, {vec({1}), 2}}, {});
  auto x = rel_int_point(seg);
  EXPECT_TRUE(x[0] > 0 && x[0] < 2);
  auto ray = hpoly(2, {{vec({-1, 0}), -2}}, {{vec({0, 1}), 1}});
  auto y = rel_int_point(ray);
  EXPECT_GT(y[0], 2);
  EXPECT_EQ(y[1], 1);
  EXPECT_EQ(rel_int_point(hpoly(1, {}, {{vec({1}), 5}})), vec({5}));
  try {
    rel_int_point(hpoly(1, {{vec({1}), -1}, {vec({-1}), 0}}, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyPolyhedron);
  }
}

TEST(Polyhedron, IntersectionAndEquality) {
  auto unit = intersect(hpoly(1, {{vec({1}), 1}}, {}), hpoly(1, {{vec({-1}), 0}}, {}));
  EXPECT_TRUE(poly_equal(unit, hpoly(1, {{vec({1}), 1}, {vec({-1}), 0}}, {})));
  EXPECT_TRUE(intersect(hpoly(2, {{vec({1, 0}), 0}}, {}), hpoly(2, {{vec({-1, 0}), -1}}, {})).is_empty());
  EXPECT_TRUE(poly_equal(hpoly(1, {{vec({1}), 1}, {vec({1}), 2}}, {}), hpoly(1, {{vec({1}), 1}}, {})));
  EXPECT_FALSE(poly_equal(hpoly(1, {{vec({1}), 1}, {vec({-1}), 0}}, {}), hpoly(1, {{vec({1}), 2}, {vec({-1}), 0}}, {})));
  EXPECT_THROW(intersect(Polyhedron(1), Polyhedron(2)), Error);
}

TEST(Polyhedron, DirectSumPiece) {
  // the ray x1 >= 2, x2 = 1 in t, the line y2 = 1 in u
  auto piece = direct_sum(hpoly(2, {{vec({-1, 0}), -2}}, {{vec({0, 1}), 1}}), hpoly(2, {}, {{vec({0, 1}), 1}}));
  EXPECT_EQ(piece.affine_dim(), 2);
  EXPECT_TRUE(piece.contains_point(tpoint({{2, 1}, {1, 1}})));
  EXPECT_TRUE(piece.contains_point(tpoint({{7, -3}, {1, 1}})));
  EXPECT_FALSE(piece.contains_point(tpoint({{1, 1}, {1, 1}})));
  EXPECT_FALSE(piece.relative_interior_contains(tpoint({{2, 1}, {1, 1}})));
  EXPECT_EQ(piece.as_block_polyhedron().ambient_dim(), 4u);
}

TEST(Polyhedron, PermutedConstraintsAreEqual) {
  Random rng(5);
  for (int k = 0; k < 50; ++k) {
    auto rows = random_rows(rng, 3, 6);
    auto p = from_rows(3, rows);
    std::shuffle(rows.begin(), rows.end(), rng.engine());
    EXPECT_TRUE(poly_equal(p, from_rows(3, rows)));
  }
}

TEST(LexPolyhedron, Membership) {
  // cell of {(0,0),(1,0)} for x1 + t x2 + t^2 u: x1 = t^2 u and both beat t x2
  LexPolyhedron cell(2, {{{1, 0}, Rank2Value(2, 1)},
                         {{-1, 0}, Rank2Value(-2, -1)},
                         {{1, -1}, Rank2Value(1, 0)}});
  EXPECT_FALSE(lex_member(cell, tpoint({{2, 1}, {1, 0}})));
  EXPECT_TRUE(lex_member(cell, tpoint({{2, 1}, {1, 1}})));
  EXPECT_TRUE(lex_member(LexPolyhedron(2), tpoint({{5, 5}, {-5, 0}})));
}

TEST(PolyhedronProperty, FeasibilityMatchesVertexEnumeration) {
  Random rng(17);
  const Rational big = 1000000;
  int feasible = 0;
  for (int k = 0; k < 300; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    std::size_t m = static_cast<std::size_t>(rng.integer(1, 8));
    auto rows = random_rows(rng, n, m);
    auto verts = brute_vertices(n, rows, big);
    auto p = from_rows(n, rows);
    EXPECT_EQ(lp_feasible(p), !verts.empty());
    feasible += !verts.empty();
    if (verts.empty()) continue;
    // maximum of a random objective over the boxed polytope
    RationalVector c(n);
    for (auto& x : c) x = rng.integer(-3, 3);
    Rational best = dot(c, verts[0]);
    for (const auto& v : verts) best = std::max(best, dot(c, v));
    std::vector<LinearConstraint> cs;
    for (const auto& r : rows) cs.push_back({r.a, Relation::LessEqual, r.b});
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector e(n, 0);
      e[i] = 1;
      cs.push_back({e, Relation::LessEqual, big});
      cs.push_back({e, Relation::GreaterEqual, -big});
    }
    auto r = maximize(n, cs, c);
    ASSERT_EQ(r.status, LpStatus::Optimal);
    EXPECT_EQ(r.value, best);
  }
  EXPECT_GT(feasible, 50);
}

TEST(PolyhedronProperty, ImpliedConstraintKeepsDimension) {
  Random rng(18);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    auto p = from_rows(n, random_rows(rng, n, static_cast<std::size_t>(rng.integer(1, 6))));
    if (p.is_empty()) continue;
    RationalVector c(n);
    for (auto& x : c) x = rng.integer(-3, 3);
    auto r = p.maximize(c);
    if (r.status != LpStatus::Optimal) continue;
    auto q = p.with_inequality(c, r.value + rng.integer(0, 1));
    EXPECT_EQ(q.affine_dim(), p.affine_dim());
    EXPECT_TRUE(poly_equal(p, q));
  }
}

TEST(PolyhedronProperty, RelIntPointIsStrict) {
  Random rng(19);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    auto rows = random_rows(rng, n, static_cast<std::size_t>(rng.integer(1, 7)));
    if (rng.chance(0.3)) {  // force an implicit equality
      Row flip = rows[0];
      for (auto& x : flip.a) x = -x;
      flip.b = -flip.b;
      rows.push_back(flip);
    }
    auto p = from_rows(n, rows);
    if (p.is_empty()) continue;
    const auto& x = p.rel_int_point();
    const auto& imp = p.implicit_equalities();
    for (std::size_t i = 0; i < p.inequalities().size(); ++i) {
      const auto& c = p.inequalities()[i];
      if (imp[i]) {
        EXPECT_EQ(dot(c.a, x), c.b);
      } else {
        EXPECT_LT(dot(c.a, x), c.b);
      }
    }
    EXPECT_TRUE(p.relative_interior_contains(x));
  }
}

TEST(PolyhedronProperty, LexMembershipSplitsIntoBlocks) {
  Random rng(20);
  for (int k = 0; k < 500; ++k) {
    std::size_t d = static_cast<std::size_t>(rng.integer(1, 3));
    std::vector<LexHalfspace> hs;
    for (long j = rng.integer(0, 4); j > 0; --j) {
      ExponentVector s(d);
      for (auto& x : s) x = rng.integer(-2, 2);
      hs.push_back({s, Rank2Value(rng.integer(-3, 3), rng.integer(-3, 3))});
    }
    LexPolyhedron lp(d, hs);
    TropPoint2 p;
    for (std::size_t i = 0; i < d; ++i) p.emplace_back(rng.integer(-2, 2), rng.integer(-2, 2));
    bool direct = true, split = true;
    for (const auto& h : hs) {
      direct = direct && pairing(h.s, p) <= h.q;
      RationalVector s(h.s.begin(), h.s.end());
      Rational lhs_t = dot(s, t_block(p)), lhs_u = dot(s, u_block(p));
      split = split && (lhs_t < h.q.first() || (lhs_t == h.q.first() && lhs_u <= h.q.second()));
    }
    EXPECT_EQ(direct, split);
    EXPECT_EQ(lex_member(lp, p), direct);
  }
}
