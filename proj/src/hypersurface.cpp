#include "trop2/hypersurface.hpp"

#include "trop2/error.hpp"
#include "trop2/parallel.hpp"

#include <algorithm>
#include <set>

namespace trop2 {

namespace {

RationalVector difference(const ExponentVector& a, const ExponentVector& b) {
  RationalVector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(static_cast<long>(a[i] - b[i]));
  return out;
}

Rational pair_rational(const ExponentVector& s, const RationalVector& x) {
  Rational v = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != 0) v += Rational(static_cast<long>(s[i])) * x[i];
  return v;
}

}  // namespace

bool support_less(const SupportSet& a, const SupportSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string support_set_to_string(const SupportSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + exponent_to_string(s[i]);
  return out + "}";
}

EvalResult2 trop2_eval(const TropPoly2& f, const TropPoint2& p) {
  if (f.coeffs.empty()) throw Error(ErrorCode::ValidationError, "trop2_eval of an empty polynomial");
  EvalResult2 out{Rank2Value::zero(), {}};
  for (const auto& [s, c] : f.coeffs) {
    Rank2Value v = trop_mul(c, pairing(s, p));
    if (v < out.value) {
      out.value = v;
      out.argmin.clear();
    }
    if (v == out.value) out.argmin.push_back(s);
  }
  return out;
}

bool is_in_hypersurface2(const TropPoly2& f, const TropPoint2& p) {
  return trop2_eval(f, p).argmin.size() > 1;
}

EvalResult1 trop1_eval(const TropPoly1& f, const RationalVector& x) {
  if (f.coeffs.empty()) throw Error(ErrorCode::ValidationError, "trop1_eval of an empty polynomial");
  if (x.size() != f.d) throw Error(ErrorCode::DimensionMismatch, "trop1_eval: point length");
  EvalResult1 out;
  bool first = true;
  for (const auto& [s, c] : f.coeffs) {
    Rational v = c + pair_rational(s, x);
    if (first || v < out.value) {
      out.value = v;
      out.argmin.clear();
      first = false;
    }
    if (v == out.value) out.argmin.push_back(s);
  }
  return out;
}

bool is_in_hypersurface1(const TropPoly1& f, const RationalVector& x) {
  return trop1_eval(f, x).argmin.size() > 1;
}

TropPoly2 tropicalize2(const LaurentPolynomial& f) {
  TropPoly2 out;
  out.d = f.d;
  for (const auto& [s, gamma] : f.terms) {
    if (gamma.is_zero())
      throw Error(ErrorCode::ZeroCoefficient, "zero coefficient at " + exponent_to_string(s));
    out.coeffs.emplace(s, val2(gamma));
  }
  return out;
}

TropPoly1 project_poly(const TropPoly2& f, Axis axis) {
  TropPoly1 out;
  out.d = f.d;
  for (const auto& [s, c] : f.coeffs) out.coeffs.emplace(s, axis == Axis::T ? c.first() : c.second());
  return out;
}

TropPoly2 restrict_poly(const TropPoly2& f, const SupportSet& t) {
  TropPoly2 out;
  out.d = f.d;
  for (const auto& s : t) {
    auto it = f.coeffs.find(s);
    if (it == f.coeffs.end())
      throw Error(ErrorCode::ValidationError, "restriction to a monomial outside the support");
    out.coeffs.emplace(s, it->second);
  }
  return out;
}

std::vector<SupportCell1> support_cells1(const TropPoly1& f) {
  std::vector<ExponentVector> mons;
  std::vector<Rational> coef;
  for (const auto& [s, c] : f.coeffs) {
    if (s.size() != f.d) throw Error(ErrorCode::DimensionMismatch, "exponent length differs from d");
    mons.push_back(s);
    coef.push_back(c);
  }
  if (mons.empty()) return {};
  const std::size_t d = f.d;

  CellEnumerator e;
  e.atom_count = mons.size();
  e.build = [&](const Label& label) {
    const std::size_t s0 = label.front();
    std::vector<Constraint> eq;
    for (std::size_t k = 1; k < label.size(); ++k) {
      const std::size_t s = label[k];
      eq.push_back({difference(mons[s], mons[s0]), coef[s0] - coef[s]});
    }
    std::vector<Constraint> le;
    std::vector<std::vector<std::size_t>> joins;
    for (std::size_t s = 0; s < mons.size(); ++s) {
      if (std::binary_search(label.begin(), label.end(), s)) continue;
      le.push_back({difference(mons[s0], mons[s]), coef[s] - coef[s0]});
      joins.push_back({s});
    }
    return LabelledSystem{Polyhedron(d, std::move(le), std::move(eq)), std::move(joins)};
  };

  std::vector<Label> seeds;
  for (std::size_t a = 0; a < mons.size(); ++a) {
    seeds.push_back({a});
    for (std::size_t b = a + 1; b < mons.size(); ++b) seeds.push_back({a, b});
  }

  std::vector<SupportCell1> out;
  for (auto& lc : enumerate_cells(e, seeds)) {
    SupportSet set;
    for (auto a : lc.label) set.push_back(mons[a]);
    out.push_back({std::move(set), std::move(lc.cell)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& x, const auto& y) { return support_less(x.support_set, y.support_set); });
  return out;
}

std::vector<SupportCell1> hypersurface_cells1(const std::vector<SupportCell1>& all) {
  std::vector<SupportCell1> out;
  for (const auto& c : all)
    if (c.support_set.size() > 1) out.push_back(c);
  return out;
}

std::vector<SupportCell1> maximal_cells1(const std::vector<SupportCell1>& all) {
  std::vector<SupportCell1> out;
  for (const auto& c : all)
    if (c.support_set.size() > 1 && c.cell.affine_dim() == static_cast<int>(c.cell.ambient_dim()) - 1)
      out.push_back(c);
  return out;
}

LexPolyhedron support_lex_cell(const TropPoly2& f, const SupportSet& set) {
  std::vector<LexHalfspace> hs;
  for (const auto& s : set) {
    auto cs = f.coeffs.find(s);
    if (cs == f.coeffs.end()) throw Error(ErrorCode::ValidationError, "support set outside support");
    for (const auto& [s2, c2] : f.coeffs) {
      if (s2 == s) continue;
      ExponentVector slope(f.d);
      for (std::size_t i = 0; i < f.d; ++i) slope[i] = s[i] - s2[i];
      hs.push_back({slope, c2 - cs->second});
    }
  }
  return LexPolyhedron(f.d, std::move(hs));
}

Rank2Decomposition rank2_decompose(const TropPoly2& f) {
  Rank2Decomposition dec;
  dec.d = f.d;
  if (f.coeffs.size() < 2) return dec;
  auto t_cells = hypersurface_cells1(support_cells1(project_poly(f, Axis::T)));
  std::vector<std::vector<DecompositionPiece>> per_t(t_cells.size());
  parallel_for(t_cells.size(), [&](std::size_t k) {
    const auto& q = t_cells[k];
    auto u_cells = hypersurface_cells1(support_cells1(project_poly(restrict_poly(f, q.support_set), Axis::U)));
    for (const auto& r : u_cells)
      per_t[k].push_back({q.support_set, r.support_set, direct_sum(q.cell, r.cell)});
  });
  for (auto& v : per_t)
    for (auto& p : v) dec.pieces.push_back(std::move(p));
  return dec;
}

Rank2Decomposition rank2_decompose(const LaurentPolynomial& f) { return rank2_decompose(tropicalize2(f)); }

std::vector<PiecePolyhedron> closure2(const Rank2Decomposition& dec) {
  std::vector<PiecePolyhedron> pieces;
  for (const auto& p : dec.pieces) pieces.push_back(p.piece);
  return dedupe_pieces(pieces);
}

std::vector<std::size_t> pieces_containing_interior(const Rank2Decomposition& dec, const TropPoint2& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dec.pieces.size(); ++i)
    if (dec.pieces[i].piece.relative_interior_contains(p)) out.push_back(i);
  return out;
}

namespace {

Polyhedron tangent_cone(const Polyhedron& q, const RationalVector& at) {
  std::vector<Constraint> le, eq;
  for (const auto& c : q.inequalities())
    if (dot(c.a, at) == c.b) le.push_back({c.a, 0});
  for (const auto& c : q.equalities()) eq.push_back({c.a, 0});
  return Polyhedron(q.ambient_dim(), std::move(le), std::move(eq));
}

}  // namespace

std::vector<Polyhedron> star_of_cell(const std::vector<SupportCell1>& cells, const SupportCell1& p) {
  auto it = std::find_if(cells.begin(), cells.end(),
                         [&](const auto& c) { return c.support_set == p.support_set; });
  if (p.support_set.size() < 2 || it == cells.end())
    throw Error(ErrorCode::CellNotInComplex, "cell " + support_set_to_string(p.support_set) +
                                                 " is not a cell of the hypersurface");
  const RationalVector& at = it->cell.rel_int_point();
  std::vector<Polyhedron> out;
  for (const auto& q : cells) {
    if (q.support_set.size() < 2) continue;
    if (!std::includes(p.support_set.begin(), p.support_set.end(), q.support_set.begin(),
                       q.support_set.end()))
      continue;
    out.push_back(tangent_cone(q.cell, at));
  }
  return out;
}

Rank2Decomposition kk_decompose(const TropPoly2& f) {
  for (const auto& [s, c] : f.coeffs)
    if (sgn(c.second()) != 0)
      throw Error(ErrorCode::CoefficientDependsOnU,
                  "coefficient of " + exponent_to_string(s) + " has valuation " + c.to_string());
  Rank2Decomposition dec;
  dec.d = f.d;
  if (f.coeffs.size() < 2) return dec;
  auto cells = hypersurface_cells1(support_cells1(project_poly(f, Axis::T)));
  for (const auto& pt : cells) {
    const RationalVector& at = pt.cell.rel_int_point();
    for (const auto& ps : cells) {
      if (!std::includes(pt.support_set.begin(), pt.support_set.end(), ps.support_set.begin(),
                         ps.support_set.end()))
        continue;
      dec.pieces.push_back({pt.support_set, ps.support_set, direct_sum(pt.cell, tangent_cone(ps.cell, at))});
    }
  }
  return dec;
}

Rank2Decomposition kk_decompose(const LaurentPolynomial& f) { return kk_decompose(tropicalize2(f)); }

}  // namespace trop2

namespace trop2 {

namespace {

Rational floor_q(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

Rational ceil_q(const Rational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

bool on_grid(const Rational& x, const Rational& step) {
  Rational k = x / step;
  k.canonicalize();
  return k.get_den() == 1;
}

struct TieLine {
  Rational a0, a1, b;  // a0 x0 + a1 x1 = b
};

std::vector<TieLine> tie_lines(const TropPoly1& f) {
  std::vector<TieLine> out;
  for (auto i = f.coeffs.begin(); i != f.coeffs.end(); ++i)
    for (auto j = std::next(i); j != f.coeffs.end(); ++j)
      out.push_back({Rational(i->first[0] - j->first[0]), Rational(i->first[1] - j->first[1]), j->second - i->second});
  return out;
}

void fit_box(const std::vector<TieLine>& lines, RationalVector& lo, RationalVector& hi) {
  lo = {-1, -1}, hi = {1, 1};
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto &r = lines[i], &s = lines[j];
      Rational det = r.a0 * s.a1 - r.a1 * s.a0;
      if (det == 0) continue;
      Rational x = (r.b * s.a1 - r.a1 * s.b) / det, y = (r.a0 * s.b - r.b * s.a0) / det;
      lo[0] = std::min(lo[0], x), hi[0] = std::max(hi[0], x);
      lo[1] = std::min(lo[1], y), hi[1] = std::max(hi[1], y);
    }
  for (int k = 0; k < 2; ++k) lo[k] = floor_q(lo[k]) - 1, hi[k] = ceil_q(hi[k]) + 1;
}

std::set<std::pair<Rational, Rational>> grid_on_lines(const std::vector<TieLine>& lines, const RationalVector& lo,
                                                      const RationalVector& hi, const Rational& step) {
  std::set<std::pair<Rational, Rational>> out;
  for (const auto& l : lines) {
    if (l.a1 != 0) {
      for (Rational k = ceil_q(lo[0] / step); k * step <= hi[0]; ++k) {
        Rational x = k * step, y = (l.b - l.a0 * x) / l.a1;
        if (y >= lo[1] && y <= hi[1] && on_grid(y, step)) out.emplace(x, y);
      }
    } else if (l.a0 != 0) {
      Rational x = l.b / l.a0;
      if (x < lo[0] || x > hi[0] || !on_grid(x, step)) continue;
      for (Rational k = ceil_q(lo[1] / step); k * step <= hi[1]; ++k) out.emplace(x, k * step);
    }
  }
  return out;
}

}  // namespace

GridCheck grid_check(const TropPoly2& f, const Rank2Decomposition& dec, const Rational& step) {
  if (f.d != 2) throw Error(ErrorCode::UnsupportedDimension, "grid_check needs d = 2");
  if (step <= 0) throw Error(ErrorCode::ValidationError, "grid step must be positive");
  GridCheck out;
  out.step = step;
  const auto ft = project_poly(f, Axis::T), fu = project_poly(f, Axis::U);
  fit_box(tie_lines(ft), out.t_lo, out.t_hi);
  fit_box(tie_lines(fu), out.u_lo, out.u_hi);

  for (const auto& p : dec.pieces) {
    ++out.samples;
    auto x = from_blocks(p.piece.t_part().rel_int_point(), p.piece.u_part().rel_int_point());
    if (trop2_eval(f, x).argmin.size() < 2) out.failures.push_back(x);
  }

  for (const auto& [t0, t1] : grid_on_lines(tie_lines(ft), out.t_lo, out.t_hi, step)) {
    RationalVector pt{t0, t1};
    auto t_set = trop1_eval(ft, pt).argmin;
    if (t_set.size() < 2) continue;
    auto fu_t = project_poly(restrict_poly(f, t_set), Axis::U);
    for (const auto& [u0, u1] : grid_on_lines(tie_lines(fu_t), out.u_lo, out.u_hi, step)) {
      auto x = from_blocks(pt, {u0, u1});
      if (trop2_eval(f, x).argmin.size() < 2) continue;
      ++out.grid_points;
      if (pieces_containing_interior(dec, x).size() != 1) out.failures.push_back(x);
    }
  }
  return out;
}

}  // namespace trop2
