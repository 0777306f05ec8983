#include "trop2/convexity.hpp"

#include "trop2/cells.hpp"
#include "trop2/error.hpp"
#include "trop2/parallel.hpp"

#include <algorithm>

namespace trop2 {

void validate(const GeneratorMatrix& v) {
  for (std::size_t j = 0; j < v.gens.size(); ++j) {
    const auto& g = v.gens[j];
    if (g.size() != v.d)
      throw Error(ErrorCode::ValidationError, "generator " + std::to_string(j + 1) + " has wrong length");
    if (std::none_of(g.begin(), g.end(), [](const auto& x) { return x.is_finite(); }))
      throw Error(ErrorCode::ValidationError, "generator " + std::to_string(j + 1) + " is all infinite");
  }
}

GeneratorMatrix homogenize(const GeneratorMatrix& v) {
  GeneratorMatrix out;
  out.d = v.d + 1;
  for (const auto& g : v.gens) {
    TropPoint2 h{Rank2Value(0, 0)};
    h.insert(h.end(), g.begin(), g.end());
    out.gens.push_back(std::move(h));
  }
  return out;
}

bool covector_less(const Covector& a, const Covector& b) {
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  return a.edges < b.edges;
}

bool covector_subset(const Covector& small, const Covector& big) {
  return std::includes(big.edges.begin(), big.edges.end(), small.edges.begin(), small.edges.end());
}

bool is_bounded(const Covector& c, std::size_t d) {
  std::vector<bool> seen(d, false);
  for (const auto& [i, j] : c.edges)
    if (i < d) seen[i] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::string covector_to_string(const Covector& c) {
  std::string out = "{";
  for (std::size_t k = 0; k < c.edges.size(); ++k)
    out += (k ? "," : "") + std::string("(") + std::to_string(c.edges[k].first + 1) + "," +
           std::to_string(c.edges[k].second + 1) + ")";
  return out + "}";
}

bool in_sector(const TropPoint2& p, const TropPoint2& v, std::size_t i) {
  if (!v[i].is_finite()) return false;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k == i || !v[k].is_finite()) continue;
    if (p[k] - p[i] > v[k] - v[i]) return false;
  }
  return true;
}

Covector covector_of_point(const TropPoint2& p, const GeneratorMatrix& v) {
  if (p.size() != v.d) throw Error(ErrorCode::DimensionMismatch, "covector_of_point: point length");
  if (!is_finite_point(p)) throw Error(ErrorCode::ValidationError, "covector_of_point expects a finite point");
  Covector c;
  for (std::size_t i = 0; i < v.d; ++i)
    for (std::size_t j = 0; j < v.gens.size(); ++j)
      if (in_sector(p, v.gens[j], i)) c.edges.emplace_back(i, j);
  return c;
}

bool is_in_cone(const TropPoint2& p, const GeneratorMatrix& v) {
  return is_bounded(covector_of_point(p, v), v.d);
}

LexPolyhedron covector_cell(const Covector& s, const GeneratorMatrix& v) {
  std::vector<bool> used(v.gens.size(), false);
  std::vector<LexHalfspace> hs;
  for (const auto& [i, j] : s.edges) {
    if (i >= v.d || j >= v.gens.size()) throw Error(ErrorCode::ValidationError, "covector edge out of range");
    const auto& g = v.gens[j];
    if (!g[i].is_finite())
      throw Error(ErrorCode::ValidationError, "covector edge at an infinite coordinate");
    used[j] = true;
    for (std::size_t k = 0; k < v.d; ++k) {
      if (k == i || !g[k].is_finite()) continue;
      ExponentVector slope(v.d, 0);
      slope[k] = 1;
      slope[i] = -1;
      hs.push_back({slope, g[k] - g[i]});
    }
  }
  for (std::size_t j = 0; j < used.size(); ++j)
    if (!used[j]) throw Error(ErrorCode::IsolatedGenerator, "generator " + std::to_string(j + 1) + " is isolated");
  return LexPolyhedron(v.d, std::move(hs));
}

Generators1 project_generators(const GeneratorMatrix& v, Axis axis) {
  Generators1 out;
  for (const auto& g : v.gens) {
    std::vector<std::optional<Rational>> row;
    for (const auto& x : g) {
      if (!x.is_finite()) row.emplace_back();
      else row.emplace_back(axis == Axis::T ? x.first() : x.second());
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<CovectorCell1> covector_cells1(std::size_t d, const Generators1& gens) {
  const std::size_t n = gens.size();
  for (const auto& g : gens) {
    if (g.size() != d) throw Error(ErrorCode::ValidationError, "generator has wrong length");
    if (std::none_of(g.begin(), g.end(), [](const auto& x) { return x.has_value(); }))
      throw Error(ErrorCode::ValidationError, "generator is all infinite");
  }
  if (n == 0) return {};
  auto finite = [&](std::size_t atom) { return gens[atom / d][atom % d].has_value(); };

  CellEnumerator e;
  e.atom_count = n * d;
  e.build = [&](const Label& label) {
    std::vector<Constraint> le;
    std::vector<std::vector<std::size_t>> joins;
    for (auto atom : label) {
      const std::size_t j = atom / d, i = atom % d;
      for (std::size_t k = 0; k < d; ++k) {
        if (k == i || !gens[j][k]) continue;
        RationalVector a(d, 0);
        a[k] = 1;
        a[i] = -1;
        le.push_back({a, *gens[j][k] - *gens[j][i]});
        joins.push_back({j * d + k});
      }
    }
    return LabelledSystem{Polyhedron(d, std::move(le)), std::move(joins)};
  };
  e.may_extend = [&](const Label&, std::size_t atom) { return finite(atom); };

  // one edge per generator
  std::vector<Label> seeds{{}};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Label> next;
    for (const auto& s : seeds)
      for (std::size_t i = 0; i < d; ++i)
        if (gens[j][i]) {
          Label l = s;
          l.push_back(j * d + i);
          next.push_back(std::move(l));
        }
    seeds = std::move(next);
  }

  std::vector<CovectorCell1> out;
  for (auto& lc : enumerate_cells(e, seeds)) {
    Covector c;
    for (auto atom : lc.label) c.edges.emplace_back(atom % d, atom / d);
    std::sort(c.edges.begin(), c.edges.end());
    out.push_back({std::move(c), std::move(lc.cell)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return covector_less(a.covector, b.covector); });
  return out;
}

ConeDecomposition cone_decompose(const GeneratorMatrix& v) {
  validate(v);
  if (v.gens.empty()) throw Error(ErrorCode::ValidationError, "cone_decompose needs at least one generator");
  ConeDecomposition dec;
  dec.d = v.d;
  std::vector<CovectorCell1> a_cells;
  for (auto& c : covector_cells1(v.d, project_generators(v, Axis::T)))
    if (is_bounded(c.covector, v.d)) a_cells.push_back(std::move(c));

  std::vector<std::vector<ConePiece>> per_t(a_cells.size());
  parallel_for(a_cells.size(), [&](std::size_t k) {
    const auto& at = a_cells[k];
    Generators1 vt(v.gens.size(), std::vector<std::optional<Rational>>(v.d));
    for (const auto& [i, j] : at.covector.edges) vt[j][i] = v.gens[j][i].second();
    for (const auto& bs : covector_cells1(v.d, vt))
      if (is_bounded(bs.covector, v.d))
        per_t[k].push_back({at.covector, bs.covector, direct_sum(at.cell, bs.cell)});
  });
  for (auto& ps : per_t)
    for (auto& p : ps) dec.pieces.push_back(std::move(p));
  return dec;
}

std::vector<PiecePolyhedron> cone_closure(const ConeDecomposition& dec) {
  std::vector<PiecePolyhedron> pieces;
  for (const auto& p : dec.pieces) pieces.push_back(p.piece);
  return dedupe_pieces(pieces);
}

std::vector<std::vector<PuiseuxPoly>> monomial_lift(const std::vector<TropPoint2>& points) {
  std::vector<std::vector<PuiseuxPoly>> out;
  for (const auto& p : points) {
    std::vector<PuiseuxPoly> g;
    for (const auto& x : p)
      g.push_back(x.is_finite() ? PuiseuxPoly::monomial(1, x.first(), x.second()) : PuiseuxPoly());
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

PuiseuxPoly mono(const Rational& c, const Rational& a, const Rational& b) { return PuiseuxPoly::monomial(c, a, b); }

LinearRow row(std::size_t d, std::vector<std::pair<std::size_t, PuiseuxPoly>> coeffs, PuiseuxPoly b) {
  LinearRow r{std::vector<PuiseuxPoly>(d), std::move(b)};
  for (auto& [k, c] : coeffs) r.a[k] = std::move(c);
  return r;
}

PuiseuxPoly invert_monomial(const PuiseuxPoly& m) {
  if (m.terms().size() != 1) throw Error(ErrorCode::ValidationError, "expected a monomial coefficient");
  const auto& [e, c] = *m.terms().begin();
  return mono(1 / c, -e.t, -e.u);
}

// Sign of b - a.x: +1, 0 or -1.
int slack_sign(const LinearRow& r, const std::vector<PuiseuxPoly>& x) {
  PuiseuxPoly s = r.b;
  for (std::size_t k = 0; k < x.size(); ++k) s = s - r.a[k] * x[k];
  return s.is_zero() ? 0 : leading_sign(s);
}

}  // namespace

TropRow2 tropicalize_row(const LinearRow& r) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t k = 0; k < r.a.size(); ++k) {
    if (r.a[k].is_zero()) continue;
    (leading_sign(r.a[k]) > 0 ? pos : neg).push_back(k);
  }
  const bool b_zero = r.b.is_zero();
  if (pos.empty() && neg.size() == 1 && b_zero) return {std::nullopt, neg[0], Rank2Value(0, 0)};
  if (pos.size() == 1 && neg.size() == 1 && b_zero)
    return {pos[0], neg[0], val2(-r.a[neg[0]]) - val2(r.a[pos[0]])};
  if (pos.size() == 1 && neg.empty() && !b_zero && leading_sign(r.b) > 0)
    return {pos[0], std::nullopt, val2(r.b) - val2(r.a[pos[0]])};
  throw Error(ErrorCode::ValidationError, "row is not a tropical two-term inequality");
}

GoldfarbSit goldfarb_sit(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::ValidationError, "goldfarb_sit needs d >= 2");
  GoldfarbSit gs;
  gs.d = d;
  const auto t_pow = [&](std::size_t e) { return static_cast<long>(e); };

  // 0 <= x1, x1 <= t^{d-1}; x_{j-1} <= u x_j, x_{j-1} <= t^{d-j} u
  gs.ordinary.push_back(row(d, {{0, mono(-1, 0, 0)}}, PuiseuxPoly()));
  gs.ordinary.push_back(row(d, {{0, mono(1, 0, 0)}}, mono(1, t_pow(d - 1), 0)));
  gs.rank2.push_back({std::nullopt, 0, Rank2Value(0, 0)});
  gs.rank2.push_back({0, std::nullopt, Rank2Value(t_pow(d - 1), 0)});
  gs.partial.push_back(row(d, {{0, mono(-1, 0, 0)}}, PuiseuxPoly()));
  gs.partial.push_back(row(d, {{0, mono(1, 0, 0)}}, mono(1, t_pow(d - 1), 0)));
  gs.rank1.push_back({std::nullopt, 0, 0});
  gs.rank1.push_back({0, std::nullopt, t_pow(d - 1)});
  gs.cube.push_back(gs.ordinary[0]);
  gs.cube.push_back(gs.ordinary[1]);
  for (std::size_t j = 2; j <= d; ++j) {
    const std::size_t prev = j - 2, cur = j - 1;
    gs.ordinary.push_back(row(d, {{prev, mono(1, 0, 0)}, {cur, mono(-1, 0, 1)}}, PuiseuxPoly()));
    gs.ordinary.push_back(row(d, {{prev, mono(1, 0, 0)}}, mono(1, t_pow(d - j), 1)));
    gs.rank2.push_back({prev, cur, Rank2Value(0, 1)});
    gs.rank2.push_back({prev, std::nullopt, Rank2Value(t_pow(d - j), 1)});
    gs.partial.push_back(row(d, {{prev, mono(2, 0, 0)}, {cur, mono(-1, 0, 0)}}, PuiseuxPoly()));
    gs.partial.push_back(row(d, {{prev, mono(2, 0, 0)}}, mono(1, t_pow(d - j), 0)));
    gs.rank1.push_back({prev, cur, 0});
    gs.rank1.push_back({prev, std::nullopt, t_pow(d - j)});
    gs.cube.push_back(gs.ordinary[2 * (j - 1)]);
    gs.cube.push_back(row(d, {{cur, mono(1, 0, 0)}}, mono(1, t_pow(d - j), 1)));
  }

  // one equality per pair; the system is lower triangular in x
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<PuiseuxPoly> x(d);
    for (std::size_t p = 0; p < d; ++p) {
      const LinearRow& r = gs.cube[2 * p + ((mask >> p) & 1)];
      PuiseuxPoly rest = r.b;
      for (std::size_t k = 0; k < p; ++k) rest = rest - r.a[k] * x[k];
      x[p] = rest * invert_monomial(r.a[p]);
    }
    std::vector<std::size_t> tight;
    bool feasible = true;
    for (std::size_t k = 0; k < gs.cube.size(); ++k) {
      int s = slack_sign(gs.cube[k], x);
      if (s < 0) feasible = false;
      if (s == 0) tight.push_back(k);
    }
    if (!feasible) continue;
    gs.vertices.push_back(std::move(x));
    gs.tight.push_back(std::move(tight));
  }
  return gs;
}

bool check_cube_incidence(const GoldfarbSit& gs) {
  const std::size_t d = gs.d;
  if (gs.vertices.size() != (std::size_t{1} << d)) return false;
  for (std::size_t a = 0; a < gs.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < gs.vertices.size(); ++b)
      if (gs.vertices[a] == gs.vertices[b]) return false;
  for (const auto& t : gs.tight) {
    if (t.size() != d) return false;
    for (std::size_t p = 0; p < d; ++p)
      if (std::count_if(t.begin(), t.end(), [&](auto k) { return k / 2 == p; }) != 1) return false;
  }
  for (std::size_t a = 0; a < gs.tight.size(); ++a) {
    std::size_t neighbours = 0;
    for (std::size_t b = 0; b < gs.tight.size(); ++b) {
      if (a == b) continue;
      std::vector<std::size_t> common;
      std::set_intersection(gs.tight[a].begin(), gs.tight[a].end(), gs.tight[b].begin(), gs.tight[b].end(),
                            std::back_inserter(common));
      if (common.size() == d - 1) ++neighbours;
    }
    if (neighbours != d) return false;
  }
  return true;
}

std::string row_to_string(const LinearRow& r) {
  std::string lhs;
  for (std::size_t k = 0; k < r.a.size(); ++k) {
    if (r.a[k].is_zero()) continue;
    if (!lhs.empty()) lhs += " + ";
    lhs += "(" + r.a[k].to_string() + ")*x" + std::to_string(k + 1);
  }
  return (lhs.empty() ? "0" : lhs) + " <= " + r.b.to_string();
}

namespace {

std::string var(const std::optional<std::size_t>& k) { return k ? "x" + std::to_string(*k + 1) : "inf"; }

}  // namespace

std::string row_to_string(const TropRow2& r) {
  std::string rhs = r.rhs ? (r.offset == Rank2Value(0, 0) ? var(r.rhs) : r.offset.to_string() + " + " + var(r.rhs))
                          : r.offset.to_string();
  return var(r.lhs) + " >= " + rhs;
}

std::string row_to_string(const TropRow1& r) {
  std::string rhs =
      r.rhs ? (r.offset == 0 ? var(r.rhs) : pretty_rational(r.offset) + " + " + var(r.rhs)) : pretty_rational(r.offset);
  return var(r.lhs) + " >= " + rhs;
}

}  // namespace trop2
