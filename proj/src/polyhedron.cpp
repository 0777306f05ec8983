#include "trop2/polyhedron.hpp"

#include "trop2/error.hpp"

#include <mutex>
#include <sstream>

namespace trop2 {

namespace detail {

struct AnalysisCache {
  std::once_flag once;
  bool feasible = false;
  std::vector<bool> implicit;
  RationalVector point;
  int dim = -1;
};

}  // namespace detail

namespace {

RationalVector padded(const RationalVector& a, std::size_t extra) {
  RationalVector out = a;
  out.resize(a.size() + extra, Rational(0));
  return out;
}

RationalVector unit(std::size_t n, std::size_t i) {
  RationalVector e(n, Rational(0));
  e[i] = 1;
  return e;
}

void check_lengths(std::size_t n, const std::vector<Constraint>& cs) {
  for (const auto& c : cs)
    if (c.a.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "constraint length differs from ambient dimension");
}

void analyze(std::size_t n, const std::vector<Constraint>& le, const std::vector<Constraint>& eq,
             detail::AnalysisCache& out) {
  const std::size_t m = le.size();
  out.implicit.assign(m, false);

  // Implicit equalities: repeatedly maximize the total capped slack of the
  // undecided inequalities; any inequality with positive slack at an optimum
  // is not implicit. When the optimum is zero, all undecided ones are implicit.
  std::vector<LinearConstraint> lp;
  const std::size_t vars = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row = padded(le[i].a, m);
    row[n + i] = 1;
    lp.push_back({row, Relation::LessEqual, le[i].b});
    lp.push_back({unit(vars, n + i), Relation::GreaterEqual, 0});
    lp.push_back({unit(vars, n + i), Relation::LessEqual, 1});
  }
  for (const auto& c : eq) lp.push_back({padded(c.a, m), Relation::Equal, c.b});

  std::vector<bool> undecided(m, true);
  std::size_t remaining = m;
  bool first = true;
  do {
    RationalVector objective(vars, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (undecided[i]) objective[n + i] = 1;
    LpResult r = maximize(vars, lp, objective);
    if (r.status == LpStatus::Infeasible) {
      out.feasible = false;
      out.dim = -1;
      return;
    }
    if (first) {
      out.feasible = true;
      first = false;
    }
    if (sgn(r.value) == 0) break;
    for (std::size_t i = 0; i < m; ++i) {
      if (undecided[i] && sgn(r.x[n + i]) > 0) {
        undecided[i] = false;
        --remaining;
      }
    }
  } while (remaining > 0);
  if (first) {
    // no inequalities: plain feasibility of the equality system
    out.feasible = find_feasible_point(vars, lp).status != LpStatus::Infeasible;
    if (!out.feasible) return;
  }
  for (std::size_t i = 0; i < m; ++i) out.implicit[i] = undecided[i];

  // Relative-interior point: maximize a common slack (capped at 1) on the
  // non-implicit inequalities.
  std::vector<LinearConstraint> interior;
  for (const auto& c : eq) interior.push_back({padded(c.a, 1), Relation::Equal, c.b});
  bool any_open = false;
  for (std::size_t i = 0; i < m; ++i) {
    if (out.implicit[i]) {
      interior.push_back({padded(le[i].a, 1), Relation::Equal, le[i].b});
    } else {
      RationalVector row = padded(le[i].a, 1);
      row[n] = 1;
      interior.push_back({row, Relation::LessEqual, le[i].b});
      any_open = true;
    }
  }
  interior.push_back({unit(n + 1, n), Relation::LessEqual, 1});
  interior.push_back({unit(n + 1, n), Relation::GreaterEqual, 0});
  RationalVector objective(n + 1, Rational(0));
  if (any_open) objective[n] = 1;
  LpResult r = maximize(n + 1, interior, objective);
  if (r.status != LpStatus::Optimal)
    throw Error(ErrorCode::ValidationError, "relative interior LP failed on a feasible polyhedron");
  out.point.assign(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(n));

  std::vector<RationalVector> rows;
  for (const auto& c : eq) rows.push_back(c.a);
  for (std::size_t i = 0; i < m; ++i)
    if (out.implicit[i]) rows.push_back(le[i].a);
  out.dim = static_cast<int>(n) - static_cast<int>(matrix_rank(rows));
}

}  // namespace

Polyhedron::Polyhedron(std::size_t n) : n_(n), cache_(std::make_shared<detail::AnalysisCache>()) {}

Polyhedron::Polyhedron(std::size_t n, std::vector<Constraint> inequalities, std::vector<Constraint> equalities)
    : n_(n), le_(std::move(inequalities)), eq_(std::move(equalities)),
      cache_(std::make_shared<detail::AnalysisCache>()) {
  check_lengths(n_, le_);
  check_lengths(n_, eq_);
}

Polyhedron Polyhedron::point(const RationalVector& x) {
  std::vector<Constraint> eq;
  for (std::size_t i = 0; i < x.size(); ++i) eq.push_back({unit(x.size(), i), x[i]});
  return Polyhedron(x.size(), {}, std::move(eq));
}

const detail::AnalysisCache& Polyhedron::analyzed() const {
  std::call_once(cache_->once, [this] { analyze(n_, le_, eq_, *cache_); });
  return *cache_;
}

bool Polyhedron::is_feasible() const { return analyzed().feasible; }
int Polyhedron::affine_dim() const { return analyzed().dim; }
const std::vector<bool>& Polyhedron::implicit_equalities() const { return analyzed().implicit; }

const RationalVector& Polyhedron::rel_int_point() const {
  const auto& a = analyzed();
  if (!a.feasible) throw Error(ErrorCode::EmptyPolyhedron, "rel_int_point of an empty polyhedron");
  return a.point;
}

std::vector<Constraint> Polyhedron::affine_hull_equalities() const {
  std::vector<Constraint> out = eq_;
  const auto& imp = implicit_equalities();
  for (std::size_t i = 0; i < le_.size(); ++i)
    if (imp[i]) out.push_back(le_[i]);
  return out;
}

Polyhedron Polyhedron::direction_space() const {
  std::vector<Constraint> eq;
  for (const auto& c : affine_hull_equalities()) eq.push_back({c.a, 0});
  return Polyhedron(n_, {}, std::move(eq));
}

bool Polyhedron::contains_point(const RationalVector& x) const {
  if (x.size() != n_) throw Error(ErrorCode::DimensionMismatch, "point length differs");
  for (const auto& c : eq_)
    if (dot(c.a, x) != c.b) return false;
  for (const auto& c : le_)
    if (dot(c.a, x) > c.b) return false;
  return true;
}

bool Polyhedron::relative_interior_contains(const RationalVector& x) const {
  if (!contains_point(x)) return false;
  const auto& imp = implicit_equalities();
  for (std::size_t i = 0; i < le_.size(); ++i)
    if (!imp[i] && dot(le_[i].a, x) == le_[i].b) return false;
  return true;
}

LpResult Polyhedron::maximize(const RationalVector& objective) const {
  std::vector<LinearConstraint> lp;
  for (const auto& c : le_) lp.push_back({c.a, Relation::LessEqual, c.b});
  for (const auto& c : eq_) lp.push_back({c.a, Relation::Equal, c.b});
  return trop2::maximize(n_, lp, objective);
}

Polyhedron Polyhedron::with_inequality(RationalVector a, Rational b) const {
  auto le = le_;
  le.push_back({std::move(a), std::move(b)});
  return Polyhedron(n_, std::move(le), eq_);
}

Polyhedron Polyhedron::with_equality(RationalVector a, Rational b) const {
  auto eq = eq_;
  eq.push_back({std::move(a), std::move(b)});
  return Polyhedron(n_, le_, std::move(eq));
}

Polyhedron Polyhedron::translated(const RationalVector& v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "translation length differs");
  auto shift = [&](std::vector<Constraint> cs) {
    for (auto& c : cs) c.b += dot(c.a, v);
    return cs;
  };
  return Polyhedron(n_, shift(le_), shift(eq_));
}

std::string Polyhedron::to_string() const {
  std::ostringstream os;
  auto row = [&](const Constraint& c, const char* rel) {
    os << "  [";
    for (std::size_t j = 0; j < c.a.size(); ++j) os << (j ? " " : "") << pretty_rational(c.a[j]);
    os << "] " << rel << " " << pretty_rational(c.b) << "\n";
  };
  os << "Polyhedron(n=" << n_ << ")\n";
  for (const auto& c : le_) row(c, "<=");
  for (const auto& c : eq_) row(c, "==");
  return os.str();
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "intersect: ambient dimensions differ");
  auto le = p.inequalities();
  le.insert(le.end(), q.inequalities().begin(), q.inequalities().end());
  auto eq = p.equalities();
  eq.insert(eq.end(), q.equalities().begin(), q.equalities().end());
  return Polyhedron(p.ambient_dim(), std::move(le), std::move(eq));
}

bool lp_feasible(const Polyhedron& p) { return p.is_feasible(); }
int affine_dim(const Polyhedron& p) { return p.affine_dim(); }
RationalVector rel_int_point(const Polyhedron& p) { return p.rel_int_point(); }

namespace {

bool valid_inequality(const Polyhedron& inner, const RationalVector& a, const Rational& b) {
  LpResult r = inner.maximize(a);
  return r.status == LpStatus::Optimal && r.value <= b;
}

RationalVector negated(const RationalVector& a) {
  RationalVector out = a;
  for (auto& v : out) v = -v;
  return out;
}

}  // namespace

bool contains(const Polyhedron& outer, const Polyhedron& inner) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "contains: ambient dimensions differ");
  if (inner.is_empty()) return true;
  for (const auto& c : outer.inequalities())
    if (!valid_inequality(inner, c.a, c.b)) return false;
  for (const auto& c : outer.equalities())
    if (!valid_inequality(inner, c.a, c.b) || !valid_inequality(inner, negated(c.a), -c.b))
      return false;
  return true;
}

bool poly_equal(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "poly_equal: ambient dimensions differ");
  return contains(p, q) && contains(q, p);
}

bool feasible_with_strict(const Polyhedron& p, const std::vector<Constraint>& strict) {
  if (strict.empty()) return p.is_feasible();
  const std::size_t n = p.ambient_dim();
  std::vector<LinearConstraint> lp;
  for (const auto& c : p.inequalities()) lp.push_back({padded(c.a, 1), Relation::LessEqual, c.b});
  for (const auto& c : p.equalities()) lp.push_back({padded(c.a, 1), Relation::Equal, c.b});
  for (const auto& c : strict) {
    if (c.a.size() != n) throw Error(ErrorCode::DimensionMismatch, "strict constraint length");
    RationalVector row = padded(c.a, 1);
    row[n] = 1;
    lp.push_back({row, Relation::LessEqual, c.b});
  }
  lp.push_back({unit(n + 1, n), Relation::LessEqual, 1});
  LpResult r = maximize(n + 1, lp, unit(n + 1, n));
  return r.status == LpStatus::Optimal && sgn(r.value) > 0;
}

namespace {

bool covered(const Polyhedron& base, const std::vector<Constraint>& strict,
             const std::vector<Polyhedron>& pieces, std::size_t k) {
  if (!feasible_with_strict(base, strict)) return true;
  if (k == pieces.size()) return false;
  const Polyhedron& b = pieces[k];
  if (b.ambient_dim() != base.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "covered_by_union: ambient dimensions differ");
  if (b.is_empty()) return covered(base, strict, pieces, k + 1);

  std::vector<Constraint> halves = b.inequalities();
  for (const auto& c : b.equalities()) {
    halves.push_back(c);
    halves.push_back({negated(c.a), -c.b});
  }
  // base \ b is the disjoint union over j of
  // { halves[0..j-1] hold, halves[j] violated }.
  Polyhedron prefix = base;
  for (const auto& h : halves) {
    std::vector<Constraint> s = strict;
    s.push_back({negated(h.a), -h.b});
    if (!covered(prefix, s, pieces, k + 1)) return false;
    prefix = prefix.with_inequality(h.a, h.b);
  }
  return true;
}

}  // namespace

bool covered_by_union(const Polyhedron& region, const std::vector<Polyhedron>& pieces) {
  return covered(region, {}, pieces, 0);
}

bool union_equal(const std::vector<Polyhedron>& a, const std::vector<Polyhedron>& b) {
  for (const auto& p : a)
    if (!covered_by_union(p, b)) return false;
  for (const auto& p : b)
    if (!covered_by_union(p, a)) return false;
  return true;
}

int minkowski_sum_dim(const Polyhedron& p, const Polyhedron& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "minkowski_sum_dim: ambient dimensions differ");
  if (p.is_empty() || q.is_empty()) return -1;
  std::vector<RationalVector> rp, rq;
  for (const auto& c : p.affine_hull_equalities()) rp.push_back(c.a);
  for (const auto& c : q.affine_hull_equalities()) rq.push_back(c.a);
  std::vector<RationalVector> both = rp;
  both.insert(both.end(), rq.begin(), rq.end());
  const int n = static_cast<int>(p.ambient_dim());
  return n - static_cast<int>(matrix_rank(rp)) - static_cast<int>(matrix_rank(rq)) +
         static_cast<int>(matrix_rank(both));
}

// ---------------------------------------------------------------------------

PiecePolyhedron::PiecePolyhedron(Polyhedron t_part, Polyhedron u_part)
    : t_(std::move(t_part)), u_(std::move(u_part)) {
  if (t_.ambient_dim() != u_.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "piece: t and u blocks differ in dimension");
}

int PiecePolyhedron::affine_dim() const {
  if (is_empty()) return -1;
  return t_.affine_dim() + u_.affine_dim();
}

bool PiecePolyhedron::contains_point(const TropPoint2& p) const {
  return t_.contains_point(t_block(p)) && u_.contains_point(u_block(p));
}

bool PiecePolyhedron::relative_interior_contains(const TropPoint2& p) const {
  return t_.relative_interior_contains(t_block(p)) && u_.relative_interior_contains(u_block(p));
}

Polyhedron PiecePolyhedron::as_block_polyhedron() const {
  const std::size_t d = this->d();
  auto lift = [d](const std::vector<Constraint>& cs, bool upper) {
    std::vector<Constraint> out;
    for (const auto& c : cs) {
      RationalVector a(2 * d, Rational(0));
      for (std::size_t i = 0; i < d; ++i) a[(upper ? d : 0) + i] = c.a[i];
      out.push_back({a, c.b});
    }
    return out;
  };
  auto le = lift(t_.inequalities(), false);
  auto leu = lift(u_.inequalities(), true);
  le.insert(le.end(), leu.begin(), leu.end());
  auto eq = lift(t_.equalities(), false);
  auto equ = lift(u_.equalities(), true);
  eq.insert(eq.end(), equ.begin(), equ.end());
  return Polyhedron(2 * d, std::move(le), std::move(eq));
}

PiecePolyhedron PiecePolyhedron::translated(const RationalVector& t_shift,
                                            const RationalVector& u_shift) const {
  return {t_.translated(t_shift), u_.translated(u_shift)};
}

PiecePolyhedron direct_sum(const Polyhedron& tp, const Polyhedron& up) {
  if (tp.ambient_dim() != up.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "direct_sum: blocks differ in dimension");
  return {tp, up};
}

bool piece_contains(const PiecePolyhedron& outer, const PiecePolyhedron& inner) {
  if (inner.is_empty()) return true;
  if (outer.is_empty()) return false;
  return contains(outer.t_part(), inner.t_part()) && contains(outer.u_part(), inner.u_part());
}

bool piece_equal(const PiecePolyhedron& a, const PiecePolyhedron& b) {
  return piece_contains(a, b) && piece_contains(b, a);
}

PiecePolyhedron intersect(const PiecePolyhedron& a, const PiecePolyhedron& b) {
  return {intersect(a.t_part(), b.t_part()), intersect(a.u_part(), b.u_part())};
}

std::vector<PiecePolyhedron> dedupe_pieces(const std::vector<PiecePolyhedron>& pieces) {
  std::vector<PiecePolyhedron> out;
  for (const auto& p : pieces) {
    bool seen = false;
    for (const auto& q : out)
      if (piece_equal(p, q)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(p);
  }
  return out;
}

std::vector<PiecePolyhedron> maximal_pieces(const std::vector<PiecePolyhedron>& pieces) {
  std::vector<PiecePolyhedron> unique;
  for (const auto& p : dedupe_pieces(pieces))
    if (!p.is_empty()) unique.push_back(p);
  std::vector<PiecePolyhedron> out;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < unique.size() && !dominated; ++j)
      if (j != i && piece_contains(unique[j], unique[i])) dominated = true;
    if (!dominated) out.push_back(unique[i]);
  }
  return out;
}

std::vector<Polyhedron> dedupe_polyhedra(const std::vector<Polyhedron>& polys) {
  std::vector<Polyhedron> out;
  for (const auto& p : polys) {
    bool seen = false;
    for (const auto& q : out)
      if (poly_equal(p, q)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------

LexPolyhedron::LexPolyhedron(std::size_t d, std::vector<LexHalfspace> halfspaces)
    : d_(d), hs_(std::move(halfspaces)) {
  for (const auto& h : hs_) {
    if (h.s.size() != d_) throw Error(ErrorCode::DimensionMismatch, "lex halfspace slope length");
    if (h.q.is_zero()) throw Error(ErrorCode::ValidationError, "lex halfspace bound must be finite");
  }
}

Polyhedron LexPolyhedron::t_system() const {
  std::vector<Constraint> le;
  for (const auto& h : hs_) {
    RationalVector a;
    for (auto v : h.s) a.emplace_back(static_cast<long>(v));
    le.push_back({a, h.q.first()});
  }
  return Polyhedron(d_, std::move(le));
}

LexPolyhedron intersect(const LexPolyhedron& a, const LexPolyhedron& b) {
  if (a.d_ != b.d_) throw Error(ErrorCode::DimensionMismatch, "lex intersect: dimensions differ");
  auto hs = a.hs_;
  hs.insert(hs.end(), b.hs_.begin(), b.hs_.end());
  return LexPolyhedron(a.d_, std::move(hs));
}

bool lex_member(const LexPolyhedron& lp, const TropPoint2& p) {
  if (p.size() != lp.d()) throw Error(ErrorCode::DimensionMismatch, "lex_member: point length");
  if (!is_finite_point(p)) throw Error(ErrorCode::ValidationError, "lex_member expects a finite point");
  for (const auto& h : lp.halfspaces())
    if (pairing(h.s, p) > h.q) return false;
  return true;
}

}  // namespace trop2
