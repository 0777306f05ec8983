#include "trop2/stable.hpp"

#include "trop2/error.hpp"
#include "trop2/lp.hpp"
#include "trop2/parallel.hpp"

#include <algorithm>
#include <set>

namespace trop2 {

namespace {

void require_u_free(const LaurentPolynomial& f, const char* name) {
  for (const auto& [s, gamma] : f.terms)
    if (!gamma.is_u_free())
      throw Error(ErrorCode::CoefficientDependsOnU,
                  std::string(name) + ": coefficient of " + exponent_to_string(s) + " depends on u");
}

std::vector<SupportCell1> rank_one_cells(const LaurentPolynomial& f) {
  return hypersurface_cells1(support_cells1(project_poly(tropicalize2(f), Axis::T)));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// v in span(P) + span(Q): x + y = v, x in dir(P), y in dir(Q).
bool in_span_sum(const Polyhedron& p, const Polyhedron& q, const RationalVector& v) {
  const std::size_t n = v.size();
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector a(2 * n, 0);
    a[i] = 1;
    a[n + i] = 1;
    cs.push_back({a, Relation::Equal, v[i]});
  }
  for (const auto& e : p.affine_hull_equalities()) {
    RationalVector a(2 * n, 0);
    std::copy(e.a.begin(), e.a.end(), a.begin());
    cs.push_back({a, Relation::Equal, 0});
  }
  for (const auto& e : q.affine_hull_equalities()) {
    RationalVector a(2 * n, 0);
    std::copy(e.a.begin(), e.a.end(), a.begin() + static_cast<std::ptrdiff_t>(n));
    cs.push_back({a, Relation::Equal, 0});
  }
  return find_feasible_point(2 * n, cs).status != LpStatus::Infeasible;
}

std::vector<Polyhedron> maximal_polyhedra(const std::vector<Polyhedron>& polys) {
  auto uniq = dedupe_polyhedra(polys);
  std::vector<Polyhedron> out;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    bool covered = false;
    for (std::size_t j = 0; j < uniq.size() && !covered; ++j)
      covered = j != i && contains(uniq[j], uniq[i]);
    if (!covered) out.push_back(uniq[i]);
  }
  return out;
}

}  // namespace

Rational beta_weight(const ExponentVector& s, const Rational& beta) {
  Rational w = 0, power = beta;
  for (auto si : s) {
    w += Rational(static_cast<long>(si)) * power;
    power *= beta;
  }
  return w;
}

Rational beta_candidate(std::size_t k) {
  std::uint64_t p = 1;
  for (std::size_t found = 0; found <= k;)
    if (is_prime(++p)) ++found;
  Rational beta(static_cast<long>(p), static_cast<long>(std::max<std::size_t>(1, k)));
  beta.canonicalize();
  return beta;
}

BetaCertificate certify_beta(const std::vector<SupportSet>& supports, const Rational& beta) {
  std::set<ExponentVector> all;
  for (const auto& s : supports) all.insert(s.begin(), s.end());
  std::set<ExponentVector> vectors;
  for (const auto& a : all) {
    if (std::any_of(a.begin(), a.end(), [](auto x) { return x != 0; })) vectors.insert(a);
    for (const auto& b : all) {
      if (a == b) continue;
      ExponentVector diff(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
      vectors.insert(diff);
    }
  }
  BetaCertificate cert;
  cert.beta = beta;
  cert.checked_vectors.assign(vectors.begin(), vectors.end());
  cert.all_nonzero = std::all_of(vectors.begin(), vectors.end(),
                                 [&](const auto& s) { return beta_weight(s, beta) != 0; });
  return cert;
}

BetaCertificate choose_beta(const std::vector<SupportSet>& supports) {
  for (std::size_t k = 0;; ++k) {
    auto cert = certify_beta(supports, beta_candidate(k));
    if (cert.all_nonzero) return cert;
  }
}

SupportSet support_of(const LaurentPolynomial& f) {
  SupportSet out;
  for (const auto& [s, gamma] : f.terms) out.push_back(s);
  return out;
}

LaurentPolynomial u_perturb(const LaurentPolynomial& g, const Rational& beta) {
  LaurentPolynomial out;
  out.d = g.d;
  for (const auto& [s, gamma] : g.terms)
    out.add(s, gamma * PuiseuxPoly::monomial(1, 0, beta_weight(s, beta)));
  return out;
}

RationalVector beta_vector(std::size_t d, const Rational& beta) {
  RationalVector v;
  Rational power = beta;
  for (std::size_t i = 0; i < d; ++i) {
    v.push_back(power);
    power *= beta;
  }
  return v;
}

bool perturb_translation_check(const LaurentPolynomial& f, const Rational& beta) {
  require_u_free(f, "perturb_translation_check");
  auto plain = rank2_decompose(f);
  auto perturbed = rank2_decompose(u_perturb(f, beta));
  if (plain.pieces.size() != perturbed.pieces.size()) return false;
  RationalVector zero(f.d, 0);
  auto shift = beta_vector(f.d, beta);
  for (std::size_t i = 0; i < plain.pieces.size(); ++i) {
    const auto& a = plain.pieces[i];
    const auto& b = perturbed.pieces[i];
    if (a.t != b.t || a.s != b.s) return false;
    if (!piece_equal(a.piece, b.piece.translated(zero, shift))) return false;
  }
  return true;
}

StableResult stable_intersection(const LaurentPolynomial& f, const LaurentPolynomial& g, const Rational& beta) {
  require_u_free(f, "stable_intersection");
  require_u_free(g, "stable_intersection");
  if (f.d != g.d) throw Error(ErrorCode::DimensionMismatch, "stable_intersection: f and g differ in d");
  StableResult res;
  res.method = "rank2";
  res.beta = beta != 0 ? beta : choose_beta({support_of(f), support_of(g)}).beta;

  auto fp = maximal_pieces(closure2(rank2_decompose(f)));
  auto gp = maximal_pieces(closure2(rank2_decompose(u_perturb(g, res.beta))));
  std::vector<std::vector<PiecePolyhedron>> hits(fp.size());
  parallel_for(fp.size(), [&](std::size_t i) {
    for (const auto& b : gp) {
      auto both = intersect(fp[i], b);
      if (!both.is_empty()) hits[i].push_back(std::move(both));
    }
  });
  std::vector<PiecePolyhedron> lifted;
  for (auto& h : hits)
    for (auto& p : h) lifted.push_back(std::move(p));
  res.lifted = maximal_pieces(lifted);
  std::vector<Polyhedron> projected;
  for (const auto& p : res.lifted) projected.push_back(p.t_part());
  res.pieces = maximal_polyhedra(projected);
  return res;
}

StableResult direct_stable_intersection(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (f.d != g.d) throw Error(ErrorCode::DimensionMismatch, "direct_stable_intersection: f and g differ in d");
  auto fc = rank_one_cells(f);
  auto gc = rank_one_cells(g);
  std::vector<std::vector<Polyhedron>> hits(fc.size());
  parallel_for(fc.size(), [&](std::size_t i) {
    for (const auto& q : gc) {
      if (minkowski_sum_dim(fc[i].cell, q.cell) != static_cast<int>(f.d)) continue;
      auto both = intersect(fc[i].cell, q.cell);
      if (both.is_feasible()) hits[i].push_back(std::move(both));
    }
  });
  std::vector<Polyhedron> all;
  for (auto& h : hits)
    for (auto& p : h) all.push_back(std::move(p));
  StableResult res;
  res.method = "direct";
  res.pieces = maximal_polyhedra(all);
  return res;
}

std::vector<std::vector<Polyhedron>> epsilon_limit_probe(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                                         const RationalVector& v,
                                                         const std::vector<Rational>& eps) {
  if (v.size() != f.d || g.d != f.d) throw Error(ErrorCode::DimensionMismatch, "epsilon_limit_probe: dimensions");
  auto fc = rank_one_cells(f);
  auto gc = rank_one_cells(g);
  for (const auto& p : fc)
    for (const auto& q : gc)
      if (minkowski_sum_dim(p.cell, q.cell) < static_cast<int>(f.d) && in_span_sum(p.cell, q.cell, v))
        throw Error(ErrorCode::NonGenericDirection,
                    "direction lies in span of cells " + support_set_to_string(p.support_set) + " and " +
                        support_set_to_string(q.support_set));
  std::vector<std::vector<Polyhedron>> out;
  for (const auto& e : eps) {
    RationalVector shift(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) shift[i] = e * v[i];
    std::vector<Polyhedron> all;
    for (const auto& p : fc)
      for (const auto& q : gc) {
        auto both = intersect(p.cell, q.cell.translated(shift));
        if (both.is_feasible()) all.push_back(std::move(both));
      }
    out.push_back(maximal_polyhedra(all));
  }
  return out;
}

}  // namespace trop2
