#pragma once
// Seeded instance generators shared by the property tests and the
// acceptance run.

#include "trop2/convexity.hpp"
#include "trop2/hypersurface.hpp"
#include "trop2/puiseux.hpp"

#include <random>
#include <set>

namespace trop2::testing {

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  Rational rational(long lo, long hi, long max_den) {
    long den = integer(1, max_den);
    Rational q(integer(lo * den, hi * den), den);
    q.canonicalize();
    return q;
  }
  std::mt19937_64& engine() { return rng_; }

  /// Distinct exponent vectors with entries in [0, max_deg].
  SupportSet support(std::size_t d, std::size_t terms, long max_deg) {
    std::set<ExponentVector> out;
    while (out.size() < terms) {
      ExponentVector s(d);
      for (auto& x : s) x = integer(0, max_deg);
      out.insert(s);
    }
    return {out.begin(), out.end()};
  }

  /// Rank-two polynomial with integer valuations in [lo, hi].
  TropPoly2 poly2(std::size_t d, std::size_t terms, long lo, long hi, long max_deg = 2) {
    TropPoly2 f;
    f.d = d;
    for (const auto& s : support(d, terms, max_deg)) f.coeffs.emplace(s, Rank2Value(integer(lo, hi), integer(lo, hi)));
    return f;
  }

  /// u-free Laurent polynomial with monomial coefficients c t^a.
  LaurentPolynomial u_free(std::size_t d, std::size_t terms, long lo, long hi, long max_deg = 2) {
    LaurentPolynomial f;
    f.d = d;
    for (const auto& s : support(d, terms, max_deg))
      f.add(s, PuiseuxPoly::monomial(integer(1, 5), integer(lo, hi), 0));
    return f;
  }

  /// Positive Puiseux polynomial: a positive leading term plus random others.
  PuiseuxPoly positive_puiseux(std::size_t extra_terms) {
    PuiseuxPoly g;
    Rational a = rational(-3, 3, 3), b = rational(-3, 3, 3);
    g.add_term(integer(1, 9), a, b);
    for (std::size_t k = 0; k < extra_terms; ++k) {
      Rational da = rational(0, 3, 3), db = rational(-3, 3, 3);
      if (da == 0 && db <= 0) db = 1 + rational(0, 2, 2);
      Rational c = rational(-9, 9, 1);
      if (c != 0) g = g + PuiseuxPoly::monomial(c, a + da, b + db);
    }
    return g;
  }

  GeneratorMatrix generators(std::size_t d, std::size_t n, long lo, long hi, double p_inf = 0.1) {
    GeneratorMatrix v;
    v.d = d;
    for (std::size_t j = 0; j < n; ++j) {
      TropPoint2 g;
      for (std::size_t i = 0; i < d; ++i)
        g.push_back(chance(p_inf) ? Rank2Value::zero() : Rank2Value(integer(lo, hi), integer(lo, hi)));
      if (std::none_of(g.begin(), g.end(), [](const auto& x) { return x.is_finite(); }))
        g[static_cast<std::size_t>(integer(0, static_cast<long>(d) - 1))] = Rank2Value(integer(lo, hi), 0);
      v.gens.push_back(std::move(g));
    }
    return v;
  }

  TropPoint2 point2(std::size_t d, long lo, long hi, long max_den = 2) {
    TropPoint2 p;
    for (std::size_t i = 0; i < d; ++i) p.emplace_back(rational(lo, hi, max_den), rational(lo, hi, max_den));
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

/// Independent membership oracle by residuation: with lambda_j the largest
/// scalar such that lambda_j + v^(j) >= p, p lies in the cone iff the
/// tropical sum of the lambda_j + v^(j) is p.
inline bool cone_member_by_residuation(const TropPoint2& p, const GeneratorMatrix& v) {
  TropPoint2 sum(p.size(), Rank2Value::zero());
  for (const auto& g : v.gens) {
    bool have = false;
    Rank2Value lambda;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (!g[i].is_finite()) continue;
      Rank2Value c = p[i] - g[i];
      if (!have || c > lambda) lambda = c;
      have = true;
    }
    for (std::size_t i = 0; i < p.size(); ++i) sum[i] = trop_add(sum[i], trop_mul(lambda, g[i]));
  }
  return sum == p;
}

/// Tropical combination of the generators with the given scalars.
inline TropPoint2 combination(const GeneratorMatrix& v, const std::vector<Rank2Value>& lambda) {
  TropPoint2 out(v.d, Rank2Value::zero());
  for (std::size_t j = 0; j < v.gens.size(); ++j)
    for (std::size_t i = 0; i < v.d; ++i) out[i] = trop_add(out[i], trop_mul(lambda[j], v.gens[j][i]));
  return out;
}

}  // namespace trop2::testing
