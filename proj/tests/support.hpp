#pragma once

#include "trop2/hypersurface.hpp"
#include "trop2/polyhedron.hpp"

#include <initializer_list>
#include <utility>

namespace trop2::testing {

inline Rational q(const char* s) { return parse_rational(s); }

inline RationalVector vec(std::initializer_list<long> xs) {
  RationalVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Terms as ({exponent}, (t-valuation, u-valuation)).
inline TropPoly2 poly2(std::size_t d,
                       std::initializer_list<std::pair<ExponentVector, std::pair<long, long>>> terms) {
  TropPoly2 f;
  f.d = d;
  for (const auto& [s, v] : terms) f.coeffs.emplace(s, Rank2Value(v.first, v.second));
  return f;
}

// H-form shorthand: rows a.x <= b and a.x = b.
inline Polyhedron hpoly(std::size_t n, std::initializer_list<std::pair<RationalVector, long>> le,
                        std::initializer_list<std::pair<RationalVector, long>> eq) {
  std::vector<Constraint> l, e;
  for (const auto& [a, b] : le) l.push_back({a, Rational(b)});
  for (const auto& [a, b] : eq) e.push_back({a, Rational(b)});
  return Polyhedron(n, std::move(l), std::move(e));
}

inline TropPoint2 tpoint(std::initializer_list<std::pair<long, long>> xs) {
  TropPoint2 p;
  for (const auto& [a, b] : xs) p.emplace_back(a, b);
  return p;
}

}  // namespace trop2::testing

#include "trop2/puiseux.hpp"

namespace trop2::testing {

inline LaurentPolynomial laurent(std::size_t d,
                                 std::initializer_list<std::pair<ExponentVector, const char*>> terms) {
  LaurentPolynomial f;
  f.d = d;
  for (const auto& [s, c] : terms) f.add(s, parse_puiseux(c));
  return f;
}

}  // namespace trop2::testing
