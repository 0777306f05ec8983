#pragma once

// Finite Laurent-Puiseux polynomials in two indeterminates t and u with
// rational coefficients and rational exponents, ordered by 0 < t << u << 1.

#include "trop2/core.hpp"
#include "trop2/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace trop2 {

/// Exponent pair (a, b) of the monomial t^a u^b.
struct ExponentPair {
  Rational t = 0;
  Rational u = 0;

  friend bool operator==(const ExponentPair& x, const ExponentPair& y) {
    return x.t == y.t && x.u == y.u;
  }
  friend bool operator<(const ExponentPair& x, const ExponentPair& y) {
    if (int c = cmp(x.t, y.t); c != 0) return c < 0;
    return x.u < y.u;
  }
};

class PuiseuxPoly {
 public:
  using TermMap = std::map<ExponentPair, Rational>;

  PuiseuxPoly() = default;

  static PuiseuxPoly constant(const Rational& c);
  static PuiseuxPoly monomial(const Rational& c, const Rational& t_exp, const Rational& u_exp);

  /// Adds c * t^a * u^b in place; zero coefficients are dropped.
  void add_term(const Rational& c, const Rational& t_exp, const Rational& u_exp);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when no term carries a nonzero u-exponent.
  bool is_u_free() const;
  bool is_t_free() const;

  PuiseuxPoly operator-() const;
  friend PuiseuxPoly operator+(const PuiseuxPoly& x, const PuiseuxPoly& y);
  friend PuiseuxPoly operator-(const PuiseuxPoly& x, const PuiseuxPoly& y);
  friend PuiseuxPoly operator*(const PuiseuxPoly& x, const PuiseuxPoly& y);
  friend bool operator==(const PuiseuxPoly& x, const PuiseuxPoly& y) { return x.terms_ == y.terms_; }

  /// Canonical text form, terms in increasing lex order of exponents.
  std::string to_string() const;

 private:
  TermMap terms_;
};

PuiseuxPoly poly_add(const PuiseuxPoly& x, const PuiseuxPoly& y);
PuiseuxPoly poly_mul(const PuiseuxPoly& x, const PuiseuxPoly& y);

/// Lex-minimal exponent pair; TropZero for the zero polynomial.
Rank2Value val2(const PuiseuxPoly& gamma);

/// Sign of the coefficient at the val2 exponent. Throws ZeroPolynomial.
int leading_sign(const PuiseuxPoly& gamma);

/// Strictly positive value substituted for t or u.
class EvalPoint {
 public:
  explicit EvalPoint(Rational value);
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

/// Substitutes u = sigma. Throws InadmissibleEvaluation when a coefficient
/// sum of some t-exponent vanishes, NonEvaluableExponent when sigma^b is
/// irrational.
PuiseuxPoly partial_eval_u(const PuiseuxPoly& gamma, const EvalPoint& sigma);
/// Substitutes t = rho; the result is a polynomial in u only.
PuiseuxPoly partial_eval_t(const PuiseuxPoly& gamma, const EvalPoint& rho);

bool is_admissible_u(const PuiseuxPoly& gamma, const EvalPoint& sigma);
bool is_admissible_t(const PuiseuxPoly& gamma, const EvalPoint& rho);

/// val(partial_eval_u(gamma, sigma)) == first component of val2(gamma).
/// Requires gamma positive and sigma admissible.
bool check_diagram(const PuiseuxPoly& gamma, const EvalPoint& sigma);

/// Parses text such as "3*t^2*u^(-1/2) - t + 1/7*u". Throws ParseError.
PuiseuxPoly parse_puiseux(std::string_view text);

/// d-variate Laurent polynomial whose coefficients are Puiseux polynomials.
struct LaurentPolynomial {
  std::size_t d = 0;
  std::map<ExponentVector, PuiseuxPoly> terms;

  /// Adds coeff * x^s, merging with an existing term.
  void add(const ExponentVector& s, const PuiseuxPoly& coeff);
};

}  // namespace trop2
