#include "trop2/puiseux.hpp"

#include "trop2/error.hpp"

#include <cctype>

namespace trop2 {

PuiseuxPoly PuiseuxPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

PuiseuxPoly PuiseuxPoly::monomial(const Rational& c, const Rational& t_exp, const Rational& u_exp) {
  PuiseuxPoly p;
  p.add_term(c, t_exp, u_exp);
  return p;
}

void PuiseuxPoly::add_term(const Rational& c, const Rational& t_exp, const Rational& u_exp) {
  if (sgn(c) == 0) return;
  ExponentPair key{t_exp, u_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

bool PuiseuxPoly::is_u_free() const {
  for (const auto& [e, c] : terms_)
    if (sgn(e.u) != 0) return false;
  return true;
}

bool PuiseuxPoly::is_t_free() const {
  for (const auto& [e, c] : terms_)
    if (sgn(e.t) != 0) return false;
  return true;
}

PuiseuxPoly PuiseuxPoly::operator-() const {
  PuiseuxPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

PuiseuxPoly operator+(const PuiseuxPoly& x, const PuiseuxPoly& y) {
  PuiseuxPoly out = x;
  for (const auto& [e, c] : y.terms_) out.add_term(c, e.t, e.u);
  return out;
}

PuiseuxPoly operator-(const PuiseuxPoly& x, const PuiseuxPoly& y) { return x + (-y); }

PuiseuxPoly operator*(const PuiseuxPoly& x, const PuiseuxPoly& y) {
  PuiseuxPoly out;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) out.add_term(cx * cy, ex.t + ey.t, ex.u + ey.u);
  return out;
}

PuiseuxPoly poly_add(const PuiseuxPoly& x, const PuiseuxPoly& y) { return x + y; }
PuiseuxPoly poly_mul(const PuiseuxPoly& x, const PuiseuxPoly& y) { return x * y; }

namespace {

std::string exponent_text(const Rational& e) {
  if (e.get_den() == 1 && sgn(e) >= 0) return pretty_rational(e);
  return "(" + pretty_rational(e) + ")";
}

}  // namespace

std::string PuiseuxPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    if (sgn(e.t) != 0) body += "t" + (e.t == 1 ? std::string() : "^" + exponent_text(e.t));
    if (sgn(e.u) != 0) {
      if (!body.empty()) body += "*";
      body += "u" + (e.u == 1 ? std::string() : "^" + exponent_text(e.u));
    }
    if (body.empty())
      out += pretty_rational(mag);
    else if (mag == 1)
      out += body;
    else
      out += pretty_rational(mag) + "*" + body;
  }
  return out;
}

Rank2Value val2(const PuiseuxPoly& gamma) {
  if (gamma.is_zero()) return Rank2Value::zero();
  const auto& lead = gamma.terms().begin()->first;
  return {lead.t, lead.u};
}

int leading_sign(const PuiseuxPoly& gamma) {
  if (gamma.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading_sign of the zero polynomial");
  return sgn(gamma.terms().begin()->second);
}

EvalPoint::EvalPoint(Rational value) : value_(std::move(value)) {
  if (sgn(value_) <= 0)
    throw Error(ErrorCode::ValidationError, "evaluation point must be strictly positive");
}

namespace {

struct EvalOutcome {
  PuiseuxPoly image;
  bool admissible = true;
};

// Substitutes one indeterminate; `substitute_u` selects which.
EvalOutcome evaluate(const PuiseuxPoly& gamma, const Rational& value, bool substitute_u) {
  std::map<Rational, Rational> sums;
  for (const auto& [e, c] : gamma.terms()) {
    const Rational& kept = substitute_u ? e.t : e.u;
    const Rational& replaced = substitute_u ? e.u : e.t;
    auto factor = exact_power(value, replaced);
    if (!factor)
      throw Error(ErrorCode::NonEvaluableExponent,
                  "cannot evaluate " + pretty_rational(value) + "^" + pretty_rational(replaced) +
                      " exactly");
    sums[kept] += c * *factor;
  }
  EvalOutcome out;
  for (const auto& [kept, s] : sums) {
    if (sgn(s) == 0) {
      out.admissible = false;
      continue;
    }
    if (substitute_u)
      out.image.add_term(s, kept, 0);
    else
      out.image.add_term(s, 0, kept);
  }
  return out;
}

}  // namespace

PuiseuxPoly partial_eval_u(const PuiseuxPoly& gamma, const EvalPoint& sigma) {
  auto out = evaluate(gamma, sigma.value(), true);
  if (!out.admissible)
    throw Error(ErrorCode::InadmissibleEvaluation,
                "u -> " + pretty_rational(sigma.value()) + " cancels a coefficient of " +
                    gamma.to_string());
  return out.image;
}

PuiseuxPoly partial_eval_t(const PuiseuxPoly& gamma, const EvalPoint& rho) {
  auto out = evaluate(gamma, rho.value(), false);
  if (!out.admissible)
    throw Error(ErrorCode::InadmissibleEvaluation,
                "t -> " + pretty_rational(rho.value()) + " cancels a coefficient of " +
                    gamma.to_string());
  return out.image;
}

bool is_admissible_u(const PuiseuxPoly& gamma, const EvalPoint& sigma) {
  return evaluate(gamma, sigma.value(), true).admissible;
}

bool is_admissible_t(const PuiseuxPoly& gamma, const EvalPoint& rho) {
  return evaluate(gamma, rho.value(), false).admissible;
}

bool check_diagram(const PuiseuxPoly& gamma, const EvalPoint& sigma) {
  if (gamma.is_zero() || leading_sign(gamma) != 1)
    throw Error(ErrorCode::ValidationError, "check_diagram expects a positive polynomial");
  PuiseuxPoly image = partial_eval_u(gamma, sigma);
  return val2(image).first() == val2(gamma).first();
}

void LaurentPolynomial::add(const ExponentVector& s, const PuiseuxPoly& coeff) {
  if (s.size() != d) throw Error(ErrorCode::DimensionMismatch, "exponent length differs from d");
  auto it = terms.find(s);
  if (it == terms.end()) {
    if (!coeff.is_zero()) terms.emplace(s, coeff);
    return;
  }
  it->second = it->second + coeff;
  if (it->second.is_zero()) terms.erase(it);
}

// ---------------------------------------------------------------------------
// Text parser

namespace {

class PuiseuxParser {
 public:
  explicit PuiseuxParser(std::string_view text) : text_(text) {}

  PuiseuxPoly parse() {
    PuiseuxPoly result;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int s = 1;
      if (peek() == '+' || peek() == '-') {
        s = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      PuiseuxPoly term = parse_term();
      result = s > 0 ? result + term : result - term;
      skip_ws();
    }
    return result;
  }

 private:
  PuiseuxPoly parse_term() {
    Rational c = 1, a = 0, b = 0;
    for (;;) {
      skip_ws();
      if (at_end()) fail("unexpected end of input");
      char ch = peek();
      if (ch == 't' || ch == 'u') {
        ++pos_;
        Rational e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = parse_exponent();
        }
        (ch == 't' ? a : b) += e;
      } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '(') {
        c *= parse_number();
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return PuiseuxPoly::monomial(c, a, b);
  }

  Rational parse_exponent() {
    skip_ws();
    if (!at_end() && peek() == '(') {
      ++pos_;
      std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      Rational r = parse_rational(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return r;
    }
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("missing exponent");
    return parse_rational(text_.substr(start, pos_ - start));
  }

  Rational parse_number() {
    if (peek() == '(') {
      ++pos_;
      std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      Rational r = parse_rational(text_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return r;
    }
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == den) fail("missing denominator");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "puiseux: " + what + " at offset " + std::to_string(pos_) + " in '" +
                    std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PuiseuxPoly parse_puiseux(std::string_view text) { return PuiseuxParser(text).parse(); }

}  // namespace trop2
