#include "trop2/rational.hpp"

#include "trop2/error.hpp"

#include <cctype>

namespace trop2 {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeExponentAtTropZero: return "NegativeExponentAtTropZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InadmissibleEvaluation: return "InadmissibleEvaluation";
    case ErrorCode::NonEvaluableExponent: return "NonEvaluableExponent";
    case ErrorCode::EmptyPolyhedron: return "EmptyPolyhedron";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::CellNotInComplex: return "CellNotInComplex";
    case ErrorCode::CoefficientDependsOnU: return "CoefficientDependsOnU";
    case ErrorCode::NonGenericDirection: return "NonGenericDirection";
    case ErrorCode::IsolatedGenerator: return "IsolatedGenerator";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class p(n, 10), q(std::string(den), 10);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string pretty_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

int sign(const Rational& value) { return sgn(value); }

std::optional<Rational> exact_root(const Rational& value, unsigned long k) {
  if (sgn(value) <= 0 || k == 0) return std::nullopt;
  mpz_class num, den;
  if (mpz_root(num.get_mpz_t(), value.get_num_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), value.get_den_mpz_t(), k) == 0) return std::nullopt;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_power(const Rational& value, const Rational& exponent) {
  if (sgn(value) <= 0) return std::nullopt;
  if (!exponent.get_den().fits_ulong_p() || !mpz_class(abs(exponent.get_num())).fits_ulong_p())
    return std::nullopt;
  auto root = exact_root(value, exponent.get_den().get_ui());
  if (!root) return std::nullopt;
  unsigned long e = mpz_class(abs(exponent.get_num())).get_ui();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), root->get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), root->get_den_mpz_t(), e);
  Rational r = sgn(exponent) >= 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace trop2
