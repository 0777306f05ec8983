#include "trop2/core.hpp"

#include "trop2/error.hpp"

namespace trop2 {

std::strong_ordering operator<=>(const Rank2Value& x, const Rank2Value& y) {
  if (x.infinite_ || y.infinite_) {
    if (x.infinite_ && y.infinite_) return std::strong_ordering::equal;
    return x.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (int c = cmp(x.first_, y.first_); c != 0)
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(x.second_, y.second_);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Rank2Value operator-(const Rank2Value& x, const Rank2Value& y) {
  if (!x.is_finite() || !y.is_finite())
    throw Error(ErrorCode::ValidationError, "difference of TropZero is undefined");
  return {x.first_ - y.first_, x.second_ - y.second_};
}

Rank2Value Rank2Value::operator-() const {
  if (infinite_) throw Error(ErrorCode::ValidationError, "negation of TropZero is undefined");
  return {-first_, -second_};
}

Rank2Value Rank2Value::scaled(const Rational& k) const {
  if (infinite_) return *this;
  return {first_ * k, second_ * k};
}

std::string Rank2Value::to_string() const {
  if (infinite_) return "inf";
  return "(" + pretty_rational(first_) + "," + pretty_rational(second_) + ")";
}

Rank2Value trop_add(const Rank2Value& x, const Rank2Value& y) { return y < x ? y : x; }

Rank2Value trop_mul(const Rank2Value& x, const Rank2Value& y) {
  if (x.is_zero() || y.is_zero()) return Rank2Value::zero();
  return {x.first() + y.first(), x.second() + y.second()};
}

bool is_finite_point(const TropPoint2& p) {
  for (const auto& c : p)
    if (c.is_zero()) return false;
  return true;
}

Rank2Value pairing(const ExponentVector& s, const TropPoint2& p) {
  if (s.size() != p.size())
    throw Error(ErrorCode::DimensionMismatch, "pairing: exponent and point lengths differ");
  Rational a = 0, b = 0;
  bool infinite = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) continue;
    if (p[i].is_zero()) {
      if (s[i] < 0)
        throw Error(ErrorCode::NegativeExponentAtTropZero,
                    "pairing: negative exponent at a TropZero coordinate");
      infinite = true;
      continue;
    }
    a += Rational(static_cast<long>(s[i])) * p[i].first();
    b += Rational(static_cast<long>(s[i])) * p[i].second();
  }
  if (infinite) return Rank2Value::zero();
  return {a, b};
}

RationalVector t_block(const TropPoint2& p) {
  RationalVector out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.first());
  return out;
}

RationalVector u_block(const TropPoint2& p) {
  RationalVector out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.second());
  return out;
}

RationalVector to_block(const TropPoint2& p) {
  RationalVector out = t_block(p);
  RationalVector u = u_block(p);
  out.insert(out.end(), u.begin(), u.end());
  return out;
}

TropPoint2 from_blocks(const RationalVector& t, const RationalVector& u) {
  if (t.size() != u.size())
    throw Error(ErrorCode::DimensionMismatch, "from_blocks: block sizes differ");
  TropPoint2 p;
  p.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) p.emplace_back(t[i], u[i]);
  return p;
}

std::string exponent_to_string(const ExponentVector& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

}  // namespace trop2
