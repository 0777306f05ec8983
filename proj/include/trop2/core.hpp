#pragma once

// Rank-two tropical semifield T2 together with the tropical zero.
//
// Finite values are pairs of rationals ordered lexicographically; tropical
// addition is the lex-minimum and tropical multiplication is componentwise
// addition. TropZero is larger than every finite value, neutral for the
// addition and absorbing for the multiplication.

#include "trop2/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace trop2 {

class Rank2Value {
 public:
  /// The multiplicative identity (0,0).
  Rank2Value() = default;
  Rank2Value(Rational first, Rational second)
      : first_(std::move(first)), second_(std::move(second)) {}

  static Rank2Value zero() {
    Rank2Value v;
    v.infinite_ = true;
    return v;
  }

  bool is_zero() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Components of a finite value; meaningless for TropZero.
  const Rational& first() const { return first_; }
  const Rational& second() const { return second_; }

  friend bool operator==(const Rank2Value& x, const Rank2Value& y) {
    if (x.infinite_ || y.infinite_) return x.infinite_ == y.infinite_;
    return x.first_ == y.first_ && x.second_ == y.second_;
  }
  friend std::strong_ordering operator<=>(const Rank2Value& x, const Rank2Value& y);

  /// Componentwise difference of finite values (used for sector slopes).
  friend Rank2Value operator-(const Rank2Value& x, const Rank2Value& y);
  Rank2Value operator-() const;
  Rank2Value scaled(const Rational& k) const;

  std::string to_string() const;

 private:
  Rational first_ = 0;
  Rational second_ = 0;
  bool infinite_ = false;
};

/// Component of a rank-two value: first (t) or second (u).
enum class Axis { T, U };

Rank2Value trop_add(const Rank2Value& x, const Rank2Value& y);
Rank2Value trop_mul(const Rank2Value& x, const Rank2Value& y);

using ExponentVector = std::vector<std::int64_t>;
using TropPoint2 = std::vector<Rank2Value>;

bool is_finite_point(const TropPoint2& p);

/// <s, p> = sum_i s_i * p_i in T2. Throws NegativeExponentAtTropZero when some
/// p_i is TropZero with s_i < 0; returns TropZero when some p_i is TropZero
/// with s_i > 0.
Rank2Value pairing(const ExponentVector& s, const TropPoint2& p);

/// Interleaved (p11,p21;...;p1d,p2d) -> block [t-block | u-block].
RationalVector to_block(const TropPoint2& p);
TropPoint2 from_blocks(const RationalVector& t_block, const RationalVector& u_block);
RationalVector t_block(const TropPoint2& p);
RationalVector u_block(const TropPoint2& p);

std::string exponent_to_string(const ExponentVector& s);

}  // namespace trop2
