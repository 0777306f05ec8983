#include "random.hpp"
#include "support.hpp"
#include "trop2/core.hpp"
#include "trop2/error.hpp"
#include "trop2/rational.hpp"

#include <gtest/gtest.h>

using namespace trop2;
using namespace trop2::testing;

namespace {

Rank2Value v(long a, long b) { return Rank2Value(a, b); }
const Rank2Value kInf = Rank2Value::zero();

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational(" -6/4 "), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(format_rational(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(format_rational(Rational(4)), "4/1");
  EXPECT_EQ(pretty_rational(Rational(4)), "4");
  for (const char* bad : {"", "1/0", "x", "1/2/3", "--1"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
}

TEST(Rational, ExactPower) {
  EXPECT_EQ(*exact_power(Rational(1, 4), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(*exact_power(Rational(2), Rational(-3)), Rational(1, 8));
  EXPECT_FALSE(exact_power(Rational(2), Rational(1, 2)).has_value());
}

TEST(Semifield, AddIsLexMin) {
  EXPECT_EQ(trop_add(v(9, 0), v(2, 0)), v(2, 0));
  EXPECT_EQ(trop_add(v(1, 1000), v(1, 1)), v(1, 1));
  EXPECT_EQ(trop_add(kInf, v(3, -7)), v(3, -7));
  EXPECT_EQ(trop_add(v(3, -7), kInf), v(3, -7));
}

TEST(Semifield, MulIsComponentwiseSum) {
  EXPECT_EQ(trop_mul(v(1, 0), v(1, 1)), v(2, 1));
  EXPECT_EQ(trop_mul(v(0, 0), v(4, -2)), v(4, -2));
  EXPECT_EQ(trop_mul(kInf, v(5, 5)), kInf);
  EXPECT_EQ(trop_mul(v(5, 5), kInf), kInf);
}

TEST(Semifield, TropZeroAboveEverything) {
  EXPECT_LT(v(1000000, 1000000), kInf);
  EXPECT_EQ(kInf, kInf);
  EXPECT_LT(v(1, 1000), v(2, -1000));
}

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing({1, 0}, tpoint({{2, 1}, {1, 1}})), v(2, 1));
  EXPECT_EQ(pairing({0, 0, 0}, tpoint({{2, 1}, {-4, 8}, {0, 3}})), v(0, 0));
  EXPECT_EQ(pairing({2, -1}, tpoint({{1, 0}, {3, 5}})), v(-1, -5));
}

TEST(Pairing, TropZeroCoordinates) {
  TropPoint2 p{v(1, 1), kInf};
  EXPECT_EQ(pairing({3, 0}, p), v(3, 3));
  EXPECT_EQ(pairing({1, 2}, p), kInf);
  try {
    pairing({1, -1}, p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeExponentAtTropZero);
  }
}

TEST(Coordinates, BlockBijection) {
  auto p = tpoint({{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(to_block(p), vec({1, 3, 5, 2, 4, 6}));
  EXPECT_EQ(t_block(p), vec({1, 3, 5}));
  EXPECT_EQ(u_block(p), vec({2, 4, 6}));
  EXPECT_EQ(from_blocks(t_block(p), u_block(p)), p);
}

// Property suites on random values, including TropZero.
class SemifieldProperty : public ::testing::Test {
 protected:
  Rank2Value draw() { return rng.chance(0.1) ? kInf : Rank2Value(rng.rational(-5, 5, 4), rng.rational(-5, 5, 4)); }
  Random rng{2024};
};

TEST_F(SemifieldProperty, Axioms) {
  for (int k = 0; k < 2000; ++k) {
    auto x = draw(), y = draw(), z = draw();
    EXPECT_EQ(trop_add(x, trop_add(y, z)), trop_add(trop_add(x, y), z));
    EXPECT_EQ(trop_mul(x, trop_mul(y, z)), trop_mul(trop_mul(x, y), z));
    EXPECT_EQ(trop_add(x, y), trop_add(y, x));
    EXPECT_EQ(trop_mul(x, y), trop_mul(y, x));
    EXPECT_EQ(trop_mul(x, trop_add(y, z)), trop_add(trop_mul(x, y), trop_mul(x, z)));
    EXPECT_EQ(trop_add(x, x), x);
    EXPECT_EQ(trop_add(x, kInf), x);
    EXPECT_EQ(trop_mul(x, Rank2Value()), x);
  }
}

TEST_F(SemifieldProperty, OrderIsTotal) {
  for (int k = 0; k < 2000; ++k) {
    auto x = draw(), y = draw();
    int relations = (x < y) + (x == y) + (x > y);
    EXPECT_EQ(relations, 1);
    // lex comparison spelled out
    if (x.is_finite() && y.is_finite()) {
      bool lex = x.first() < y.first() || (x.first() == y.first() && x.second() < y.second());
      EXPECT_EQ(x < y, lex);
    }
  }
}

TEST_F(SemifieldProperty, PairingAdditiveInExponent) {
  for (int k = 0; k < 1000; ++k) {
    std::size_t d = static_cast<std::size_t>(rng.integer(1, 4));
    TropPoint2 p = rng.point2(d, -5, 5, 3);
    if (rng.chance(0.3)) p[static_cast<std::size_t>(rng.integer(0, static_cast<long>(d) - 1))] = kInf;
    ExponentVector s(d), r(d), sr(d);
    for (std::size_t i = 0; i < d; ++i) {
      s[i] = rng.integer(-3, 3), r[i] = rng.integer(-3, 3);
      sr[i] = s[i] + r[i];
    }
    auto defined = [&](const ExponentVector& e) {
      for (std::size_t i = 0; i < d; ++i)
        if (p[i].is_zero() && e[i] < 0) return false;
      return true;
    };
    if (!defined(s) || !defined(r) || !defined(sr)) continue;
    EXPECT_EQ(pairing(sr, p), trop_mul(pairing(s, p), pairing(r, p)));
  }
}
