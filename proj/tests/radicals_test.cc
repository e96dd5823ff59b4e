#include "nestroot/radicals.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "nestroot/error.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

namespace nestroot::radicals {
namespace {

std::string Render(const char* signs, int digits) {
  return RenderValue(SignString::Parse(signs), digits, DecimalRounding::kNearestEven);
}

TEST(SignString, RadicalNotation) {
  EXPECT_EQ(SignString::Parse("").ToRadical(), "sqrt(2)");
  EXPECT_EQ(SignString::Parse("01").ToRadical(), "sqrt(2+sqrt(2-sqrt(2)))");
  EXPECT_EQ(SignString::Parse("001").ToRadical(), "sqrt(2+sqrt(2+sqrt(2-sqrt(2))))");
  EXPECT_EQ(SignString::Parse("10").Tail(), SignString::Parse("0"));
  EXPECT_EQ(SignString::Parse("0").Prefixed(true), SignString::Parse("10"));
}

TEST(EvalRadical, Examples) {
  EXPECT_EQ(Render("", 5), "1.41421");
  EXPECT_EQ(Render("100", 5), "0.19603");
  EXPECT_EQ(Render("000", 5), "1.99037");
  // 2 cos(11 pi / 32) = 0.9427934...
  EXPECT_EQ(Render("111", 5), "0.94279");
}

TEST(EvalRadical, OmegaIsRadicand) {
  const RadicalValue v = EvalRadical(SignString::Parse("1"), 128);
  // omega = 2 - sqrt(2)
  EXPECT_NEAR(v.omega.midpoint().ToDouble(), 2 - std::sqrt(2.0), 1e-15);
  EXPECT_TRUE(Square(v.value, 128).overlaps(v.omega));
}

TEST(ZeroByRank, Examples) {
  const RadicalValue first = ZeroByRank(4, 1, 128);
  EXPECT_EQ(first.signs.ToString(), "000");
  EXPECT_EQ(ToDecimal(first.value, 5), "1.99037");
  const RadicalValue fifth = ZeroByRank(4, 5, 128);
  EXPECT_EQ(fifth.signs.ToString(), "110");
  EXPECT_EQ(ToDecimal(fifth.value, 5), "1.26879");
  const RadicalValue root2 = ZeroByRank(1, 1, 64);
  EXPECT_TRUE(root2.signs.empty());
  EXPECT_TRUE(Square(root2.value, 64).contains(Dyadic(2)));
}

TEST(ZeroByRank, Errors) {
  EXPECT_THROW(ZeroByRank(4, 9, 64), Error);
  EXPECT_THROW(ZeroByRank(0, 1, 64), Error);
  EXPECT_THROW(ZeroByRank(kMaxIndex + 1, 1, 64), Error);
}

TEST(ClosedFormAngle, Examples) {
  const AngleRational a = ClosedFormAngle(4, 8);
  EXPECT_EQ(a.numerator, 15u);
  EXPECT_EQ(a.denominator_log2, 5);
  EXPECT_NEAR(a.two_cos(), 0.196034, 1e-6);
  const AngleRational b = ClosedFormAngle(1, 1);
  EXPECT_EQ(b.numerator, 1u);
  EXPECT_EQ(b.denominator_log2, 2);
  EXPECT_NEAR(b.two_cos(), std::sqrt(2.0), 1e-15);
  const AngleRational c = ClosedFormAngle(4, 4);
  EXPECT_EQ(c.numerator, 7u);
  EXPECT_NEAR(c.two_cos(), 1.54602, 1e-5);
}

TEST(ClosedFormAngle, AgreesWithRadicals) {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t j = 1; j <= (std::uint64_t{1} << (n - 1)); ++j) {
      const double value = ZeroByRank(n, j, 80).value.midpoint().ToDouble();
      EXPECT_NEAR(value, static_cast<double>(oracle::ZeroByAngle(n, j)), 1e-12);
      EXPECT_NEAR(value, ClosedFormAngle(n, j).two_cos(), 1e-12);
    }
  }
}

TEST(ApproximatePi, DepthFour) {
  const DyadicInterval v = ApproximatePi(4, 128);
  EXPECT_EQ(ToDecimal(v, 8), "3.13654849");
  const double err = M_PI - v.midpoint().ToDouble();
  EXPECT_NEAR(err, std::pow(M_PI, 3) / (6 * std::pow(4.0, 5)), 2e-5);
  EXPECT_NEAR(v.midpoint().ToDouble(), 32 * std::sin(M_PI / 32), 1e-14);
}

TEST(ApproximatePi, DepthOneFollowsTheFormula) {
  // 2^1 times the smallest zero of L_1 = 2 sqrt(2) = 4 sin(pi/4).
  EXPECT_EQ(ToDecimal(ApproximatePi(1, 128), 4), "2.8284");
}

TEST(ApproximatePi, ErrorShrinksByFour) {
  const DyadicInterval pi = PiEnclosure(256);
  auto error = [&](int depth) {
    return Sub(pi, ApproximatePi(depth, 256), 256).midpoint().ToDouble();
  };
  for (int d = 4; d < 12; ++d) {
    const double ratio = error(d) / error(d + 1);
    EXPECT_GT(ratio, 3.9);
    EXPECT_LT(ratio, 4.1);
  }
}

TEST(PiEnclosure, IsTight) {
  const DyadicInterval pi = PiEnclosure(256);
  EXPECT_EQ(ToDecimal(pi, 60), "3.141592653589793238462643383279502884197169399375105820974945");
}

TEST(RenderValue, EscalatesPrecision) {
  EXPECT_EQ(RenderValue(SignString::Parse("0000000000"), 40, DecimalRounding::kTruncate, 16),
            ToDecimal(EvalRadical(SignString::Parse("0000000000"), 512).value, 40,
                      DecimalRounding::kTruncate));
  EXPECT_THROW(RenderValue(SignString::Parse("1"), 100, DecimalRounding::kTruncate, 16, 64), Error);
}

TEST(RadicalProperties, DefiningRecurrence) { EXPECT_EQ(property::RadicalRecurrence(11), ""); }

}  // namespace
}  // namespace nestroot::radicals
