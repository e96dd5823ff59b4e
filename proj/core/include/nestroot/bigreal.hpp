#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace nestroot {

// Exponents are kept well inside int64 so that sums of two never wrap.
inline constexpr std::int64_t kMaxExponent = std::int64_t{1} << 40;
inline constexpr int kMinPrecisionBits = 8;

enum class Round { kDown, kUp };

// mantissa * 2^exponent, stored with an odd mantissa (or zero with exponent 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value);  // NOLINT(google-explicit-constructor)
  Dyadic(mpz_class mantissa, std::int64_t exponent);

  const mpz_class& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return sign() == 0; }

  // value * 2^k, exact.
  Dyadic Shifted(std::int64_t k) const;
  // Rounded to at most `bits` significant bits toward -inf or +inf.
  Dyadic RoundedTo(int bits, Round dir) const;
  // Approximation for diagnostics and double-precision cross-checks.
  double ToDouble() const;

  // "+1ap-3" style bit-exact persistence: sign, hex mantissa, 'p', exponent.
  std::string ToHex() const;
  static Dyadic ParseHex(std::string_view text);

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a);
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }

 private:
  void Normalize();

  mpz_class mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

Dyadic Abs(const Dyadic& a);
int BitLength(const mpz_class& m);
// Position of the leading bit: floor(log2 |a|) + 1. Zero maps to INT64_MIN.
std::int64_t Magnitude(const Dyadic& a);

// a / b rounded to `bits` significant bits in the requested direction.
Dyadic Divide(const Dyadic& a, const Dyadic& b, int bits, Round dir);
// sqrt(a) rounded to `bits` significant bits; a must be nonnegative.
Dyadic Sqrt(const Dyadic& a, int bits, Round dir);

// A closed interval [lo, hi] of dyadic rationals enclosing some exact real.
class DyadicInterval {
 public:
  DyadicInterval() = default;
  DyadicInterval(Dyadic lo, Dyadic hi, int precision_bits);
  static DyadicInterval Point(const Dyadic& x, int precision_bits = 0);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  int precision_bits() const { return precision_bits_; }

  Dyadic width() const { return hi_ - lo_; }
  Dyadic midpoint() const { return (lo_ + hi_).Shifted(-1); }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const DyadicInterval& inner) const {
    return lo_ <= inner.lo_ && inner.hi_ <= hi_;
  }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool overlaps(const DyadicInterval& o) const {
    return lo_ <= o.hi_ && o.lo_ <= hi_;
  }

  friend bool operator==(const DyadicInterval& a, const DyadicInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Dyadic lo_;
  Dyadic hi_;
  int precision_bits_ = 0;
};

// Outward-rounded interval arithmetic. Every result encloses the exact image
// of all reals in the inputs; endpoints carry at most p significant bits.
DyadicInterval Add(const DyadicInterval& a, const DyadicInterval& b, int p);
DyadicInterval Sub(const DyadicInterval& a, const DyadicInterval& b, int p);
DyadicInterval Mul(const DyadicInterval& a, const DyadicInterval& b, int p);
DyadicInterval Square(const DyadicInterval& a, int p);
// Throws kDomain when b contains zero.
DyadicInterval Div(const DyadicInterval& a, const DyadicInterval& b, int p);
// Throws kNegativeRadicand when a.lo() < 0, including intervals that merely
// straddle zero.
DyadicInterval Sqrt(const DyadicInterval& a, int p);
// Exact operations.
DyadicInterval Neg(const DyadicInterval& a);
DyadicInterval Scale2(const DyadicInterval& a, std::int64_t k);
// Widens both endpoints to p bits.
DyadicInterval RoundOutward(const DyadicInterval& a, int p);

enum class Ordering { kLess, kGreater, kInconclusive };

// Decides a < b or a > b only when the intervals are disjoint.
Ordering Compare(const DyadicInterval& a, const DyadicInterval& b);
const char* ToString(Ordering o);

enum class DecimalRounding { kNearestEven, kTruncate };

// Renders with exactly `digits` fractional digits. Throws
// kInsufficientPrecision when the interval is wider than
// 10^-digits * max(1, |a|) or when its endpoints render differently.
std::string ToDecimal(const DyadicInterval& a, int digits,
                      DecimalRounding mode = DecimalRounding::kNearestEven);

// Encloses a decimal literal such as "-3.25e-2". Exact when the literal is
// dyadic, otherwise rounded outward to p bits.
DyadicInterval ParseDecimal(std::string_view text, int p);

}  // namespace nestroot
