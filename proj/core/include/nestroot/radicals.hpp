#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nestroot/bigreal.hpp"
#include "nestroot/gray.hpp"

namespace nestroot::radicals {

// Signs of a nested radical sqrt(2 ± sqrt(2 ± ... ± sqrt(2))), outermost
// first: bit 0 is '+', bit 1 is '-'. The innermost sqrt(2) carries no sign, so
// a string of length n-1 names a positive zero of L_n.
class SignString {
 public:
  SignString() = default;
  explicit SignString(const gray::GrayString& g);
  // Accepts the empty string.
  static SignString Parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool bit(std::size_t i) const { return bits_.at(i) != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  SignString Prefixed(bool bit) const;
  // Drops the outermost sign.
  SignString Tail() const;
  std::string ToString() const;
  // Functional notation, e.g. "sqrt(2+sqrt(2-sqrt(2)))".
  std::string ToRadical() const;

  friend bool operator==(const SignString&, const SignString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct RadicalValue {
  SignString signs;
  DyadicInterval omega;  // quantity under the outermost root
  DyadicInterval value;  // sqrt(omega)
  int precision_bits = 0;
};

// angle = numerator * pi / 2^denominator_log2, inside (0, pi/2).
struct AngleRational {
  std::uint64_t numerator = 1;
  int denominator_log2 = 2;

  double radians() const;
  // 2 cos(angle) in hardware double.
  double two_cos() const;
};

// Largest L_n index served through Gray ranks (sign strings fit a 64-bit word).
inline constexpr int kMaxIndex = gray::kMaxRankOrder + 1;

// Innermost-out evaluation in interval arithmetic at p bits.
RadicalValue EvalRadical(const SignString& signs, int p);

// The j-th largest positive zero of L_n: the radical whose signs are the
// order-(n-1) Gray string of rank j. Throws kRankOutOfBounds unless
// 1 <= j <= 2^(n-1); kInvalidOrder unless 1 <= n <= kMaxIndex.
RadicalValue ZeroByRank(int n, std::uint64_t j, int p);

// The angle with ZeroByRank(n, j) = 2 cos((2j-1) pi / 2^(n+1)).
AngleRational ClosedFormAngle(int n, std::uint64_t j);

// 2^depth times the smallest positive zero of L_depth, which equals
// 2^(depth+1) sin(pi / 2^(depth+1)) and approaches pi from below.
DyadicInterval ApproximatePi(int depth, int p);

// Encloses pi from a 100-digit literal; tight for p up to about 330 bits.
DyadicInterval PiEnclosure(int p);

// Renders the radical's value to `digits` fractional digits, doubling the
// working precision from `start_bits` until the rendering is unambiguous.
std::string RenderValue(const SignString& signs, int digits,
                        DecimalRounding mode, int start_bits = 64,
                        int max_bits = 65536);

}  // namespace nestroot::radicals
