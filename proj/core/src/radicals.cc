#include "nestroot/radicals.hpp"

#include <cmath>
#include <numbers>

#include "nestroot/error.hpp"

namespace nestroot::radicals {

namespace {

constexpr std::string_view kPiDigits =
    "3.14159265358979323846264338327950288419716939937510"
    "58209749445923078164062862089986280348253421170679";

void CheckIndex(int n) {
  if (n < 1 || n > kMaxIndex) {
    throw Error(ErrorKind::kInvalidOrder,
                "polynomial index must lie in 1.." + std::to_string(kMaxIndex) +
                    ", got " + std::to_string(n));
  }
}

void CheckRank(int n, std::uint64_t j) {
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  if (j < 1 || j > count) {
    throw Error(ErrorKind::kRankOutOfBounds,
                "rank " + std::to_string(j) + " outside 1.." +
                    std::to_string(count) + " for L_" + std::to_string(n));
  }
}

}  // namespace

SignString::SignString(const gray::GrayString& g)
    : bits_(g.bits().begin(), g.bits().end()) {}

SignString SignString::Parse(std::string_view text) {
  SignString out;
  out.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::kParse,
                  "sign strings use only '0' and '1': " + std::string(text));
    }
    out.bits_.push_back(c == '1' ? 1 : 0);
  }
  return out;
}

SignString SignString::Prefixed(bool bit) const {
  SignString out;
  out.bits_.reserve(bits_.size() + 1);
  out.bits_.push_back(bit ? 1 : 0);
  out.bits_.insert(out.bits_.end(), bits_.begin(), bits_.end());
  return out;
}

SignString SignString::Tail() const {
  SignString out;
  if (!bits_.empty()) out.bits_.assign(bits_.begin() + 1, bits_.end());
  return out;
}

std::string SignString::ToString() const {
  std::string out;
  out.reserve(bits_.size());
  for (std::uint8_t b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

std::string SignString::ToRadical() const {
  std::string out;
  out.reserve(bits_.size() * 8 + 8);
  for (std::uint8_t b : bits_) {
    out += "sqrt(2";
    out += b ? '-' : '+';
  }
  out += "sqrt(2)";
  out.append(bits_.size(), ')');
  return out;
}

double AngleRational::radians() const {
  return std::ldexp(static_cast<double>(numerator) * std::numbers::pi,
                    -denominator_log2);
}

double AngleRational::two_cos() const { return 2.0 * std::cos(radians()); }

RadicalValue EvalRadical(const SignString& signs, int p) {
  const DyadicInterval two = DyadicInterval::Point(Dyadic(2), p);
  DyadicInterval omega = two;
  DyadicInterval value = Sqrt(two, p);
  for (std::size_t i = signs.size(); i-- > 0;) {
    omega = signs.bit(i) ? Sub(two, value, p) : Add(two, value, p);
    value = Sqrt(omega, p);
  }
  return RadicalValue{signs, std::move(omega), std::move(value), p};
}

RadicalValue ZeroByRank(int n, std::uint64_t j, int p) {
  CheckIndex(n);
  CheckRank(n, j);
  if (n == 1) return EvalRadical(SignString(), p);
  return EvalRadical(SignString(gray::Unrank(n - 1, j)), p);
}

AngleRational ClosedFormAngle(int n, std::uint64_t j) {
  CheckIndex(n);
  CheckRank(n, j);
  return AngleRational{2 * j - 1, n + 1};
}

DyadicInterval ApproximatePi(int depth, int p) {
  CheckIndex(depth);
  const RadicalValue smallest =
      ZeroByRank(depth, std::uint64_t{1} << (depth - 1), p);
  return Scale2(smallest.value, depth);
}

DyadicInterval PiEnclosure(int p) {
  const DyadicInterval literal = ParseDecimal(kPiDigits, p);
  const DyadicInterval ulp = ParseDecimal("1e-100", p);
  return DyadicInterval(literal.lo(),
                        Add(DyadicInterval::Point(literal.hi()), ulp, p).hi(), p);
}

std::string RenderValue(const SignString& signs, int digits,
                        DecimalRounding mode, int start_bits, int max_bits) {
  for (int p = std::max(start_bits, kMinPrecisionBits);; p *= 2) {
    try {
      return ToDecimal(EvalRadical(signs, p).value, digits, mode);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInsufficientPrecision || p * 2 > max_bits) {
        throw;
      }
    }
  }
}

}  // namespace nestroot::radicals
