#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nestroot::gray {

// Largest order for which a full code listing is materialized. Rank and
// unrank work directly on 64-bit words and accept orders up to kMaxRankOrder.
inline constexpr int kMaxGenerateOrder = 24;
inline constexpr int kMaxRankOrder = 62;

// A bit string of fixed order, most significant (leftmost) bit first.
class GrayString {
 public:
  // Builds the string holding the low `order` bits of `word`, high bit first.
  static GrayString FromWord(int order, std::uint64_t word);
  // Parses ASCII '0'/'1'. Throws kParse on other characters or empty input.
  static GrayString Parse(std::string_view text);

  int order() const { return static_cast<int>(bits_.size()); }
  bool bit(int i) const { return bits_.at(static_cast<std::size_t>(i)) != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::uint64_t ToWord() const;
  std::string ToString() const;

  friend bool operator==(const GrayString&, const GrayString&) = default;

 private:
  explicit GrayString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
  std::vector<std::uint8_t> bits_;
};

// The reflected binary code of a given order: 2^order strings.
class GrayCode {
 public:
  int order() const { return order_; }
  std::size_t size() const { return words_.size(); }
  // 1-based, matching g_{order,j}.
  GrayString at_rank(std::uint64_t j) const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::vector<GrayString> strings() const;
  // Newline-separated listing, one string per line.
  std::string ToLines() const;

  friend bool operator==(const GrayCode&, const GrayCode&) = default;

 private:
  friend GrayCode Generate(int order);
  friend GrayCode EncapsulatedSubcode(const GrayCode& code, int m);
  GrayCode(int order, std::vector<std::uint64_t> words)
      : order_(order), words_(std::move(words)) {}

  int order_ = 0;
  std::vector<std::uint64_t> words_;
};

// Reflect-and-prefix construction. Throws kInvalidOrder unless
// 1 <= order <= kMaxGenerateOrder.
GrayCode Generate(int order);

// g_{order,j} without materializing the code. Throws kRankOutOfBounds unless
// 1 <= j <= 2^order.
GrayString Unrank(int order, std::uint64_t j);

// Inverse of Unrank; 1-based.
std::uint64_t Rank(const GrayString& g);

// The order-m code sitting at the tail of `code`: the final 2^m strings,
// projected onto their trailing m bits, read back from the last string.
// Throws kInvalidOrder unless 1 <= m < code.order().
GrayCode EncapsulatedSubcode(const GrayCode& code, int m);

int HammingDistance(const GrayString& a, const GrayString& b);

}  // namespace nestroot::gray
