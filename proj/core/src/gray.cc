#include "nestroot/gray.hpp"

#include <algorithm>
#include <bit>

#include "nestroot/error.hpp"

namespace nestroot::gray {

namespace {

void CheckOrder(int order, int cap) {
  if (order < 1 || order > cap) {
    throw Error(ErrorKind::kInvalidOrder,
                "order must lie in 1.." + std::to_string(cap) + ", got " +
                    std::to_string(order));
  }
}

std::uint64_t LowMask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

GrayString GrayString::FromWord(int order, std::uint64_t word) {
  CheckOrder(order, kMaxRankOrder);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    bits[static_cast<std::size_t>(i)] = (word >> (order - 1 - i)) & 1U;
  }
  return GrayString(std::move(bits));
}

GrayString GrayString::Parse(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorKind::kParse, "empty Gray string");
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::kParse,
                  "Gray strings use only '0' and '1': " + std::string(text));
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return GrayString(std::move(bits));
}

std::uint64_t GrayString::ToWord() const {
  if (order() > kMaxRankOrder) {
    throw Error(ErrorKind::kInvalidOrder, "string too long for a 64-bit word");
  }
  std::uint64_t word = 0;
  for (std::uint8_t b : bits_) word = (word << 1) | b;
  return word;
}

std::string GrayString::ToString() const {
  std::string out;
  out.reserve(bits_.size());
  for (std::uint8_t b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

GrayString GrayCode::at_rank(std::uint64_t j) const {
  if (j < 1 || j > words_.size()) {
    throw Error(ErrorKind::kRankOutOfBounds,
                "rank " + std::to_string(j) + " outside 1.." +
                    std::to_string(words_.size()));
  }
  return GrayString::FromWord(order_, words_[j - 1]);
}

std::vector<GrayString> GrayCode::strings() const {
  std::vector<GrayString> out;
  out.reserve(words_.size());
  for (std::uint64_t w : words_) out.push_back(GrayString::FromWord(order_, w));
  return out;
}

std::string GrayCode::ToLines() const {
  std::string out;
  for (std::uint64_t w : words_) {
    out += GrayString::FromWord(order_, w).ToString();
    out.push_back('\n');
  }
  return out;
}

GrayCode Generate(int order) {
  CheckOrder(order, kMaxGenerateOrder);
  std::vector<std::uint64_t> words = {0, 1};
  words.reserve(std::size_t{1} << order);
  for (int k = 2; k <= order; ++k) {
    // Prefix the previous listing with 0 (a no-op on words), then append it
    // reversed with a leading 1.
    const std::uint64_t high = std::uint64_t{1} << (k - 1);
    const std::size_t half = words.size();
    for (std::size_t i = half; i-- > 0;) words.push_back(high | words[i]);
  }
  return GrayCode(order, std::move(words));
}

GrayString Unrank(int order, std::uint64_t j) {
  CheckOrder(order, kMaxRankOrder);
  const std::uint64_t count = std::uint64_t{1} << order;
  if (j < 1 || j > count) {
    throw Error(ErrorKind::kRankOutOfBounds,
                "rank " + std::to_string(j) + " outside 1.." +
                    std::to_string(count));
  }
  const std::uint64_t v = j - 1;
  return GrayString::FromWord(order, v ^ (v >> 1));
}

std::uint64_t Rank(const GrayString& g) {
  std::uint64_t v = g.ToWord();
  // Prefix XOR from the top bit down.
  for (int shift = 1; shift < 64; shift <<= 1) v ^= v >> shift;
  return v + 1;
}

GrayCode EncapsulatedSubcode(const GrayCode& code, int m) {
  if (m < 1 || m >= code.order()) {
    throw Error(ErrorKind::kInvalidOrder,
                "sub-code order must lie in 1.." +
                    std::to_string(code.order() - 1) + ", got " +
                    std::to_string(m));
  }
  const std::size_t len = std::size_t{1} << m;
  const std::uint64_t mask = LowMask(m);
  std::vector<std::uint64_t> words;
  words.reserve(len);
  auto all = code.words();
  for (std::size_t i = 0; i < len; ++i) {
    words.push_back(all[all.size() - 1 - i] & mask);
  }
  return GrayCode(m, std::move(words));
}

int HammingDistance(const GrayString& a, const GrayString& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::kInvalidOrder, "Hamming distance needs equal orders");
  }
  int d = 0;
  for (int i = 0; i < a.order(); ++i) d += a.bit(i) != b.bit(i);
  return d;
}

}  // namespace nestroot::gray
