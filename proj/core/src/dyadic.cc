#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "nestroot/bigreal.hpp"
#include "nestroot/error.hpp"

namespace nestroot {

namespace {

std::int64_t CheckedAdd(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out) || out > kMaxExponent ||
      out < -kMaxExponent) {
    throw Error(ErrorKind::kExponentOverflow, "dyadic exponent out of range");
  }
  return out;
}

mpz_class ShiftLeft(const mpz_class& m, std::int64_t k) {
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return out;
}

void CheckBits(int bits) {
  if (bits < kMinPrecisionBits) {
    throw Error(ErrorKind::kDomain,
                "precision must be at least " +
                    std::to_string(kMinPrecisionBits) + " bits");
  }
}

}  // namespace

int BitLength(const mpz_class& m) {
  if (sgn(m) == 0) return 0;
  return static_cast<int>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

Dyadic::Dyadic(long value) : mantissa_(value), exponent_(0) { Normalize(); }

Dyadic::Dyadic(mpz_class mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  Normalize();
}

void Dyadic::Normalize() {
  if (sgn(mantissa_) == 0) {
    exponent_ = 0;
    return;
  }
  const mp_bitcnt_t tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
  }
  exponent_ = CheckedAdd(exponent_, static_cast<std::int64_t>(tz));
}

Dyadic Dyadic::Shifted(std::int64_t k) const {
  if (is_zero()) return *this;
  return Dyadic(mantissa_, CheckedAdd(exponent_, k));
}

Dyadic Dyadic::RoundedTo(int bits, Round dir) const {
  CheckBits(bits);
  const int len = BitLength(mantissa_);
  if (len <= bits) return *this;
  const auto drop = static_cast<mp_bitcnt_t>(len - bits);
  mpz_class m;
  if (dir == Round::kDown) {
    mpz_fdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), drop);
  } else {
    mpz_cdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), drop);
  }
  return Dyadic(std::move(m),
                CheckedAdd(exponent_, static_cast<std::int64_t>(drop)));
}

double Dyadic::ToDouble() const {
  if (is_zero()) return 0.0;
  long exp = 0;
  const double frac = mpz_get_d_2exp(&exp, mantissa_.get_mpz_t());
  const std::int64_t total = exponent_ + exp;
  if (total > std::numeric_limits<int>::max()) {
    return std::copysign(std::numeric_limits<double>::infinity(), frac);
  }
  if (total < std::numeric_limits<int>::min()) return std::copysign(0.0, frac);
  return std::ldexp(frac, static_cast<int>(total));
}

std::string Dyadic::ToHex() const {
  std::string out = sign() < 0 ? "-" : "+";
  mpz_class mag = abs(mantissa_);
  out += mag.get_str(16);
  out += 'p';
  out += std::to_string(exponent_);
  return out;
}

Dyadic Dyadic::ParseHex(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorKind::kParse, "malformed hex dyadic: " + std::string(text));
  };
  if (text.size() < 4 || (text[0] != '+' && text[0] != '-')) throw fail();
  const auto p = text.find('p');
  if (p == std::string_view::npos || p < 2 || p + 1 >= text.size()) throw fail();
  const std::string hex(text.substr(1, p - 1));
  for (char c : hex) {
    if (!std::isxdigit(static_cast<unsigned char>(c))) throw fail();
  }
  std::int64_t exponent = 0;
  try {
    std::size_t used = 0;
    const std::string exp_text(text.substr(p + 1));
    exponent = std::stoll(exp_text, &used);
    if (used != exp_text.size()) throw fail();
  } catch (const std::logic_error&) {
    throw fail();
  }
  if (exponent > kMaxExponent || exponent < -kMaxExponent) {
    throw Error(ErrorKind::kExponentOverflow, "dyadic exponent out of range");
  }
  mpz_class m(hex, 16);
  if (text[0] == '-') m = -m;
  return Dyadic(std::move(m), exponent);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.exponent_ <= b.exponent_) {
    return Dyadic(a.mantissa_ + ShiftLeft(b.mantissa_, b.exponent_ - a.exponent_),
                  a.exponent_);
  }
  return Dyadic(ShiftLeft(a.mantissa_, a.exponent_ - b.exponent_) + b.mantissa_,
                b.exponent_);
}

Dyadic operator-(const Dyadic& a) {
  Dyadic out = a;
  out.mantissa_ = -out.mantissa_;
  return out;
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero() || b.is_zero()) return Dyadic();
  return Dyadic(a.mantissa_ * b.mantissa_, CheckedAdd(a.exponent_, b.exponent_));
}

std::int64_t Magnitude(const Dyadic& a) {
  if (a.is_zero()) return std::numeric_limits<std::int64_t>::min();
  return a.exponent() + BitLength(a.mantissa());
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  // Same sign, both nonzero: leading-bit position settles most cases.
  const std::int64_t ma = Magnitude(a);
  const std::int64_t mb = Magnitude(b);
  if (ma != mb) return sa > 0 ? ma <=> mb : mb <=> ma;
  const int c = cmp((a - b).mantissa_, 0);
  return c <=> 0;
}

Dyadic Abs(const Dyadic& a) { return a.sign() < 0 ? -a : a; }

Dyadic Divide(const Dyadic& a, const Dyadic& b, int bits, Round dir) {
  CheckBits(bits);
  if (b.is_zero()) throw Error(ErrorKind::kDomain, "division by zero");
  if (a.is_zero()) return Dyadic();
  const int la = BitLength(a.mantissa());
  const int lb = BitLength(b.mantissa());
  const std::int64_t shift = std::max(0, bits + 2 + lb - la);
  const mpz_class num = ShiftLeft(a.mantissa(), shift);
  mpz_class q;
  if (dir == Round::kDown) {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
  }
  const std::int64_t e =
      CheckedAdd(CheckedAdd(a.exponent(), -b.exponent()), -shift);
  return Dyadic(std::move(q), e).RoundedTo(bits, dir);
}

Dyadic Sqrt(const Dyadic& a, int bits, Round dir) {
  CheckBits(bits);
  if (a.sign() < 0) {
    throw Error(ErrorKind::kNegativeRadicand, "square root of a negative value");
  }
  if (a.is_zero()) return Dyadic();
  // Scale the mantissa by an even power of two relative to the exponent so the
  // integer root carries at least bits + 2 significant bits.
  const int len = BitLength(a.mantissa());
  std::int64_t shift = std::max(0, 2 * (bits + 2) - len);
  if ((a.exponent() - shift) % 2 != 0) ++shift;
  const mpz_class scaled = ShiftLeft(a.mantissa(), shift);
  mpz_class root;
  mpz_class rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t());
  if (dir == Round::kUp && sgn(rem) != 0) ++root;
  const std::int64_t e = CheckedAdd(a.exponent(), -shift) / 2;
  return Dyadic(std::move(root), e).RoundedTo(bits, dir);
}

}  // namespace nestroot
