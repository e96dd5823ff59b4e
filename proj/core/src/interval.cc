#include <algorithm>
#include <array>
#include <cctype>

#include "nestroot/bigreal.hpp"
#include "nestroot/error.hpp"

namespace nestroot {

namespace {

DyadicInterval Outward(const Dyadic& lo, const Dyadic& hi, int p) {
  return DyadicInterval(lo.RoundedTo(p, Round::kDown), hi.RoundedTo(p, Round::kUp),
                        p);
}

mpz_class Pow10(int digits) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return out;
}

// x * 10^digits rounded to an integer under `mode`.
mpz_class ScaleToInteger(const Dyadic& x, int digits, DecimalRounding mode) {
  mpz_class num = x.mantissa() * Pow10(digits);
  if (x.exponent() >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(x.exponent()));
    return num;
  }
  const auto shift = static_cast<mp_bitcnt_t>(-x.exponent());
  mpz_class q;
  if (mode == DecimalRounding::kTruncate) {
    mpz_tdiv_q_2exp(q.get_mpz_t(), num.get_mpz_t(), shift);
    return q;
  }
  mpz_class r;
  mpz_fdiv_q_2exp(q.get_mpz_t(), num.get_mpz_t(), shift);
  mpz_fdiv_r_2exp(r.get_mpz_t(), num.get_mpz_t(), shift);
  // Compare 2r against 2^shift; ties go to the even neighbour.
  mpz_class half;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, shift - 1);
  const int c = cmp(r, half);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  return q;
}

std::string FormatScaled(const mpz_class& scaled, int digits, bool negative) {
  std::string mag = mpz_class(abs(scaled)).get_str();
  if (digits > 0 && mag.size() <= static_cast<std::size_t>(digits)) {
    mag.insert(0, static_cast<std::size_t>(digits) + 1 - mag.size(), '0');
  }
  std::string out = negative ? "-" : "";
  if (digits == 0) return out + mag;
  out += mag.substr(0, mag.size() - static_cast<std::size_t>(digits));
  out += '.';
  out += mag.substr(mag.size() - static_cast<std::size_t>(digits));
  return out;
}

}  // namespace

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi, int precision_bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_bits_(precision_bits) {
  if (hi_ < lo_) {
    throw Error(ErrorKind::kInternalInconsistency,
                "interval endpoints out of order: " + lo_.ToHex() + " > " +
                    hi_.ToHex());
  }
}

DyadicInterval DyadicInterval::Point(const Dyadic& x, int precision_bits) {
  return DyadicInterval(x, x, precision_bits);
}

DyadicInterval Add(const DyadicInterval& a, const DyadicInterval& b, int p) {
  return Outward(a.lo() + b.lo(), a.hi() + b.hi(), p);
}

DyadicInterval Sub(const DyadicInterval& a, const DyadicInterval& b, int p) {
  return Outward(a.lo() - b.hi(), a.hi() - b.lo(), p);
}

DyadicInterval Mul(const DyadicInterval& a, const DyadicInterval& b, int p) {
  std::array<Dyadic, 4> prods = {a.lo() * b.lo(), a.lo() * b.hi(),
                                 a.hi() * b.lo(), a.hi() * b.hi()};
  const auto [lo, hi] = std::minmax_element(prods.begin(), prods.end());
  return Outward(*lo, *hi, p);
}

DyadicInterval Square(const DyadicInterval& a, int p) {
  Dyadic lo2 = a.lo() * a.lo();
  Dyadic hi2 = a.hi() * a.hi();
  if (a.contains_zero()) return Outward(Dyadic(), std::max(lo2, hi2), p);
  if (lo2 > hi2) std::swap(lo2, hi2);
  return Outward(lo2, hi2, p);
}

DyadicInterval Div(const DyadicInterval& a, const DyadicInterval& b, int p) {
  if (b.contains_zero()) {
    throw Error(ErrorKind::kDomain, "interval division by a range containing 0");
  }
  std::array<std::pair<const Dyadic*, const Dyadic*>, 4> quotients = {{
      {&a.lo(), &b.lo()},
      {&a.lo(), &b.hi()},
      {&a.hi(), &b.lo()},
      {&a.hi(), &b.hi()},
  }};
  Dyadic lo = Divide(*quotients[0].first, *quotients[0].second, p, Round::kDown);
  Dyadic hi = Divide(*quotients[0].first, *quotients[0].second, p, Round::kUp);
  for (std::size_t i = 1; i < quotients.size(); ++i) {
    const auto& [num, den] = quotients[i];
    lo = std::min(lo, Divide(*num, *den, p, Round::kDown));
    hi = std::max(hi, Divide(*num, *den, p, Round::kUp));
  }
  return DyadicInterval(std::move(lo), std::move(hi), p);
}

DyadicInterval Sqrt(const DyadicInterval& a, int p) {
  if (a.lo().sign() < 0) {
    throw Error(ErrorKind::kNegativeRadicand,
                a.hi().sign() >= 0
                    ? "square root of an interval straddling zero"
                    : "square root of a negative interval");
  }
  return DyadicInterval(Sqrt(a.lo(), p, Round::kDown), Sqrt(a.hi(), p, Round::kUp),
                        p);
}

DyadicInterval Neg(const DyadicInterval& a) {
  return DyadicInterval(-a.hi(), -a.lo(), a.precision_bits());
}

DyadicInterval Scale2(const DyadicInterval& a, std::int64_t k) {
  return DyadicInterval(a.lo().Shifted(k), a.hi().Shifted(k), a.precision_bits());
}

DyadicInterval RoundOutward(const DyadicInterval& a, int p) {
  return Outward(a.lo(), a.hi(), p);
}

Ordering Compare(const DyadicInterval& a, const DyadicInterval& b) {
  if (a.hi() < b.lo()) return Ordering::kLess;
  if (a.lo() > b.hi()) return Ordering::kGreater;
  return Ordering::kInconclusive;
}

const char* ToString(Ordering o) {
  switch (o) {
    case Ordering::kLess:
      return "less";
    case Ordering::kGreater:
      return "greater";
    case Ordering::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

std::string ToDecimal(const DyadicInterval& a, int digits, DecimalRounding mode) {
  if (digits < 0) throw Error(ErrorKind::kDomain, "negative digit count");
  // width < 10^-digits * max(1, |a|)  <=>  width * 10^digits < max(1, |a|)
  const Dyadic scaled_width = a.width() * Dyadic(Pow10(digits), 0);
  const Dyadic bound = std::max({Dyadic(1), Abs(a.lo()), Abs(a.hi())});
  if (!(scaled_width < bound)) {
    throw Error(ErrorKind::kInsufficientPrecision,
                "interval too wide for " + std::to_string(digits) + " digits");
  }
  const mpz_class lo = ScaleToInteger(a.lo(), digits, mode);
  const mpz_class hi = ScaleToInteger(a.hi(), digits, mode);
  if (lo != hi) {
    throw Error(ErrorKind::kInsufficientPrecision,
                "interval straddles a rounding boundary at " +
                    std::to_string(digits) + " digits");
  }
  // A truncated value in (-1, 0) keeps its sign.
  const bool negative = sgn(lo) < 0 || (sgn(lo) == 0 && a.hi().sign() < 0);
  return FormatScaled(lo, digits, negative);
}

DyadicInterval ParseDecimal(std::string_view text, int p) {
  auto fail = [&] {
    return Error(ErrorKind::kParse, "malformed decimal: " + std::string(text));
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw fail();
  long exp10 = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    const std::string exp_text(text.substr(i + 1));
    try {
      std::size_t used = 0;
      exp10 = std::stol(exp_text, &used);
      if (used != exp_text.size()) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  const long scale = exp10 - frac_digits;
  if (scale >= 0) {
    const Dyadic exact(mantissa * Pow10(static_cast<int>(scale)), 0);
    return DyadicInterval::Point(exact, p);
  }
  const Dyadic num(mantissa, 0);
  const Dyadic den(Pow10(static_cast<int>(-scale)), 0);
  return DyadicInterval(Divide(num, den, p, Round::kDown),
                        Divide(num, den, p, Round::kUp), p);
}

}  // namespace nestroot
