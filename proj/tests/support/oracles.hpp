// Reference computations that share no code with the library.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "nestroot/bigreal.hpp"

namespace nestroot::oracle {

// Binary-reflected Gray code by literal reflect-and-prefix on strings.
inline std::vector<std::string> GrayStrings(int order) {
  std::vector<std::string> code = {"0", "1"};
  for (int k = 2; k <= order; ++k) {
    std::vector<std::string> next;
    next.reserve(code.size() * 2);
    for (const auto& s : code) next.push_back("0" + s);
    for (auto it = code.rbegin(); it != code.rend(); ++it) next.push_back("1" + *it);
    code = std::move(next);
  }
  return code;
}

// 2 cos((2j - 1) pi / 2^(n+1)) in long double.
inline long double ZeroByAngle(int n, std::uint64_t j) {
  const long double angle = static_cast<long double>(2 * j - 1) *
                            std::numbers::pi_v<long double> /
                            std::ldexp(1.0L, n + 1);
  return 2.0L * std::cos(angle);
}

// Ascending coefficients of L_n from the closed form
// [x^(N-2k)] L_n = (-1)^k N/(N-k) C(N-k, k), N = 2^n.
inline std::vector<mpz_class> LucasCoefficients(int n) {
  const unsigned long big_n = 1UL << n;
  std::vector<mpz_class> coeffs(big_n + 1, 0);
  if (n == 0) {
    coeffs[1] = 1;
    return coeffs;
  }
  for (unsigned long k = 0; 2 * k <= big_n; ++k) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), big_n - k, k);
    mpz_class c = binom * big_n / (big_n - k);
    if (k % 2) c = -c;
    coeffs[big_n - 2 * k] = c;
  }
  return coeffs;
}

inline mpq_class ToRational(const Dyadic& d) {
  mpq_class q(d.mantissa());
  if (d.exponent() >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(d.exponent()));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-d.exponent()));
  }
  return q;
}

inline bool Encloses(const DyadicInterval& iv, const mpq_class& x) {
  return ToRational(iv.lo()) <= x && x <= ToRational(iv.hi());
}

// Occupancy predicted by the angle grid: zeros of L_n sit at numerators 4j-2
// and zeros of L_{n+1} at 2k-1, both over 2^(n+2). Returns per-region counts
// ordered: above the largest zero, each interior gap from the top, below.
inline std::vector<int> GridOccupancy(int n) {
  const std::uint64_t zeros_n = std::uint64_t{1} << (n - 1);
  const std::uint64_t zeros_next = std::uint64_t{1} << n;
  std::vector<int> regions(zeros_n + 1, 0);
  for (std::uint64_t k = 1; k <= zeros_next; ++k) {
    const std::uint64_t num = 2 * k - 1;
    // Larger value means smaller angle; region r holds angles in
    // (4r - 2, 4r + 2) with r = 0 above the top zero.
    std::uint64_t r = 0;
    while (r < zeros_n && 4 * (r + 1) - 2 < num) ++r;
    ++regions[r];
  }
  return regions;
}

}  // namespace nestroot::oracle
