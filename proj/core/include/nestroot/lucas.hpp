#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "nestroot/bigreal.hpp"
#include "nestroot/radicals.hpp"

// Lucas-Lehmer polynomials L_0(x) = x, L_n(x) = L_{n-1}(x)^2 - 2.
namespace nestroot::lucas {

inline constexpr int kMaxEvalIndex = 20;
inline constexpr int kMaxCoefficientIndex = 16;

// Integer coefficients in ascending degree.
struct IntPolynomial {
  std::vector<mpz_class> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  // Exact value at a dyadic point.
  Dyadic Evaluate(const Dyadic& x) const;
  // Horner's rule in interval arithmetic.
  DyadicInterval Evaluate(const DyadicInterval& x, int p) const;
};

struct ZeroEntry {
  std::uint64_t rank = 0;
  radicals::SignString signs;
  radicals::AngleRational angle;
  DyadicInterval value;
  // L_n evaluated over `value`; always contains 0.
  DyadicInterval residual;
};

// Positive zeros of L_n in Gray-rank order (rank 1 is the largest).
struct ZeroSet {
  int n = 0;
  std::vector<ZeroEntry> entries;
};

enum class Extremum { kMinimum, kMaximum };

struct CriticalPoint {
  DyadicInterval x;
  DyadicInterval value;       // L_n(x), encloses -2 or +2
  DyadicInterval derivative;  // L_n'(x), encloses 0
  Extremum kind = Extremum::kMinimum;
};

// Nonnegative critical points of L_n, ascending.
struct CriticalSet {
  int n = 0;
  std::vector<CriticalPoint> points;
};

DyadicInterval Eval(int n, const DyadicInterval& x, int p);

// (L_n(x), L_n'(x)) via L_k' = 2 L_{k-1} L_{k-1}'.
std::pair<DyadicInterval, DyadicInterval> EvalWithDerivative(
    int n, const DyadicInterval& x, int p);

// Throws kSizeLimit when n > kMaxCoefficientIndex.
IntPolynomial Coefficients(int n);

// Each entry is certified by 0 in L_n(value) with residual width below
// 2^(4 - p/2), refining the working precision when needed. n = 0 yields the
// single zero of L_0(x) = x.
ZeroSet Zeros(int n, int p);

// {0} together with the positive zeros of L_1 .. L_{n-1}; each point is
// checked against the derivative recurrence. The extremum kind is read off the
// sign of L_n at the point.
CriticalSet CriticalPoints(int n, int p);

// L_n(x) - 2 T_{2^(n-1)}(x^2/2 - 1) with T evaluated by T_{2k} = 2 T_k^2 - 1.
// Throws kDomain unless x lies in [-2, 2].
DyadicInterval ChebyshevResidual(int n, const DyadicInterval& x, int p);

// Integral of L_m L_n against 1/(4 sqrt(4 - x^2)) on (-2, 2), computed as
// (1/4) * integral over [0, pi] of L_m(2cos t) L_n(2cos t) with the midpoint
// rule on `nodes` uniform nodes in double precision. Throws kUndersampling
// unless nodes is a power of two no smaller than 2^(max(m, n) + 2).
double OrthogonalityIntegral(int m, int n, std::uint64_t nodes);

// M^a_n(x), with M^a_0 = x and M^a_k = 2a (M^a_{k-1})^2 - 1/a.
DyadicInterval EvalScaled(const mpq_class& a, int n, const DyadicInterval& x,
                          int p);

// The zero of M^a_n (n = signs.size() + 1) named by `signs`: the matching
// radical divided by 2a. Throws kDomain unless a > 0.
DyadicInterval ScaledZero(const mpq_class& a, const radicals::SignString& signs,
                          int p);

}  // namespace nestroot::lucas
