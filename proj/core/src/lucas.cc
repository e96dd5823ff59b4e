#include "nestroot/lucas.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "nestroot/error.hpp"

namespace nestroot::lucas {

namespace {

void CheckIndex(int n, int min, int cap) {
  if (n < min || n > cap) {
    throw Error(ErrorKind::kInvalidOrder,
                "polynomial index must lie in " + std::to_string(min) + ".." +
                    std::to_string(cap) + ", got " + std::to_string(n));
  }
}

DyadicInterval Constant(long c, int p) {
  return DyadicInterval::Point(Dyadic(c), p);
}

// Squares a polynomial with integer coefficients, pairing symmetric terms.
std::vector<mpz_class> SquarePoly(const std::vector<mpz_class>& a) {
  const std::size_t n = a.size();
  std::vector<mpz_class> out(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    mpz_addmul(out[2 * i].get_mpz_t(), a[i].get_mpz_t(), a[i].get_mpz_t());
    const mpz_class twice = a[i] * 2;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(a[j]) == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), twice.get_mpz_t(), a[j].get_mpz_t());
    }
  }
  return out;
}

double EvalDouble(int n, double x) {
  for (int k = 0; k < n; ++k) x = x * x - 2.0;
  return x;
}

}  // namespace

Dyadic IntPolynomial::Evaluate(const Dyadic& x) const {
  Dyadic acc;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = acc * x + Dyadic(*it, 0);
  }
  return acc;
}

DyadicInterval IntPolynomial::Evaluate(const DyadicInterval& x, int p) const {
  DyadicInterval acc = Constant(0, p);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc = Add(Mul(acc, x, p), DyadicInterval::Point(Dyadic(*it, 0), p), p);
  }
  return acc;
}

DyadicInterval Eval(int n, const DyadicInterval& x, int p) {
  CheckIndex(n, 0, kMaxEvalIndex);
  const DyadicInterval two = Constant(2, p);
  DyadicInterval t = x;
  for (int k = 0; k < n; ++k) t = Sub(Square(t, p), two, p);
  return t;
}

std::pair<DyadicInterval, DyadicInterval> EvalWithDerivative(
    int n, const DyadicInterval& x, int p) {
  CheckIndex(n, 0, kMaxEvalIndex);
  const DyadicInterval two = Constant(2, p);
  DyadicInterval t = x;
  DyadicInterval d = Constant(1, p);
  for (int k = 0; k < n; ++k) {
    d = Scale2(Mul(t, d, p), 1);
    t = Sub(Square(t, p), two, p);
  }
  return {std::move(t), std::move(d)};
}

IntPolynomial Coefficients(int n) {
  if (n > kMaxCoefficientIndex) {
    throw Error(ErrorKind::kSizeLimit,
                "coefficient expansion is capped at n = " +
                    std::to_string(kMaxCoefficientIndex));
  }
  CheckIndex(n, 0, kMaxCoefficientIndex);
  if (n == 0) return IntPolynomial{{0, 1}};
  // For n >= 1 only even powers appear, so iterate on P_k(y) with y = x^2:
  // P_1(y) = y - 2 and P_{k+1} = P_k^2 - 2.
  std::vector<mpz_class> in_y = {-2, 1};
  for (int k = 1; k < n; ++k) {
    in_y = SquarePoly(in_y);
    in_y[0] -= 2;
  }
  IntPolynomial out;
  out.coefficients.resize(2 * in_y.size() - 1);
  for (std::size_t i = 0; i < in_y.size(); ++i) {
    out.coefficients[2 * i] = std::move(in_y[i]);
  }
  return out;
}

ZeroSet Zeros(int n, int p) {
  CheckIndex(n, 0, kMaxEvalIndex);
  ZeroSet set{n, {}};
  if (n == 0) {
    const DyadicInterval zero = Constant(0, p);
    set.entries.push_back(ZeroEntry{1, {}, {1, 1}, zero, zero});
    return set;
  }
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  set.entries.reserve(count);
  for (std::uint64_t j = 1; j <= count; ++j) {
    int bits = p;
    radicals::RadicalValue zero = radicals::ZeroByRank(n, j, bits);
    DyadicInterval residual = Eval(n, zero.value, bits);
    // Refine until the residual is narrower than 2^(4 - p/2).
    const Dyadic bound = Dyadic(1).Shifted(4 - p / 2);
    while (!(residual.width() < bound)) {
      if (bits >= 4 * p) {
        throw Error(ErrorKind::kInternalInconsistency,
                    "zero " + std::to_string(j) + " of L_" + std::to_string(n) +
                        " did not tighten under refinement");
      }
      bits *= 2;
      zero = radicals::ZeroByRank(n, j, bits);
      residual = Eval(n, zero.value, bits);
    }
    if (!residual.contains_zero()) {
      throw Error(ErrorKind::kInternalInconsistency,
                  "L_" + std::to_string(n) + " does not vanish on zero " +
                      std::to_string(j));
    }
    set.entries.push_back(ZeroEntry{j, std::move(zero.signs),
                                    radicals::ClosedFormAngle(n, j),
                                    std::move(zero.value), std::move(residual)});
  }
  return set;
}

CriticalSet CriticalPoints(int n, int p) {
  CheckIndex(n, 1, kMaxEvalIndex);
  std::vector<DyadicInterval> xs = {Constant(0, p)};
  for (int i = 1; i < n; ++i) {
    for (ZeroEntry& e : Zeros(i, p).entries) xs.push_back(std::move(e.value));
  }
  std::sort(xs.begin(), xs.end(),
            [](const DyadicInterval& a, const DyadicInterval& b) {
              return a.lo() < b.lo();
            });
  CriticalSet set{n, {}};
  set.points.reserve(xs.size());
  for (DyadicInterval& x : xs) {
    auto [value, derivative] = EvalWithDerivative(n, x, p);
    if (!derivative.contains_zero()) {
      throw Error(ErrorKind::kInternalInconsistency,
                  "derivative of L_" + std::to_string(n) +
                      " does not vanish at a critical point");
    }
    if (value.contains_zero()) {
      throw Error(ErrorKind::kInternalInconsistency,
                  "extremum of L_" + std::to_string(n) + " is unresolved");
    }
    const Extremum kind =
        value.hi().sign() < 0 ? Extremum::kMinimum : Extremum::kMaximum;
    set.points.push_back(
        CriticalPoint{std::move(x), std::move(value), std::move(derivative), kind});
  }
  return set;
}

DyadicInterval ChebyshevResidual(int n, const DyadicInterval& x, int p) {
  CheckIndex(n, 1, kMaxEvalIndex);
  if (x.lo() < Dyadic(-2) || x.hi() > Dyadic(2)) {
    throw Error(ErrorKind::kDomain, "Chebyshev sample must lie in [-2, 2]");
  }
  const DyadicInterval one = Constant(1, p);
  // y = x^2 / 2 - 1, then n - 1 doublings T_{2k} = 2 T_k^2 - 1.
  DyadicInterval t = Sub(Scale2(Square(x, p), -1), one, p);
  for (int k = 1; k < n; ++k) t = Sub(Scale2(Square(t, p), 1), one, p);
  return Sub(Eval(n, x, p), Scale2(t, 1), p);
}

double OrthogonalityIntegral(int m, int n, std::uint64_t nodes) {
  CheckIndex(m, 0, kMaxEvalIndex);
  CheckIndex(n, 0, kMaxEvalIndex);
  const std::uint64_t minimum = std::uint64_t{1} << (std::max(m, n) + 2);
  if (!std::has_single_bit(nodes) || nodes < minimum) {
    throw Error(ErrorKind::kUndersampling,
                "need a power-of-two node count of at least " +
                    std::to_string(minimum) + ", got " + std::to_string(nodes));
  }
  const double h = std::numbers::pi / static_cast<double>(nodes);
  double sum = 0.0;
  for (std::uint64_t k = 0; k < nodes; ++k) {
    const double x = 2.0 * std::cos((static_cast<double>(k) + 0.5) * h);
    sum += EvalDouble(m, x) * EvalDouble(n, x);
  }
  return 0.25 * sum * h;
}

DyadicInterval EvalScaled(const mpq_class& a, int n, const DyadicInterval& x,
                          int p) {
  CheckIndex(n, 0, kMaxEvalIndex);
  if (sgn(a) <= 0) throw Error(ErrorKind::kDomain, "scale a must be positive");
  const DyadicInterval num = DyadicInterval::Point(Dyadic(a.get_num(), 0), p);
  const DyadicInterval den = DyadicInterval::Point(Dyadic(a.get_den(), 0), p);
  const DyadicInterval two_num = Scale2(num, 1);
  const DyadicInterval inv_a = Div(den, num, p);
  DyadicInterval t = x;
  for (int k = 0; k < n; ++k) {
    t = Sub(Div(Mul(Square(t, p), two_num, p), den, p), inv_a, p);
  }
  return t;
}

DyadicInterval ScaledZero(const mpq_class& a, const radicals::SignString& signs,
                          int p) {
  if (sgn(a) <= 0) throw Error(ErrorKind::kDomain, "scale a must be positive");
  const radicals::RadicalValue radical = radicals::EvalRadical(signs, p);
  const DyadicInterval num = DyadicInterval::Point(Dyadic(a.get_num(), 0), p);
  const DyadicInterval den = DyadicInterval::Point(Dyadic(a.get_den(), 0), p);
  DyadicInterval zero = Div(Mul(radical.value, den, p), Scale2(num, 1), p);
  const int n = static_cast<int>(signs.size()) + 1;
  if (!EvalScaled(a, n, zero, p).contains_zero()) {
    throw Error(ErrorKind::kInternalInconsistency,
                "scaled radical is not a zero of M^a_" + std::to_string(n));
  }
  return zero;
}

}  // namespace nestroot::lucas
