#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nestroot/bigreal.hpp"
#include "nestroot/radicals.hpp"

// Certified checks of how the positive zeros of L_n are ordered.
namespace nestroot::ordering {

inline constexpr int kDefaultStartBits = 128;
inline constexpr int kDefaultMaxBits = 65536;

struct Gap {
  std::uint64_t rank = 0;  // separates zero `rank` from zero `rank + 1`
  Dyadic lower_bound;      // value_rank - value_{rank+1} >= lower_bound > 0
  Dyadic upper_bound;      // value_rank - value_{rank+1} <= upper_bound
  int precision_bits = 0;  // precision at which the pair separated
};

// Witness that the Gray-ranked zeros of L_n strictly decrease.
struct OrderCertificate {
  int n = 0;
  int precision_bits = 0;  // starting precision
  std::vector<Gap> gaps;

  const Gap& smallest_gap() const;
  int max_precision_bits() const;
};

// Throws kCannotCertify if some adjacent pair cannot be separated below
// max_bits, or separates in the wrong direction.
OrderCertificate VerifyGrayOrder(int n, int start_bits = kDefaultStartBits,
                                 int max_bits = kDefaultMaxBits);

// The three inequality families of the inductive step, on omega values,
// with g the order-(n-1) Gray code:
//   first:  omega(0 g_i) > omega(0 g_{i+1})
//   second: omega(1 g_{i+1}) > omega(1 g_i)
//   third:  omega(0 g_last) > omega(1 g_last)
struct ProofVerdicts {
  bool first = false;
  bool second = false;
  bool third = false;
  int checked = 0;  // number of inequalities examined

  bool all() const { return first && second && third; }
};

ProofVerdicts ProofInequalities(int n, int start_bits = kDefaultStartBits,
                                int max_bits = kDefaultMaxBits);

struct Occupancy {
  int zero_prefixed = 0;
  int one_prefixed = 0;

  int total() const { return zero_prefixed + one_prefixed; }
  friend bool operator==(const Occupancy&, const Occupancy&) = default;
};

// Zeros of L_{n+1} inside the open gap between zeros `upper_rank` (larger
// value) and `upper_rank + 1` of L_n.
struct GapOccupancy {
  std::uint64_t upper_rank = 0;
  Occupancy count;
  friend bool operator==(const GapOccupancy&, const GapOccupancy&) = default;
};

struct Placement {
  std::vector<GapOccupancy> gaps;  // interior gaps, from the top down
  Occupancy above;                 // right of the largest zero of L_n
  Occupancy below;                 // left of the smallest zero of L_n

  int total() const;
  friend bool operator==(const Placement&, const Placement&) = default;
};

struct ZeroWitness {
  std::uint64_t rank = 0;  // Gray rank among the zeros of L_{n+1}
  radicals::SignString signs;
  DyadicInterval value;
};

// Where the positive zeros of L_{n+1} fall relative to those of L_n, checked
// against the arrangement claims and against angle arithmetic.
struct InterleavingReport {
  int n = 0;
  int precision_bits = 0;
  std::vector<DyadicInterval> zeros_n;     // Gray order, descending
  std::vector<DyadicInterval> zeros_next;  // Gray order, descending

  Placement empirical;
  Placement ground_truth;  // from the angle grid (2k-1) pi / 2^(n+2)

  // i) the smallest zero of L_{n+1} lies left of the smallest zero of L_n.
  bool claim_i = false;
  // ii) as stated: each interior gap holds exactly one 1-prefixed zero, and
  // those fill every 1-prefixed zero except the smallest.
  bool claim_ii = false;
  // ii) interlacing reading: exactly one zero of L_{n+1} per interior gap.
  bool claim_ii_interlacing = false;
  std::vector<std::uint64_t> claim_ii_counterexamples;  // offending upper_rank
  // iii) value reading: every 0-prefixed zero exceeds the largest L_n zero.
  bool claim_iii = false;
  std::vector<ZeroWitness> claim_iii_counterexamples;
  // iii) bound used in its argument: omega of the largest L_n zero below 2.
  bool claim_iii_omega_bound = false;

  bool matches_ground_truth() const { return empirical == ground_truth; }
};

InterleavingReport Interleave(int n, int start_bits = kDefaultStartBits,
                              int max_bits = kDefaultMaxBits);

// ASCII number line of both zero sets over [0, 2]: 'o' marks L_n, 'x' marks
// L_{n+1}.
std::string RenderNumberLine(const InterleavingReport& report, int width = 72);

}  // namespace nestroot::ordering
