#include "nestroot/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "nestroot/error.hpp"
#include "nestroot/gray.hpp"
#include "nestroot/lucas.hpp"

namespace nestroot::ordering {

namespace {

using radicals::SignString;

struct Separation {
  Ordering order = Ordering::kInconclusive;
  DyadicInterval a;
  DyadicInterval b;
  int bits = 0;
};

using Evaluator = std::function<DyadicInterval(int)>;

// Evaluates both sides at doubling precision until the intervals separate or
// the next step would exceed max_bits.
Separation Separate(const Evaluator& a, const Evaluator& b, int start_bits,
                    int max_bits) {
  for (int bits = start_bits;; bits *= 2) {
    Separation s{Ordering::kInconclusive, a(bits), b(bits), bits};
    s.order = Compare(s.a, s.b);
    if (s.order != Ordering::kInconclusive || bits * 2 > max_bits) return s;
  }
}

Evaluator ValueOf(SignString signs) {
  return [signs = std::move(signs)](int bits) {
    return radicals::EvalRadical(signs, bits).value;
  };
}

Evaluator OmegaOf(SignString signs) {
  return [signs = std::move(signs)](int bits) {
    return radicals::EvalRadical(signs, bits).omega;
  };
}

SignString SignsForRank(int n, std::uint64_t j) {
  return n == 1 ? SignString() : SignString(gray::Unrank(n - 1, j));
}

void CheckIndex(int n, int min, int cap) {
  if (n < min || n > cap) {
    throw Error(ErrorKind::kInvalidOrder,
                "index must lie in " + std::to_string(min) + ".." +
                    std::to_string(cap) + ", got " + std::to_string(n));
  }
}

void CheckPrecision(int start_bits, int max_bits) {
  if (start_bits < kMinPrecisionBits || max_bits < start_bits) {
    throw Error(ErrorKind::kDomain, "need 8 <= start bits <= max bits");
  }
}

// Runs body(i) for i in [0, count) across hardware threads. Each index writes
// only its own output slot, so results do not depend on scheduling.
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(
      std::max(1U, std::thread::hardware_concurrency()), count / 256 + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<DyadicInterval> ZeroValues(int n, int bits) {
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::vector<DyadicInterval> values(count);
  ParallelFor(count, [&](std::size_t i) {
    values[i] = radicals::ZeroByRank(n, i + 1, bits).value;
  });
  return values;
}

// Number of zeros of L_n (descending `values`) that exceed zero k of L_{n+1}.
std::uint64_t CountAbove(int n, const std::vector<DyadicInterval>& values,
                         const SignString& target, const DyadicInterval& target_value,
                         int start_bits, int max_bits) {
  std::uint64_t lo = 0;
  std::uint64_t hi = values.size();
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    Ordering o = Compare(values[mid], target_value);
    if (o == Ordering::kInconclusive) {
      o = Separate(ValueOf(SignsForRank(n, mid + 1)), ValueOf(target),
                   start_bits * 2, max_bits)
              .order;
    }
    if (o == Ordering::kInconclusive) {
      throw Error(ErrorKind::kCannotCertify,
                  "cannot place zero " + target.ToString() + " of L_" +
                      std::to_string(n + 1) + " within " +
                      std::to_string(max_bits) + " bits");
    }
    if (o == Ordering::kGreater) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

void Record(Placement& placement, std::uint64_t above_count, std::uint64_t size,
            bool one_prefixed) {
  Occupancy* slot = nullptr;
  if (above_count == 0) {
    slot = &placement.above;
  } else if (above_count == size) {
    slot = &placement.below;
  } else {
    slot = &placement.gaps[above_count - 1].count;
  }
  ++(one_prefixed ? slot->one_prefixed : slot->zero_prefixed);
}

Placement EmptyPlacement(std::uint64_t size) {
  Placement p;
  for (std::uint64_t c = 1; c < size; ++c) p.gaps.push_back(GapOccupancy{c, {}});
  return p;
}

}  // namespace

const Gap& OrderCertificate::smallest_gap() const {
  if (gaps.empty()) {
    throw Error(ErrorKind::kInternalInconsistency, "certificate has no gaps");
  }
  return *std::min_element(gaps.begin(), gaps.end(), [](const Gap& a, const Gap& b) {
    return a.lower_bound < b.lower_bound;
  });
}

int OrderCertificate::max_precision_bits() const {
  int out = precision_bits;
  for (const Gap& g : gaps) out = std::max(out, g.precision_bits);
  return out;
}

OrderCertificate VerifyGrayOrder(int n, int start_bits, int max_bits) {
  CheckIndex(n, 2, lucas::kMaxEvalIndex);
  CheckPrecision(start_bits, max_bits);
  const std::vector<DyadicInterval> values = ZeroValues(n, start_bits);
  OrderCertificate cert{n, start_bits, std::vector<Gap>(values.size() - 1)};
  ParallelFor(cert.gaps.size(), [&](std::size_t i) {
    const std::uint64_t j = i + 1;
    Separation s{Compare(values[i], values[i + 1]), values[i], values[i + 1],
                 start_bits};
    if (s.order == Ordering::kInconclusive && start_bits * 2 <= max_bits) {
      s = Separate(ValueOf(SignsForRank(n, j)), ValueOf(SignsForRank(n, j + 1)),
                   start_bits * 2, max_bits);
    }
    if (s.order != Ordering::kGreater) {
      throw Error(ErrorKind::kCannotCertify,
                  "zeros " + std::to_string(j) + " and " + std::to_string(j + 1) +
                      " of L_" + std::to_string(n) +
                      (s.order == Ordering::kLess
                           ? " are in reverse order"
                           : " overlap at " + std::to_string(s.bits) + " bits"));
    }
    cert.gaps[i] = Gap{j, s.a.lo() - s.b.hi(), s.a.hi() - s.b.lo(), s.bits};
  });
  return cert;
}

ProofVerdicts ProofInequalities(int n, int start_bits, int max_bits) {
  CheckIndex(n, 2, lucas::kMaxEvalIndex);
  CheckPrecision(start_bits, max_bits);
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  std::vector<SignString> code;
  code.reserve(count);
  for (std::uint64_t i = 1; i <= count; ++i) {
    code.emplace_back(gray::Unrank(n - 1, i));
  }
  auto greater = [&](const SignString& x, const SignString& y) {
    return Separate(OmegaOf(x), OmegaOf(y), start_bits, max_bits).order ==
           Ordering::kGreater;
  };
  ProofVerdicts v{true, true, true, 0};
  for (std::size_t i = 0; i + 1 < code.size(); ++i) {
    v.first = greater(code[i].Prefixed(false), code[i + 1].Prefixed(false)) &&
              v.first;
    v.second = greater(code[i + 1].Prefixed(true), code[i].Prefixed(true)) &&
               v.second;
    v.checked += 2;
  }
  v.third = greater(code.back().Prefixed(false), code.back().Prefixed(true));
  ++v.checked;
  return v;
}

int Placement::total() const {
  int sum = above.total() + below.total();
  for (const GapOccupancy& g : gaps) sum += g.count.total();
  return sum;
}

InterleavingReport Interleave(int n, int start_bits, int max_bits) {
  CheckIndex(n, 2, lucas::kMaxEvalIndex - 1);
  CheckPrecision(start_bits, max_bits);
  InterleavingReport r;
  r.n = n;
  r.precision_bits = start_bits;
  r.zeros_n = ZeroValues(n, start_bits);
  r.zeros_next = ZeroValues(n + 1, start_bits);
  const std::uint64_t size = r.zeros_n.size();

  r.empirical = EmptyPlacement(size);
  r.ground_truth = EmptyPlacement(size);
  std::vector<std::uint64_t> above_counts(r.zeros_next.size());
  ParallelFor(r.zeros_next.size(), [&](std::size_t i) {
    above_counts[i] = CountAbove(n, r.zeros_n, SignsForRank(n + 1, i + 1),
                                 r.zeros_next[i], start_bits, max_bits);
  });
  for (std::uint64_t k = 1; k <= r.zeros_next.size(); ++k) {
    const bool one_prefixed = k > size;
    Record(r.empirical, above_counts[k - 1], size, one_prefixed);
    // Zero j of L_n sits at angle (4j - 2) pi / 2^(n+2) and zero k of L_{n+1}
    // at (2k - 1) pi / 2^(n+2); smaller angles are larger values, and
    // 4j - 2 < 2k - 1 exactly when j <= k / 2.
    const std::uint64_t grid_above = std::min<std::uint64_t>(size, k / 2);
    Record(r.ground_truth, grid_above, size, one_prefixed);
  }

  auto separate = [&](const Evaluator& a, const Evaluator& b) {
    return Separate(a, b, start_bits, max_bits).order;
  };
  r.claim_i = separate(ValueOf(SignsForRank(n + 1, 2 * size)),
                       ValueOf(SignsForRank(n, size))) == Ordering::kLess;

  r.claim_ii = true;
  r.claim_ii_interlacing = true;
  for (const GapOccupancy& g : r.empirical.gaps) {
    if (g.count.one_prefixed != 1) {
      r.claim_ii = false;
      r.claim_ii_counterexamples.push_back(g.upper_rank);
    }
    if (g.count.total() != 1) r.claim_ii_interlacing = false;
  }

  r.claim_iii = true;
  const Evaluator largest = ValueOf(SignsForRank(n, 1));
  for (std::uint64_t k = 1; k <= size; ++k) {
    SignString signs = SignsForRank(n + 1, k);
    if (separate(ValueOf(signs), largest) != Ordering::kGreater) {
      r.claim_iii = false;
      r.claim_iii_counterexamples.push_back(
          ZeroWitness{k, std::move(signs), r.zeros_next[k - 1]});
    }
  }
  r.claim_iii_omega_bound =
      separate(OmegaOf(SignsForRank(n, 1)), [](int bits) {
        return DyadicInterval::Point(Dyadic(2), bits);
      }) == Ordering::kLess;
  return r;
}

std::string RenderNumberLine(const InterleavingReport& report, int width) {
  width = std::max(width, 16);
  auto column = [&](const DyadicInterval& v) {
    const double x = v.midpoint().ToDouble() / 2.0;
    return std::clamp(static_cast<int>(std::lround(x * (width - 1))), 0, width - 1);
  };
  std::string line_n(static_cast<std::size_t>(width), ' ');
  std::string line_next(static_cast<std::size_t>(width), ' ');
  for (const DyadicInterval& v : report.zeros_n) line_n[column(v)] = 'o';
  for (const DyadicInterval& v : report.zeros_next) line_next[column(v)] = 'x';
  std::string axis(static_cast<std::size_t>(width), '-');
  axis.front() = '0';
  axis[static_cast<std::size_t>(width / 2)] = '1';
  axis.back() = '2';

  const std::string label_n = "L_" + std::to_string(report.n);
  const std::string label_next = "L_" + std::to_string(report.n + 1);
  const std::size_t pad = std::max(label_n.size(), label_next.size()) + 1;
  auto row = [&](const std::string& label, const std::string& body) {
    return label + std::string(pad - label.size(), ' ') + '|' + body + "|\n";
  };
  return row(label_n, line_n) + row(label_next, line_next) + row("", axis);
}

}  // namespace nestroot::ordering
