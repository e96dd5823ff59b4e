#include "nestroot/ordering.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "nestroot/error.hpp"
#include "nestroot/lucas.hpp"
#include "support/oracles.hpp"

namespace nestroot::ordering {
namespace {

TEST(VerifyGrayOrder, BaseCase) {
  const OrderCertificate cert = VerifyGrayOrder(2);
  ASSERT_EQ(cert.gaps.size(), 1u);
  EXPECT_GT(cert.gaps[0].lower_bound, Dyadic(0));
  EXPECT_NEAR(cert.gaps[0].lower_bound.ToDouble(), 1.0824, 1e-4);
}

TEST(VerifyGrayOrder, OrderFour) {
  const OrderCertificate cert = VerifyGrayOrder(4);
  ASSERT_EQ(cert.gaps.size(), 7u);
  for (const Gap& g : cert.gaps) EXPECT_GT(g.lower_bound, Dyadic(0));
  // 0.58057 - 0.19603
  EXPECT_NEAR(cert.gaps.back().lower_bound.ToDouble(), 0.38454, 1e-5);
  EXPECT_EQ(cert.smallest_gap().rank, 1u);
}

TEST(VerifyGrayOrder, SmallestGapMatchesAngles) {
  const OrderCertificate cert = VerifyGrayOrder(12);
  ASSERT_EQ(cert.gaps.size(), 2047u);
  const Gap& g = cert.smallest_gap();
  const long double predicted =
      oracle::ZeroByAngle(12, g.rank) - oracle::ZeroByAngle(12, g.rank + 1);
  EXPECT_NEAR(g.lower_bound.ToDouble(), static_cast<double>(predicted), 1e-12);
  for (const Gap& gap : cert.gaps) {
    const long double d =
        oracle::ZeroByAngle(12, gap.rank) - oracle::ZeroByAngle(12, gap.rank + 1);
    EXPECT_GE(d + 1e-15L, static_cast<long double>(g.lower_bound.ToDouble()));
  }
}

TEST(VerifyGrayOrder, RejectsOrderOne) { EXPECT_THROW(VerifyGrayOrder(1), Error); }

TEST(VerifyGrayOrder, CannotCertifyBelowCap) {
  try {
    VerifyGrayOrder(12, 8, 8);
    FAIL() << "expected cannot-certify";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCannotCertify);
  }
}

TEST(VerifyGrayOrder, SoundAtDoublePrecision) {
  for (int n : {3, 6, 9}) {
    const OrderCertificate cert = VerifyGrayOrder(n, 64);
    const OrderCertificate fine = VerifyGrayOrder(n, 128);
    ASSERT_EQ(cert.gaps.size(), fine.gaps.size());
    for (std::size_t i = 0; i < cert.gaps.size(); ++i) {
      EXPECT_GT(fine.gaps[i].lower_bound, Dyadic(0));
      EXPECT_GE(fine.gaps[i].lower_bound, cert.gaps[i].lower_bound);
      EXPECT_LE(fine.gaps[i].upper_bound, cert.gaps[i].upper_bound);
    }
  }
}

TEST(VerifyGrayOrder, ArgsortIsGrayRank) {
  for (int n = 2; n <= 12; ++n) {
    const lucas::ZeroSet set = lucas::Zeros(n, 128);
    std::vector<std::size_t> idx(set.entries.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return set.entries[a].value.midpoint() > set.entries[b].value.midpoint();
    });
    for (std::size_t i = 0; i < idx.size(); ++i) {
      ASSERT_EQ(set.entries[idx[i]].rank, i + 1) << n;
    }
  }
}

TEST(ProofInequalities, AllHold) {
  for (int n : {2, 3, 8}) {
    const ProofVerdicts v = ProofInequalities(n);
    EXPECT_TRUE(v.first && v.second && v.third) << n;
    EXPECT_GT(v.checked, 0);
  }
}

TEST(Interleave, OrderThreeExamples) {
  const InterleavingReport r = Interleave(3);
  EXPECT_TRUE(r.claim_i);
  EXPECT_NEAR(r.zeros_next.back().midpoint().ToDouble(), 0.19603, 1e-5);
  EXPECT_NEAR(r.zeros_n.back().midpoint().ToDouble(), 0.39018, 1e-5);
  // The gap (0.39018, 1.11114) is the last interior gap.
  ASSERT_EQ(r.empirical.gaps.size(), 3u);
  EXPECT_EQ(r.empirical.gaps.back().upper_rank, 3u);
  EXPECT_EQ(r.empirical.gaps.back().count.total(), 2);
  EXPECT_FALSE(r.claim_iii);
  const bool has_table_value = std::any_of(
      r.claim_iii_counterexamples.begin(), r.claim_iii_counterexamples.end(),
      [](const ZeroWitness& w) { return w.signs.ToString() == "010"; });
  EXPECT_TRUE(has_table_value);
}

TEST(Interleave, MatchesAngleGrid) {
  for (int n = 2; n <= 10; ++n) {
    const InterleavingReport r = Interleave(n);
    EXPECT_TRUE(r.matches_ground_truth()) << n;
    const std::vector<int> grid = oracle::GridOccupancy(n);
    ASSERT_EQ(r.empirical.gaps.size() + 2, grid.size());
    EXPECT_EQ(r.empirical.above.total(), grid.front());
    EXPECT_EQ(r.empirical.below.total(), grid.back());
    for (std::size_t i = 0; i < r.empirical.gaps.size(); ++i) {
      EXPECT_EQ(r.empirical.gaps[i].count.total(), grid[i + 1]);
    }
    EXPECT_EQ(r.empirical.total(), 1 << n);
  }
}

TEST(Interleave, RendersNumberLine) {
  const std::string line = RenderNumberLine(Interleave(2), 40);
  EXPECT_NE(line.find("L_2"), std::string::npos);
  EXPECT_NE(line.find("L_3"), std::string::npos);
  EXPECT_EQ(std::count(line.begin(), line.end(), 'o'), 2);
  EXPECT_EQ(std::count(line.begin(), line.end(), 'x'), 4);
}

}  // namespace
}  // namespace nestroot::ordering
