// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "nestroot/lucas.hpp"
#include "nestroot/ordering.hpp"
#include "nestroot/radicals.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

namespace {

using namespace nestroot;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome OrderFourTable() {
  Outcome o;
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = cli::Run({"table", "--n", "4", "--digits", "2", "--format", "json"}, out, err);
  const double elapsed = Seconds(start);
  if (code != 0) {
    o.Fail("exit " + std::to_string(code) + ": " + err.str());
    return o;
  }
  const auto doc = nlohmann::json::parse(out.str());
  const char* signs[] = {"000", "001", "011", "010", "110", "111", "101", "100"};
  const char* values[] = {"1.99", "1.91", "1.76", "1.54", "1.26", "0.94", "0.58", "0.19"};
  if (doc["rows"].size() != 8) o.Fail("expected 8 rows");
  for (std::size_t i = 0; o.pass && i < 8; ++i) {
    if (doc["rows"][i]["signs"] != signs[i] || doc["rows"][i]["value"] != values[i]) {
      o.Fail("row " + std::to_string(i + 1) + " is " + doc["rows"][i].dump());
    }
  }
  if (elapsed >= 0.1) o.Fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "8 rows match, " + std::to_string(elapsed) + " s";
  return o;
}

Outcome GrayOrderCertificates() {
  Outcome o;
  const auto start = Clock::now();
  int max_bits = 0;
  for (int n = 2; n <= 14 && o.pass; ++n) {
    try {
      const ordering::OrderCertificate cert = ordering::VerifyGrayOrder(n, 128);
      if (cert.gaps.size() != (std::size_t{1} << (n - 1)) - 1) o.Fail("gap count at n=" + std::to_string(n));
      for (const ordering::Gap& g : cert.gaps) {
        if (g.lower_bound.sign() <= 0) o.Fail("nonpositive gap at n=" + std::to_string(n));
      }
      max_bits = std::max(max_bits, cert.max_precision_bits());
    } catch (const std::exception& e) {
      o.Fail("n=" + std::to_string(n) + ": " + e.what());
    }
  }
  const double elapsed = Seconds(start);
  if (elapsed >= 30) o.Fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = "n=2..14 certified, max " + std::to_string(max_bits) + " bits, " +
               std::to_string(elapsed) + " s";
  }
  return o;
}

Outcome ProofSuite() {
  Outcome o;
  for (int n = 2; n <= 10; ++n) {
    const ordering::ProofVerdicts v = ordering::ProofInequalities(n);
    if (!v.all()) o.Fail("n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "n=2..10 all three families hold";
  return o;
}

Outcome AngleOracle() {
  Outcome o;
  double worst = 0;
  for (int n = 1; n <= 12; ++n) {
    for (std::uint64_t j = 1; j <= (std::uint64_t{1} << (n - 1)); ++j) {
      const double value = radicals::ZeroByRank(n, j, 64).value.midpoint().ToDouble();
      const double angle = static_cast<double>(2 * j - 1) * M_PI / std::ldexp(1.0, n + 1);
      worst = std::max(worst, std::abs(value - 2 * std::cos(angle)));
    }
  }
  if (!(worst < 1e-12)) o.Fail("max deviation " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation %.2e", worst);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome ZeroCertification() {
  Outcome o;
  const Dyadic bound = Dyadic(1).Shifted(-100);
  for (int n = 1; n <= 12; ++n) {
    for (const lucas::ZeroEntry& e : lucas::Zeros(n, 256).entries) {
      if (!e.residual.contains_zero()) o.Fail("0 not in residual at n=" + std::to_string(n));
      if (!(e.value.width() < bound) || !(e.residual.width() < bound)) {
        o.Fail("too wide at n=" + std::to_string(n));
      }
    }
  }
  if (o.pass) o.detail = "n=1..12, value and residual widths < 2^-100";
  return o;
}

Outcome CriticalPointsSuite() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    const lucas::CriticalSet set = lucas::CriticalPoints(n, 128);
    if (set.points.size() != (std::size_t{1} << (n - 1))) o.Fail("count at n=" + std::to_string(n));
    for (const lucas::CriticalPoint& c : set.points) {
      if (!c.derivative.contains_zero()) o.Fail("derivative misses 0 at n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "n=1..12, 2^(n-1) points, derivative brackets 0";
  return o;
}

Outcome ChebyshevIdentity() {
  Outcome o;
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<long> mant(-(1L << 52), 1L << 52);
  const Dyadic bound = Dyadic(1).Shifted(-100);
  for (int n = 1; n <= 12; ++n) {
    for (int i = 0; i < 200; ++i) {
      const DyadicInterval x = DyadicInterval::Point(Dyadic(mpz_class(mant(rng)), -51), 256);
      const DyadicInterval r = lucas::ChebyshevResidual(n, x, 256);
      if (!r.contains_zero()) o.Fail("0 not in residual at n=" + std::to_string(n));
      if (!(r.width() < bound)) o.Fail("residual too wide at n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "2400 samples, residual widths < 2^-100";
  return o;
}

Outcome Orthogonality() {
  Outcome o;
  double worst = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int m = 0; m < n; ++m) {
      worst = std::max(worst, std::abs(lucas::OrthogonalityIntegral(m, n, 4096)));
    }
  }
  if (!(worst < 1e-10)) o.Fail("max |integral| " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof buf, "max |integral| %.2e", worst);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome PiApproximation() {
  Outcome o;
  const int p = 320;
  const DyadicInterval pi = radicals::PiEnclosure(p);
  const DyadicInterval deep = radicals::ApproximatePi(18, p);
  // Ten decimals agree when |pi - value| < 0.5e-10.
  const double err18 = Sub(pi, deep, p).hi().ToDouble();
  if (!(err18 < 0.5e-10)) o.Fail("depth 18 error " + std::to_string(err18));
  double lo = 1e9, hi = 0;
  for (int d = 4; d < 16; ++d) {
    const double a = Sub(pi, radicals::ApproximatePi(d, p), p).midpoint().ToDouble();
    const double b = Sub(pi, radicals::ApproximatePi(d + 1, p), p).midpoint().ToDouble();
    lo = std::min(lo, a / b);
    hi = std::max(hi, a / b);
  }
  if (lo < 3.9 || hi > 4.1) o.Fail("ratios in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  char buf[96];
  std::snprintf(buf, sizeof buf, "depth 18 error %.2e, ratios in [%.4f, %.4f]", err18, lo, hi);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome InterleavingAudit() {
  Outcome o;
  std::size_t ii = 0, iii = 0;
  for (int n = 2; n <= 10; ++n) {
    const ordering::InterleavingReport r = ordering::Interleave(n);
    const std::string at = " at n=" + std::to_string(n);
    if (!r.claim_i) o.Fail("claim i false" + at);
    for (const ordering::GapOccupancy& g : r.empirical.gaps) {
      if (g.count.total() != 2) o.Fail("gap occupancy" + at);
    }
    if (r.empirical.above.total() != 1 || r.empirical.below.total() != 1) o.Fail("end occupancy" + at);
    if (r.empirical.total() != (1 << n)) o.Fail("conservation" + at);
    if (!r.matches_ground_truth()) o.Fail("angle grid mismatch" + at);
    const std::vector<int> grid = oracle::GridOccupancy(n);
    if (grid.front() != r.empirical.above.total()) o.Fail("oracle mismatch" + at);
    ii += r.claim_ii ? 0 : 1;
    iii += r.claim_iii_counterexamples.size();
  }
  if (o.pass) {
    o.detail = "claim i holds, 2 per gap, 1 per end; claim ii fails at " +
               std::to_string(ii) + " of 9 orders, claim iii has " +
               std::to_string(iii) + " counterexamples (reported)";
  }
  return o;
}

Outcome PropertySuites() {
  Outcome o;
  const std::pair<const char*, std::function<std::string()>> suites[] = {
      {"gray", [] { return property::GrayCodeProperties(16); }},
      {"containment", [] { return property::IntervalContainment(10000, 20260115); }},
      {"refinement", [] { return property::MonotoneRefinement(7); }},
      {"recurrence", [] { return property::RadicalRecurrence(11); }},
  };
  for (const auto& [name, run] : suites) {
    const std::string failure = run();
    if (!failure.empty()) o.Fail(std::string(name) + ": " + failure);
  }
  if (o.pass) o.detail = "gray, containment (1e4 ops), refinement, recurrence";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"table reproduction", OrderFourTable},
      {"gray-order certificates", GrayOrderCertificates},
      {"proof inequalities", ProofSuite},
      {"angle oracle", AngleOracle},
      {"zero certification", ZeroCertification},
      {"critical points", CriticalPointsSuite},
      {"chebyshev identity", ChebyshevIdentity},
      {"orthogonality", Orthogonality},
      {"pi approximation", PiApproximation},
      {"interleaving audit", InterleavingAudit},
      {"property suites", PropertySuites},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d (%s): %s\n", outcome.pass ? "PASS" : "FAIL", index, name,
                outcome.detail.c_str());
    std::fflush(stdout);
    failures += outcome.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
