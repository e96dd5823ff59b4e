#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "nestroot/bigreal.hpp"
#include "nestroot/gray.hpp"
#include "nestroot/lucas.hpp"
#include "nestroot/ordering.hpp"
#include "nestroot/radicals.hpp"

namespace nestroot::cli {

namespace {

using Json = nlohmann::ordered_json;
using radicals::SignString;

constexpr int kSchemaVersion = 1;

struct Options {
  int n = 0;
  int m = 0;
  int order = 0;
  int depth = 0;
  std::uint64_t rank = 0;
  std::uint64_t nodes = 4096;
  int digits = 6;
  int prec_bits = ordering::kDefaultStartBits;
  int max_prec_bits = ordering::kDefaultMaxBits;
  std::string signs;
  std::string format = "text";
  std::string rounding;
  std::string a;
  std::string x;
};

// One result in all three renderings; the chosen format is printed.
struct Output {
  Json json;
  std::string text;
  std::string tsv;
  int exit_code = kExitOk;
};

Json Envelope(const std::string& command) {
  Json j;
  j["schema"] = "nestroot." + command + "/" + std::to_string(kSchemaVersion);
  return j;
}

Error Usage(const std::string& what) { return Error(ErrorKind::kDomain, what); }

DecimalRounding RoundingMode(const Options& o, DecimalRounding fallback) {
  if (o.rounding.empty()) return fallback;
  return o.rounding == "truncate" ? DecimalRounding::kTruncate
                                  : DecimalRounding::kNearestEven;
}

const char* RoundingName(DecimalRounding mode) {
  return mode == DecimalRounding::kTruncate ? "truncate" : "nearest";
}

// Renders an interval-valued quantity, doubling precision until the requested
// digits are unambiguous.
std::string RenderAdaptive(const std::function<DyadicInterval(int)>& eval,
                           int digits, DecimalRounding mode, int start_bits,
                           int max_bits) {
  for (int p = start_bits;; p *= 2) {
    try {
      return ToDecimal(eval(p), digits, mode);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kInsufficientPrecision || p * 2 > max_bits) {
        throw;
      }
    }
  }
}

std::string Scientific(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, v);
  return buf;
}

std::string Label(int n, std::uint64_t j) {
  return "g_{" + std::to_string(n - 1) + "," + std::to_string(j) + "}";
}

SignString SignsForRank(int n, std::uint64_t j) {
  return n == 1 ? SignString() : SignString(gray::Unrank(n - 1, j));
}

void CheckDigits(int digits) {
  if (digits < 1) throw Usage("--digits must be at least 1");
}

void CheckIndex(int n, int min, int max, const char* flag) {
  if (n < min || n > max) {
    throw Usage(std::string(flag) + " must lie in " + std::to_string(min) + ".." +
                std::to_string(max));
  }
}

// Space-padded columns for text tables.
std::string Columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

std::string Tsv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += '\t';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

// Key/value documents share the text and tsv layouts.
void FillPairs(Output& out, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [k, v] : kv) rows.push_back({k, v});
  out.tsv = Tsv(rows);
  for (auto& row : rows) row[0] += ':';
  out.text = Columns(rows);
}

mpq_class ParseRational(const std::string& text) {
  if (text.empty()) throw Usage("--a is required");
  mpq_class q;
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    mpz_class num;
    if (digits.empty() || num.set_str(digits, 10) != 0) {
      throw Error(ErrorKind::kParse, "bad --a: " + text);
    }
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    q = mpq_class(num, den);
  } else if (q.set_str(text, 10) != 0) {
    throw Error(ErrorKind::kParse, "bad --a: " + text);
  }
  q.canonicalize();
  return q;
}

std::string RationalString(const mpq_class& q) { return q.get_str(); }

Output CmdTable(const Options& o) {
  CheckIndex(o.n, 1, lucas::kMaxEvalIndex, "--n");
  CheckDigits(o.digits);
  const DecimalRounding mode = RoundingMode(o, DecimalRounding::kTruncate);
  const std::uint64_t count = std::uint64_t{1} << (o.n - 1);
  Output out;
  out.json = Envelope("table");
  out.json["n"] = o.n;
  out.json["digits"] = o.digits;
  out.json["rounding"] = RoundingName(mode);
  out.json["rows"] = Json::array();
  std::vector<std::vector<std::string>> text_rows = {
      {"label", "signs", "radical", "approx"}};
  std::vector<std::vector<std::string>> tsv_rows = {
      {"rank", "label", "signs", "radical", "approx"}};
  for (std::uint64_t j = 1; j <= count; ++j) {
    const SignString signs = SignsForRank(o.n, j);
    const std::string value = radicals::RenderValue(signs, o.digits, mode,
                                                    o.prec_bits, o.max_prec_bits);
    const std::string bits = signs.ToString();
    out.json["rows"].push_back(Json{{"rank", j},
                                    {"label", Label(o.n, j)},
                                    {"signs", bits},
                                    {"radical", signs.ToRadical()},
                                    {"value", value}});
    text_rows.push_back(
        {Label(o.n, j), bits.empty() ? "-" : bits, signs.ToRadical(), value});
    tsv_rows.push_back(
        {std::to_string(j), Label(o.n, j), bits, signs.ToRadical(), value});
  }
  out.text = Columns(text_rows);
  out.tsv = Tsv(tsv_rows);
  return out;
}

Output CmdVerify(const Options& o) {
  if (o.n < 2) throw Usage("verify needs --n >= 2: L_1 has a single positive zero");
  CheckIndex(o.n, 2, lucas::kMaxEvalIndex, "--n");
  const ordering::OrderCertificate cert =
      ordering::VerifyGrayOrder(o.n, o.prec_bits, o.max_prec_bits);
  const ordering::Gap& smallest = cert.smallest_gap();
  Output out;
  out.json = Envelope("certificate");
  out.json["n"] = cert.n;
  out.json["zeros"] = cert.gaps.size() + 1;
  out.json["start_precision_bits"] = cert.precision_bits;
  out.json["max_precision_bits"] = cert.max_precision_bits();
  out.json["verified"] = true;
  out.json["smallest_gap"] = {{"rank", smallest.rank},
                              {"lower_bound", smallest.lower_bound.ToHex()},
                              {"approx", smallest.lower_bound.ToDouble()}};
  out.json["gaps"] = Json::array();
  std::vector<std::vector<std::string>> rows = {
      {"rank", "lower_bound", "upper_bound", "precision_bits"}};
  for (const ordering::Gap& g : cert.gaps) {
    out.json["gaps"].push_back(Json{{"rank", g.rank},
                                    {"lower_bound", g.lower_bound.ToHex()},
                                    {"upper_bound", g.upper_bound.ToHex()},
                                    {"approx", g.lower_bound.ToDouble()},
                                    {"precision_bits", g.precision_bits}});
    rows.push_back({std::to_string(g.rank), Scientific(g.lower_bound.ToDouble()),
                    Scientific(g.upper_bound.ToDouble()),
                    std::to_string(g.precision_bits)});
  }
  out.tsv = Tsv(rows);
  std::ostringstream text;
  text << "L_" << cert.n << ": " << cert.gaps.size() + 1
       << " positive zeros follow the order-" << cert.n - 1 << " Gray code\n"
       << "certified gaps: " << cert.gaps.size() << " (start "
       << cert.precision_bits << " bits, max used " << cert.max_precision_bits()
       << " bits)\n"
       << "smallest gap: ranks " << smallest.rank << "-" << smallest.rank + 1
       << " >= " << Scientific(smallest.lower_bound.ToDouble()) << '\n';
  if (cert.gaps.size() <= 32) text << Columns(rows);
  out.text = text.str();
  return out;
}

Output CmdPi(const Options& o) {
  CheckIndex(o.depth, 1, radicals::kMaxIndex, "--depth");
  CheckDigits(o.digits);
  const DecimalRounding mode = RoundingMode(o, DecimalRounding::kNearestEven);
  // The enclosure must be much narrower than the last printed digit.
  DyadicInterval value = radicals::ApproximatePi(o.depth, o.prec_bits);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(o.digits) + 1);
  auto narrow_enough = [&](const DyadicInterval& v) {
    return v.width() * Dyadic(p10, 0) < Dyadic(1);
  };
  for (int p = o.prec_bits * 2; !narrow_enough(value); p *= 2) {
    if (p > o.max_prec_bits) {
      throw Error(ErrorKind::kInsufficientPrecision,
                  "cannot reach " + std::to_string(o.digits) + " digits");
    }
    value = radicals::ApproximatePi(o.depth, p);
  }
  const std::string mid =
      ToDecimal(DyadicInterval::Point(value.midpoint()), o.digits, mode);
  // pi - x sin(pi / x) <= pi^3 / (6 x^2) with x = 2^(depth+1).
  const int p = value.precision_bits();
  const DyadicInterval pi = radicals::PiEnclosure(p);
  const DyadicInterval cube = Mul(Square(pi, p), pi, p);
  const Dyadic denom = Dyadic(6).Shifted(2 * (o.depth + 1));
  const Dyadic remainder = Divide(cube.hi(), denom, 64, Round::kUp);
  const double bound =
      std::nextafter((remainder + value.width()).ToDouble(), INFINITY);

  Output out;
  out.json = Envelope("pi");
  out.json["depth"] = o.depth;
  out.json["digits"] = o.digits;
  out.json["value"] = mid;
  out.json["lower"] = value.lo().ToHex();
  out.json["upper"] = value.hi().ToHex();
  out.json["error_bound"] = bound;
  out.json["precision_bits"] = p;
  FillPairs(out, {{"depth", std::to_string(o.depth)},
                  {"value", mid},
                  {"error_bound", Scientific(bound, 3)}});
  return out;
}

Output CmdGray(const Options& o) {
  const gray::GrayCode code = gray::Generate(o.order);
  Output out;
  out.json = Envelope("gray");
  out.json["order"] = code.order();
  out.json["strings"] = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::uint64_t j = 1; j <= code.size(); ++j) {
    const std::string s = code.at_rank(j).ToString();
    out.json["strings"].push_back(s);
    rows.push_back({std::to_string(j), s});
  }
  out.text = code.ToLines();
  out.tsv = Tsv(rows);
  return out;
}

Output CmdRank(const Options& o) {
  const gray::GrayString g = gray::GrayString::Parse(o.signs);
  const std::uint64_t rank = gray::Rank(g);
  Output out;
  out.json = Envelope("rank");
  out.json["string"] = g.ToString();
  out.json["order"] = g.order();
  out.json["rank"] = rank;
  out.text = std::to_string(rank) + '\n';
  out.tsv = g.ToString() + '\t' + std::to_string(rank) + '\n';
  return out;
}

Output CmdUnrank(const Options& o) {
  const gray::GrayString g = gray::Unrank(o.order, o.rank);
  Output out;
  out.json = Envelope("unrank");
  out.json["order"] = o.order;
  out.json["rank"] = o.rank;
  out.json["string"] = g.ToString();
  out.text = g.ToString() + '\n';
  out.tsv = std::to_string(o.rank) + '\t' + g.ToString() + '\n';
  return out;
}

Output CmdEval(const Options& o) {
  CheckDigits(o.digits);
  const SignString signs = SignString::Parse(o.signs);
  const DecimalRounding mode = RoundingMode(o, DecimalRounding::kTruncate);
  const std::string value =
      radicals::RenderValue(signs, o.digits, mode, o.prec_bits, o.max_prec_bits);
  const int n = static_cast<int>(signs.size()) + 1;
  Output out;
  out.json = Envelope("eval");
  out.json["signs"] = signs.ToString();
  out.json["radical"] = signs.ToRadical();
  out.json["n"] = n;
  std::vector<std::pair<std::string, std::string>> kv = {
      {"signs", signs.ToString()}, {"radical", signs.ToRadical()}};
  if (!signs.empty() && signs.size() <= gray::kMaxRankOrder) {
    const std::uint64_t rank = gray::Rank(gray::GrayString::Parse(o.signs));
    out.json["rank"] = rank;
    kv.emplace_back("zero", "rank " + std::to_string(rank) + " of L_" +
                                std::to_string(n));
  }
  out.json["digits"] = o.digits;
  out.json["rounding"] = RoundingName(mode);
  out.json["value"] = value;
  kv.emplace_back("value", value);
  FillPairs(out, kv);
  return out;
}

std::string PolynomialText(const lucas::IntPolynomial& poly) {
  std::string out;
  for (int d = poly.degree(); d >= 0; --d) {
    const mpz_class& c = poly.coefficients[static_cast<std::size_t>(d)];
    if (sgn(c) == 0) continue;
    const bool first = out.empty();
    if (sgn(c) < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    const mpz_class mag = abs(c);
    const bool unit = mag == 1 && d > 0;
    if (!unit) out += mag.get_str();
    if (d > 0) {
      if (!unit) out += '*';
      out += 'x';
      if (d > 1) out += '^' + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

Output CmdPoly(const Options& o) {
  Output out;
  out.json = Envelope("poly");
  out.json["n"] = o.n;
  if (o.x.empty()) {
    const lucas::IntPolynomial poly = lucas::Coefficients(o.n);
    Json coeffs = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t d = 0; d < poly.coefficients.size(); ++d) {
      coeffs.push_back(poly.coefficients[d].get_str());
      rows.push_back({std::to_string(d), poly.coefficients[d].get_str()});
    }
    out.json["coefficients"] = std::move(coeffs);
    out.text = PolynomialText(poly) + '\n';
    out.tsv = Tsv(rows);
    return out;
  }
  CheckIndex(o.n, 0, lucas::kMaxEvalIndex, "--n");
  CheckDigits(o.digits);
  const DecimalRounding mode = RoundingMode(o, DecimalRounding::kNearestEven);
  const std::string value = RenderAdaptive(
      [&](int p) { return lucas::Eval(o.n, ParseDecimal(o.x, p), p); }, o.digits,
      mode, o.prec_bits, o.max_prec_bits);
  out.json["x"] = o.x;
  out.json["digits"] = o.digits;
  out.json["value"] = value;
  FillPairs(out, {{"n", std::to_string(o.n)}, {"x", o.x}, {"value", value}});
  return out;
}

Output CmdOrtho(const Options& o) {
  const double v = lucas::OrthogonalityIntegral(o.m, o.n, o.nodes);
  Output out;
  out.json = Envelope("ortho");
  out.json["m"] = o.m;
  out.json["n"] = o.n;
  out.json["nodes"] = o.nodes;
  out.json["value"] = v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  FillPairs(out, {{"m", std::to_string(o.m)},
                  {"n", std::to_string(o.n)},
                  {"nodes", std::to_string(o.nodes)},
                  {"value", buf}});
  return out;
}

Json OccupancyJson(const ordering::Occupancy& c) {
  return Json{{"zero_prefixed", c.zero_prefixed},
              {"one_prefixed", c.one_prefixed},
              {"total", c.total()}};
}

Json PlacementJson(const ordering::Placement& p) {
  Json gaps = Json::array();
  for (const ordering::GapOccupancy& g : p.gaps) {
    Json entry = OccupancyJson(g.count);
    entry["upper_rank"] = g.upper_rank;
    gaps.push_back(std::move(entry));
  }
  return Json{{"above", OccupancyJson(p.above)},
              {"gaps", std::move(gaps)},
              {"below", OccupancyJson(p.below)},
              {"total", p.total()}};
}

std::string Approx(const DyadicInterval& v) {
  return Scientific(v.midpoint().ToDouble(), 5);
}

Output CmdInterleave(const Options& o) {
  CheckIndex(o.n, 2, lucas::kMaxEvalIndex - 1, "--n");
  const ordering::InterleavingReport r =
      ordering::Interleave(o.n, o.prec_bits, o.max_prec_bits);
  const std::string ln = "L_" + std::to_string(o.n);
  const std::string lnext = "L_" + std::to_string(o.n + 1);
  Output out;
  out.json = Envelope("interleave");
  out.json["n"] = r.n;
  out.json["precision_bits"] = r.precision_bits;
  out.json["claim_i"] = r.claim_i;
  out.json["claim_ii"] = {{"one_prefixed_zero_per_gap", r.claim_ii},
                          {"interlacing_one_zero_per_gap", r.claim_ii_interlacing},
                          {"counterexample_gaps", r.claim_ii_counterexamples}};
  Json witnesses = Json::array();
  for (const ordering::ZeroWitness& w : r.claim_iii_counterexamples) {
    witnesses.push_back(Json{{"rank", w.rank},
                             {"signs", w.signs.ToString()},
                             {"approx", w.value.midpoint().ToDouble()}});
  }
  out.json["claim_iii"] = {{"zero_prefixed_right_of_largest", r.claim_iii},
                           {"counterexamples", std::move(witnesses)},
                           {"omega_of_largest_below_2", r.claim_iii_omega_bound}};
  out.json["empirical"] = PlacementJson(r.empirical);
  out.json["ground_truth"] = PlacementJson(r.ground_truth);
  out.json["matches_ground_truth"] = r.matches_ground_truth();

  std::vector<std::vector<std::string>> rows = {
      {"region", "zero_prefixed", "one_prefixed", "total", "grid_total"}};
  auto add_row = [&](const std::string& name, const ordering::Occupancy& e,
                     const ordering::Occupancy& g) {
    rows.push_back({name, std::to_string(e.zero_prefixed),
                    std::to_string(e.one_prefixed), std::to_string(e.total()),
                    std::to_string(g.total())});
  };
  add_row("above", r.empirical.above, r.ground_truth.above);
  for (std::size_t i = 0; i < r.empirical.gaps.size(); ++i) {
    add_row("gap " + std::to_string(r.empirical.gaps[i].upper_rank) + "-" +
                std::to_string(r.empirical.gaps[i].upper_rank + 1),
            r.empirical.gaps[i].count, r.ground_truth.gaps[i].count);
  }
  add_row("below", r.empirical.below, r.ground_truth.below);
  out.tsv = Tsv(rows);

  auto yes = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream text;
  text << ln << " vs " << lnext << " (" << r.precision_bits << " bits)\n";
  text << "claim i   smallest " << lnext << " zero left of smallest " << ln
       << " zero: " << yes(r.claim_i) << '\n';
  text << "claim ii  one 1-prefixed zero per gap: " << yes(r.claim_ii);
  if (!r.claim_ii_counterexamples.empty()) {
    text << " (" << r.claim_ii_counterexamples.size() << " gaps differ)";
  }
  text << "\n          one zero per gap: " << yes(r.claim_ii_interlacing) << '\n';
  text << "claim iii 0-prefixed zeros right of largest " << ln
       << " zero: " << yes(r.claim_iii);
  if (!r.claim_iii_counterexamples.empty()) {
    const ordering::ZeroWitness& w = r.claim_iii_counterexamples.front();
    text << " (" << r.claim_iii_counterexamples.size()
         << " counterexamples, e.g. " << w.signs.ToString() << " ~ "
         << Approx(w.value) << " < " << Approx(r.zeros_n.front()) << ")";
  }
  text << "\n          omega of largest " << ln
       << " zero below 2: " << yes(r.claim_iii_omega_bound) << '\n';
  text << "occupancy matches angle grid: " << yes(r.matches_ground_truth())
       << " (" << r.empirical.total() << " zeros of " << lnext << ")\n\n";
  text << ordering::RenderNumberLine(r) << '\n' << Columns(rows);
  out.text = text.str();
  return out;
}

Output CmdScaled(const Options& o) {
  CheckDigits(o.digits);
  const mpq_class a = ParseRational(o.a);
  const SignString signs = SignString::Parse(o.signs);
  const DecimalRounding mode = RoundingMode(o, DecimalRounding::kNearestEven);
  const std::string value = RenderAdaptive(
      [&](int p) { return lucas::ScaledZero(a, signs, p); }, o.digits, mode,
      o.prec_bits, o.max_prec_bits);
  Output out;
  out.json = Envelope("scaled");
  out.json["a"] = RationalString(a);
  out.json["signs"] = signs.ToString();
  out.json["n"] = signs.size() + 1;
  out.json["value"] = value;
  FillPairs(out, {{"a", RationalString(a)},
                  {"signs", signs.ToString()},
                  {"value", value}});
  return out;
}

Output CmdZeros(const Options& o) {
  CheckIndex(o.n, 1, lucas::kMaxEvalIndex, "--n");
  CheckDigits(o.digits);
  const DecimalRounding mode = RoundingMode(o, DecimalRounding::kNearestEven);
  const lucas::ZeroSet set = lucas::Zeros(o.n, o.prec_bits);
  Output out;
  out.json = Envelope("zeros");
  out.json["n"] = set.n;
  out.json["zeros"] = Json::array();
  std::vector<std::vector<std::string>> rows = {{"rank", "signs", "angle", "value"}};
  for (const lucas::ZeroEntry& e : set.entries) {
    const std::string value = radicals::RenderValue(e.signs, o.digits, mode,
                                                    o.prec_bits, o.max_prec_bits);
    out.json["zeros"].push_back(
        Json{{"rank", e.rank},
             {"signs", e.signs.ToString()},
             {"angle",
              {{"num", e.angle.numerator}, {"log2den", e.angle.denominator_log2}}},
             {"value", value}});
    rows.push_back({std::to_string(e.rank), e.signs.ToString(),
                    std::to_string(e.angle.numerator) + "pi/2^" +
                        std::to_string(e.angle.denominator_log2),
                    value});
  }
  out.text = Columns(rows);
  out.tsv = Tsv(rows);
  return out;
}

Output CmdCritical(const Options& o) {
  CheckIndex(o.n, 1, lucas::kMaxEvalIndex, "--n");
  CheckDigits(o.digits);
  const lucas::CriticalSet set = lucas::CriticalPoints(o.n, o.prec_bits);
  Output out;
  out.json = Envelope("critical");
  out.json["n"] = set.n;
  out.json["points"] = Json::array();
  std::vector<std::vector<std::string>> rows = {{"x", "L_n(x)", "kind"}};
  for (const lucas::CriticalPoint& c : set.points) {
    const std::string x = ToDecimal(c.x, o.digits);
    const std::string v = ToDecimal(c.value, 0);
    const char* kind = c.kind == lucas::Extremum::kMinimum ? "minimum" : "maximum";
    out.json["points"].push_back(Json{{"x", x}, {"value", v}, {"kind", kind}});
    rows.push_back({x, v, kind});
  }
  out.text = Columns(rows);
  out.tsv = Tsv(rows);
  return out;
}

Output CmdProof(const Options& o) {
  CheckIndex(o.n, 2, lucas::kMaxEvalIndex, "--n");
  const ordering::ProofVerdicts v =
      ordering::ProofInequalities(o.n, o.prec_bits, o.max_prec_bits);
  auto yes = [](bool b) { return b ? "true" : "false"; };
  Output out;
  out.json = Envelope("proof");
  out.json["n"] = o.n;
  out.json["first"] = v.first;
  out.json["second"] = v.second;
  out.json["third"] = v.third;
  out.json["checked"] = v.checked;
  FillPairs(out, {{"first", yes(v.first)},
                  {"second", yes(v.second)},
                  {"third", yes(v.third)},
                  {"checked", std::to_string(v.checked)}});
  out.exit_code = v.all() ? kExitOk : kExitCannotCertify;
  return out;
}

void Emit(const Output& result, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << result.json.dump(2) << '\n';
  } else if (format == "tsv") {
    out << result.tsv;
  } else {
    out << result.text;
  }
}

}  // namespace

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCannotCertify:
      return kExitCannotCertify;
    case ErrorKind::kInternalInconsistency:
    case ErrorKind::kNegativeRadicand:
    case ErrorKind::kExponentOverflow:
    case ErrorKind::kInsufficientPrecision:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Nested square roots of 2, Gray-code ordering and certificates",
               "nestroot"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::function<Output()> command;
  auto add = [&](const std::string& name, const std::string& help,
                 Output (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}))
        ->capture_default_str();
    sub->callback([&command, &o, fn] { command = [&o, fn] { return fn(o); }; });
    return sub;
  };
  auto precision = [&](CLI::App* sub) {
    sub->add_option("--prec-bits", o.prec_bits, "Working precision in bits")
        ->check(CLI::Range(8, 1 << 20))
        ->capture_default_str();
    sub->add_option("--max-prec-bits", o.max_prec_bits, "Precision cap in bits")
        ->check(CLI::Range(8, 1 << 20))
        ->capture_default_str();
  };
  auto digits = [&](CLI::App* sub) {
    sub->add_option("--digits", o.digits, "Fractional digits")->capture_default_str();
  };
  auto rounding = [&](CLI::App* sub) {
    sub->add_option("--rounding", o.rounding, "Decimal rounding")
        ->check(CLI::IsMember({"truncate", "nearest"}));
  };

  CLI::App* table = add("table", "Positive zeros of L_n in Gray order", CmdTable);
  table->add_option("--n", o.n, "Polynomial index")->required();
  digits(table);
  precision(table);
  rounding(table);

  CLI::App* verify = add("verify", "Certify the Gray ordering of L_n's zeros", CmdVerify);
  verify->add_option("--n", o.n, "Polynomial index")->required();
  precision(verify);

  CLI::App* pi = add("pi", "Approximate pi from the smallest zero of L_depth", CmdPi);
  pi->add_option("--depth", o.depth, "Nesting depth")->required();
  digits(pi);
  precision(pi);
  rounding(pi);

  CLI::App* gray_cmd = add("gray", "List the reflected Gray code", CmdGray);
  gray_cmd->add_option("--order", o.order, "Code order")->required();

  CLI::App* rank = add("rank", "Gray rank of a bit string", CmdRank);
  rank->add_option("--signs", o.signs, "Bit string")->required();

  CLI::App* unrank = add("unrank", "Bit string of a Gray rank", CmdUnrank);
  unrank->add_option("--order", o.order, "Code order")->required();
  unrank->add_option("--rank", o.rank, "1-based rank")->required();

  CLI::App* eval = add("eval", "Evaluate a nested radical", CmdEval);
  eval->add_option("--signs", o.signs, "Signs, outermost first ('' for sqrt(2))")
      ->required();
  digits(eval);
  precision(eval);
  rounding(eval);

  CLI::App* poly = add("poly", "Coefficients of L_n, or L_n at --x", CmdPoly);
  poly->add_option("--n", o.n, "Polynomial index")->required();
  poly->add_option("--x", o.x, "Evaluation point (decimal)");
  digits(poly);
  precision(poly);
  rounding(poly);

  CLI::App* ortho = add("ortho", "Weighted inner product of L_m and L_n", CmdOrtho);
  ortho->add_option("--m", o.m, "First index")->required();
  ortho->add_option("--n", o.n, "Second index")->required();
  ortho->add_option("--nodes", o.nodes, "Quadrature nodes")->capture_default_str();

  CLI::App* inter = add("interleave", "Place L_{n+1}'s zeros among L_n's", CmdInterleave);
  inter->add_option("--n", o.n, "Polynomial index")->required();
  precision(inter);

  CLI::App* scaled = add("scaled", "Zero of the scaled family M^a_n", CmdScaled);
  scaled->add_option("--a", o.a, "Positive rational, e.g. 1/2")->required();
  scaled->add_option("--signs", o.signs, "Signs, outermost first")->required();
  digits(scaled);
  precision(scaled);
  rounding(scaled);

  CLI::App* zeros = add("zeros", "Certified positive zeros of L_n", CmdZeros);
  zeros->add_option("--n", o.n, "Polynomial index")->required();
  digits(zeros);
  precision(zeros);
  rounding(zeros);

  CLI::App* critical = add("critical", "Nonnegative critical points of L_n", CmdCritical);
  critical->add_option("--n", o.n, "Polynomial index")->required();
  digits(critical);
  precision(critical);

  CLI::App* proof = add("proof", "Check the inductive-step inequalities", CmdProof);
  proof->add_option("--n", o.n, "Polynomial index")->required();
  precision(proof);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (o.prec_bits > o.max_prec_bits) {
      throw Usage("--prec-bits exceeds --max-prec-bits");
    }
    const Output result = command();
    Emit(result, o.format, out);
    return result.exit_code;
  } catch (const Error& e) {
    err << "error (" << ToString(e.kind()) << "): " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  }
}

}  // namespace nestroot::cli
