#include <chrono>
#include <functional>
#include <set>
#include <iomanip>
#include <sstream>

#include "pow2comp/analytic.hpp"
#include "pow2comp/commands.hpp"
#include "pow2comp/convolution.hpp"
#include "pow2comp/errors.hpp"
#include "pow2comp/exact.hpp"
#include "pow2comp/halving_eval.hpp"
#include "pow2comp/mod_table.hpp"
#include "pow2comp/published_tables.hpp"
#include "pow2comp/partition.hpp"
#include "pow2comp/sparse_index.hpp"
#include "pow2comp/table_synth.hpp"
#include "pow2comp/reference_values.hpp"

namespace cli {

using namespace pow2comp;

namespace {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

using Suite = std::function<std::vector<Check>()>;

constexpr std::uint64_t kMillion = 1'000'000;

std::string count_of(std::size_t good, std::size_t total) { return std::to_string(good) + "/" + std::to_string(total); }

std::vector<Check> values_suite() {
  const auto exact = build_exact_table(72);
  const auto mod64 = build_mod_table(72, 6);
  std::size_t exact_ok = 0;
  std::size_t bits_ok = 0;
  std::size_t total = 0;
  for (const auto& ref : kReferenceValues) {
    ++total;
    exact_ok += exact[ref.n] == Natural(ref.value) ? 1 : 0;
    bits_ok += mod64.at(ref.n).binary() == ref.mod64 ? 1 : 0;
  }
  return {{"exact values", exact_ok == total && total == 72, count_of(exact_ok, total)},
          {"mod-64 residues", bits_ok == total && total == 72, count_of(bits_ok, total)}};
}

std::vector<Check> parity_suite() {
  const auto t = build_mod_table(kMillion, 1);
  for (std::uint64_t n = 1; n <= kMillion; ++n) {
    if ((t[n] == 1) != (((n + 1) & n) == 0)) return {{"odd iff n = 2^u - 1", false, "fails at n=" + std::to_string(n)}};
  }
  return {{"odd iff n = 2^u - 1", true, "n <= 10^6"}};
}

std::vector<Check> support_suite() {
  const auto t = build_mod_table(kMillion, 5);
  std::vector<Check> checks;
  for (int n_exp = 1; n_exp <= 5; ++n_exp) {
    const std::uint64_t mask = residue_mask(n_exp);
    std::size_t outside = 0;
    std::optional<std::uint64_t> bad;
    for (std::uint64_t n = 0; n <= kMillion && !bad; ++n) {
      if (in_support(n, n_exp)) continue;
      ++outside;
      if ((t[n] & mask) != 0) bad = n;
    }
    checks.push_back({"zero outside the support mod 2^" + std::to_string(n_exp), !bad,
                      bad ? "fails at n=" + std::to_string(*bad)
                          : std::to_string(outside) + " indices outside the support, n <= 10^6"});
  }
  for (int n_exp : {4, 5}) {
    const std::size_t bound = (std::size_t{1} << (n_exp - 1)) + (std::size_t{1} << (n_exp - 3)) - 1;
    const std::size_t t_sharp = sharpness_scan(n_exp, kMillion, t);
    checks.push_back({"sharpened bound mod 2^" + std::to_string(n_exp), t_sharp <= bound,
                      "threshold " + std::to_string(t_sharp) + " <= " + std::to_string(bound)});
  }
  return checks;
}

std::vector<Check> identities_suite() {
  const auto exact = build_exact_table(400);
  std::vector<Check> checks;
  bool brute_ok = true;
  for (unsigned n = 0; n <= kBruteForceLimit; ++n) brute_ok = brute_ok && brute_force_v(n) == exact[n];
  checks.push_back({"brute force agrees", brute_ok, "n <= 25"});
  std::size_t pairs = 0;
  std::string failure;
  for (std::size_t m = 1; m < 300 && failure.empty(); ++m) {
    for (std::size_t n = 1; m + n <= 300; ++n, ++pairs) {
      if (!check_sum_identity(m, n, exact)) {
        failure = "fails at (" + std::to_string(m) + ", " + std::to_string(n) + ")";
        break;
      }
    }
  }
  checks.push_back({"two-block identity", failure.empty(), failure.empty() ? std::to_string(pairs) + " pairs" : failure});
  failure.clear();
  for (std::size_t n = 1; 2 * n <= 400 && failure.empty(); ++n) {
    if (v_even_conv(n, exact) != exact[2 * n]) failure = "even form fails at n=" + std::to_string(n);
    if (v_odd_conv(n, exact) != exact[2 * n - 1]) failure = "odd form fails at n=" + std::to_string(n);
  }
  checks.push_back({"doubling identities", failure.empty(), failure.empty() ? "2n <= 400" : failure});
  return checks;
}

std::vector<Check> tables_suite() {
  std::vector<Check> checks;
  HalvingEvaluator source(kDefaultHalvingBudget, true);
  for (int n_exp : {2, 3}) {
    const auto table = synthesize(n_exp, static_cast<std::uint32_t>(n_exp + 3), 4, source);
    const auto report = verify_published_tables(table);
    std::size_t unstabilized = 0;
    for (const auto& [key, entry] : table.entries()) unstabilized += entry.reachable && !entry.stabilized ? 1 : 0;
    std::string detail = count_of(report.table_rows() - report.failed_rows(), report.table_rows()) + " rows";
    for (const auto& row : report.rows) {
      if (!row.passed()) detail += "; " + row.label + " fails";
    }
    checks.push_back({"mod " + std::to_string(1 << n_exp) + " table", report.passed(), detail});
    checks.push_back({"mod " + std::to_string(1 << n_exp) + " entries stabilized", unstabilized == 0,
                      std::to_string(unstabilized) + " unstabilized"});
  }
  const auto dense = build_mod_table(std::size_t{1} << 20, 5);
  bool ok = true;
  for (std::uint32_t k = 1; k <= 16; ++k) ok = ok && (dense[7 * (std::size_t{1} << k) - 2] & 15) == 14;
  for (std::uint32_t k = 3; k <= 16; ++k) ok = ok && (dense[5 * (std::size_t{1} << k) - 2] & 15) == 8;
  checks.push_back({"mod-16 classes", ok, "7*2^k-2 and 5*2^k-2 for k <= 16"});
  ok = true;
  for (std::uint32_t k = 3; k <= 20; ++k) ok = ok && (dense[std::size_t{1} << k] & 15) == 8;
  for (std::uint32_t k = 8; k <= 20; ++k) ok = ok && dense[std::size_t{1} << k] == 8;
  checks.push_back({"powers of two", ok, "v(2^k) = 8 mod 16 (k >= 3), mod 32 (k >= 8), k <= 20"});
  const auto exact = build_exact_table(10'000);
  std::string failure;
  for (std::uint64_t n = 3; n <= 5000 && failure.empty(); ++n) {
    if (!mod4_formula_check(n, exact)) failure = "fails at n=" + std::to_string(n);
  }
  checks.push_back({"mod-4 formula for v(2n)", failure.empty(), failure.empty() ? "3 <= n <= 5000" : failure});
  return checks;
}

std::vector<Check> rg_suite() {
  const auto b = build_partition_table(256 * 201);
  std::vector<Check> checks;
  for (int s = 1; s <= 6; ++s) {
    const auto report = rodseth_gupta_check(s, 201, b);
    std::string detail = "2^" + std::to_string(report.mu) + " divides, odd n <= 201";
    if (report.counterexample) detail = "fails at n=" + std::to_string(*report.counterexample);
    if (report.witness) detail += ", exact at n=" + std::to_string(*report.witness);
    checks.push_back({"s=" + std::to_string(s), report.passed(), detail});
  }
  return checks;
}

std::vector<Check> mod32_suite() {
  const auto b = build_partition_table(400'002);
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    if (!b_mod32_formula_check(n, b)) return {{"b(4n+2) mod 32", false, "fails at n=" + std::to_string(n)}};
  }
  return {{"b(4n+2) mod 32", true, "n <= 10^5"}};
}

std::vector<Check> asymptotics_suite() {
  const auto cert = find_rho(Real("1e-12"));
  const auto rho = find_rho(Real("1e-30")).rho;
  const auto c = find_c(rho);
  const auto table = build_exact_table(2001);
  const auto report = asymptotic_report(table, rho, c, 200, 2000);
  const double gap = ratio_gap(table, 2000, cert.rho);
  std::ostringstream delta;
  delta << "max " << std::setprecision(3) << report.max_delta << " at n=" << report.max_at;
  std::ostringstream ratio;
  ratio << std::setprecision(3) << gap;
  return {{"root bracket", cert.f_lo > 0 && cert.f_hi < 0 && cert.hi - cert.lo < Real("1e-12"), "width < 1e-12"},
          {"log deviation on [200, 2000]", report.max_delta < 1e-3, delta.str()},
          {"ratio v(2001)/v(2000)", gap < 1e-4, ratio.str()}};
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all = {
      {"values", values_suite},   {"parity", parity_suite}, {"support", support_suite},
      {"identities", identities_suite}, {"tables", tables_suite}, {"rg", rg_suite},
      {"mod32", mod32_suite},     {"asymptotics", asymptotics_suite},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, suite] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

int run_verify(const VerifyOptions& opts, const Context& ctx) {
  std::set<std::string> wanted(opts.suites.begin(), opts.suites.end());
  const bool everything = wanted.empty() || wanted.count("all");

  Record rec;
  rec.command = "verify";
  rec.inputs["suites"] = opts.suites.empty() ? std::vector<std::string>{"all"} : opts.suites;
  Json results = Json::array();
  bool all_passed = true;
  for (const auto& [name, suite] : suites()) {
    if (!everything && !wanted.count(name)) continue;
    std::vector<Check> checks;
    try {
      checks = suite();
    } catch (const Error& e) {
      checks = {{"run", false, e.what()}};
    }
    bool passed = true;
    Json list = Json::array();
    for (const auto& c : checks) {
      passed = passed && c.passed;
      list.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      rec.line(std::string(c.passed ? "PASS " : "FAIL ") + name + ": " + c.name + " (" + c.detail + ")");
    }
    all_passed = all_passed && passed;
    results.push_back(Json{{"name", name}, {"passed", passed}, {"checks", list}});
  }
  rec.results["suites"] = results;
  rec.results["passed"] = all_passed;
  rec.provenance = {{"engine", "builtin suites"}};
  emit(rec, ctx.mode);
  return all_passed ? 0 : 1;
}

}  // namespace cli
