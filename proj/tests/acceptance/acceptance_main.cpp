// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: pow2comp_acceptance [criterion ...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pow2comp/pow2comp.hpp"

using namespace pow2comp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

constexpr std::uint64_t kMillion = 1'000'000;

const ModTable& dense() {
  static const ModTable table = build_mod_table(kMillion, kMaxModExp);
  return table;
}

std::uint64_t dense_mod(std::uint64_t n, int n_exp) { return dense()[n] & residue_mask(n_exp); }

// Full tables for N <= 3, a horizon-bounded one for N = 4 (covers every n < 2^17 - 8).
const CongruenceTable& synth_table(int n_exp) {
  static std::map<int, std::unique_ptr<CongruenceTable>> cache;
  auto& slot = cache[n_exp];
  if (!slot) {
    HalvingEvaluator source(kDefaultHalvingBudget, true);
    SynthOptions options;
    std::uint32_t cap = static_cast<std::uint32_t>(n_exp + 4);
    if (n_exp == 4) options.horizon = 17;
    slot = std::make_unique<CongruenceTable>(synthesize(n_exp, cap, 4, source, options));
  }
  return *slot;
}

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

Outcome reference_values() {
  const auto rows = oracle::reference_values();
  const auto exact = build_exact_table(72);
  const auto mod64 = build_mod_table(72, 6);
  std::size_t exact_ok = 0;
  std::size_t bits_ok = 0;
  for (const auto& row : rows) {
    exact_ok += exact[row.n] == Natural(row.value) ? 1 : 0;
    bits_ok += mod64.at(row.n).binary() == row.mod64 ? 1 : 0;
  }
  return {rows.size() == 72 && exact_ok == 72 && bits_ok == 72,
          format("%zu/72 exact values, %zu/72 mod-64 strings", exact_ok, bits_ok)};
}

Outcome brute_force() {
  const auto exact = build_exact_table(25);
  for (unsigned n = 0; n <= 25; ++n) {
    if (brute_force_v(n) != exact[n]) return {false, format("mismatch at n=%u", n)};
  }
  return {true, "n = 0..25"};
}

Outcome identities() {
  const auto exact = build_exact_table(400);
  std::size_t pairs = 0;
  for (std::size_t m = 1; m < 300; ++m) {
    for (std::size_t n = 1; m + n <= 300; ++n, ++pairs) {
      if (!check_sum_identity(m, n, exact)) return {false, format("sum identity fails at (%zu, %zu)", m, n)};
    }
  }
  for (std::size_t n = 1; 2 * n <= 400; ++n) {
    if (v_even_conv(n, exact) != exact[2 * n]) return {false, format("even form fails at n=%zu", n)};
    if (v_odd_conv(n, exact) != exact[2 * n - 1]) return {false, format("odd form fails at n=%zu", n)};
  }
  return {true, format("%zu pairs, 200 even and 200 odd evaluations", pairs)};
}

Outcome parity() {
  const auto t = build_mod_table(kMillion, 1);
  for (std::uint64_t n = 1; n <= kMillion; ++n) {
    const bool odd = t[n] == 1;
    if (odd != (((n + 1) & n) == 0)) return {false, format("n=%llu", static_cast<unsigned long long>(n))};
  }
  return {true, "n <= 10^6"};
}

Outcome support_zero() {
  std::size_t outside = 0;
  for (int n_exp = 1; n_exp <= 5; ++n_exp) {
    for (std::uint64_t n = 0; n <= kMillion; ++n) {
      if (in_support(n, n_exp)) continue;
      ++outside;
      if (dense_mod(n, n_exp) != 0) {
        return {false, format("N=%d n=%llu is outside the support but nonzero", n_exp,
                              static_cast<unsigned long long>(n))};
      }
    }
  }
  return {true, format("N = 1..5, n <= 10^6, %zu forced zeros confirmed", outside)};
}

Outcome published_tables() {
  std::ostringstream detail;
  bool ok = true;
  for (int n_exp : {2, 3, 4}) {
    const auto report = verify_published_tables(synth_table(n_exp));
    std::size_t samples = 0;
    for (const auto& row : report.rows) samples += row.samples;
    const std::size_t expected_rows = n_exp == 2 ? 7 : n_exp == 3 ? 11 : 2;
    const bool pass = report.passed() && report.table_rows() == expected_rows;
    ok = ok && pass;
    detail << "mod " << (1 << n_exp) << ": " << (report.table_rows() - report.failed_rows()) << "/"
           << report.table_rows() << " rows (" << samples << " samples); ";
    for (const auto& row : report.rows) {
      for (const auto& f : row.failures) detail << "[" << row.label << " " << f << "] ";
    }
  }
  // The two mod-16 classes directly from the dense table.
  for (std::uint32_t k = 1; k <= 16; ++k) {
    if (dense_mod(7 * (1ULL << k) - 2, 4) != 14) return {false, format("v(7*2^%u-2) mod 16", k)};
  }
  for (std::uint32_t k = 3; k <= 16; ++k) {
    if (dense_mod(5 * (1ULL << k) - 2, 4) != 8) return {false, format("v(5*2^%u-2) mod 16", k)};
  }
  detail << "mod-16 classes dense for k <= 16";
  return {ok, detail.str()};
}

Outcome powers_of_two() {
  SparseEvaluator mod32(5);
  for (std::uint32_t k = 3; k <= 20; ++k) {
    const auto r = mod32.evaluate(SparseIndex::from_exponents({k}));
    if (r.reduce(4).value() != 8) return {false, format("v(2^%u) mod 16 = %llu", k, (unsigned long long)r.reduce(4).value())};
    if (k >= 8 && r.value() != 8) return {false, format("v(2^%u) mod 32 = %llu", k, (unsigned long long)r.value())};
    if ((1ULL << k) <= kMillion && dense_mod(1ULL << k, 5) != r.value()) return {false, "dense disagrees"};
  }
  return {true, "mod 16 for k = 3..20, mod 32 for k = 8..20"};
}

Outcome theta_limits() {
  HalvingEvaluator source(kDefaultHalvingBudget, true);
  const auto t0 = theta(0, 5, 20, source);
  if (t0.value.value() != 8 || t0.k0 > 8) return {false, format("theta(0) mod 32 = %llu, k0 = %u", (unsigned long long)t0.value.value(), t0.k0)};
  const auto tm = theta(-1, 3, 20, source);
  if (tm.value.value() != 7) return {false, "theta(-1) mod 8"};
  const auto tp = theta(1, 3, 20, source);
  if (tp.value.value() != 6) return {false, "theta(1) mod 8"};
  for (std::int64_t a = -8; a <= 8; ++a) {
    std::optional<Residue> coarser;
    for (int n_exp = 1; n_exp <= 4; ++n_exp) {
      const auto t = theta(a, n_exp, 28, source);
      if (coarser && t.value.reduce(n_exp - 1) != *coarser) {
        return {false, format("prefix coherence fails at a=%lld N=%d", static_cast<long long>(a), n_exp)};
      }
      coarser = t.value;
    }
  }
  return {true, format("theta(0)=8 mod 32 (k0=%u), theta(-1)=7, theta(1)=6 mod 8; a in [-8,8], N <= 4", t0.k0)};
}

Outcome sparse_vs_dense() {
  std::size_t checked = 0;
  std::size_t largest_memo = 0;
  for (int n_exp = 1; n_exp <= 5; ++n_exp) {
    SparseEvaluator eval(n_exp);
    for (std::uint64_t n = 0; n <= 100'000; ++n) {
      if (!in_support(n, n_exp)) continue;
      ++checked;
      if (eval.evaluate(SparseIndex::from_u64(n)).value() != dense_mod(n, n_exp)) {
        return {false, format("N=%d n=%llu", n_exp, static_cast<unsigned long long>(n))};
      }
    }
    largest_memo = std::max(largest_memo, eval.memo_size());
  }
  return {true, format("%zu supported indices, largest memo %zu of %zu", checked, largest_memo, kDefaultSparseBudget)};
}

Outcome classify_vs_dense() {
  std::size_t checked = 0;
  std::ostringstream tables;
  for (int n_exp = 1; n_exp <= 4; ++n_exp) {
    const auto& table = synth_table(n_exp);
    tables << "N=" << n_exp << " cap " << table.cap() << (table.horizon() ? " horizon " + std::to_string(*table.horizon()) : "")
           << "; ";
    for (std::uint64_t n = 0; n <= 100'000; ++n) {
      if (!in_support(n, n_exp)) continue;
      ++checked;
      if (classify(SparseIndex::from_u64(n), table).value() != dense_mod(n, n_exp)) {
        return {false, format("N=%d n=%llu", n_exp, static_cast<unsigned long long>(n))};
      }
    }
  }
  return {true, tables.str() + format("%zu supported indices, window 4", checked)};
}

Outcome rodseth_gupta() {
  const auto b = build_partition_table(256 * 201);
  std::ostringstream detail;
  for (int s = 1; s <= 6; ++s) {
    const auto report = rodseth_gupta_check(s, 201, b);
    if (!report.passed()) return {false, format("s=%d", s)};
    detail << (s > 1 ? "; " : "") << "s=" << s << " mu=" << report.mu << " witness " << *report.witness;
  }
  return {true, detail.str()};
}

Outcome mod32_formula() {
  const auto b = build_partition_table(400'002);
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    if (!b_mod32_formula_check(n, b)) return {false, format("n=%llu", static_cast<unsigned long long>(n))};
  }
  return {true, "n <= 10^5"};
}

Outcome asymptotics() {
  const auto cert = find_rho(Real("1e-12"));
  if (!(cert.f_lo > 0 && cert.f_hi < 0 && cert.hi - cert.lo < Real("1e-12"))) return {false, "bad bracket"};
  const auto fine = find_rho(Real("1e-40"));
  const auto c = find_c(fine.rho);
  const auto table = build_exact_table(2001);
  const auto report = asymptotic_report(table, fine.rho, c, 200, 2000);
  const double gap = ratio_gap(table, 2000, cert.rho);
  const bool ok = report.max_delta < 1e-3 && gap < 1e-4;
  std::ostringstream detail;
  detail << std::setprecision(25) << "rho=" << fine.rho.value << " c=" << c.value << std::setprecision(3)
         << "; max delta " << report.max_delta << " at n=" << report.max_at << "; ratio gap " << gap;
  return {ok, detail.str()};
}

Outcome sharpness() {
  const auto four = sharpness_scan(4, kMillion, dense());
  const auto five = sharpness_scan(5, kMillion, dense());
  return {four <= 9 && five <= 19, format("N=4: %zu (bound 9), N=5: %zu (bound 19)", four, five)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "reference values", reference_values},
      {2, "brute-force oracle", brute_force},
      {3, "convolution identities", identities},
      {4, "parity law", parity},
      {5, "support bound", support_zero},
      {6, "published tables", published_tables},
      {7, "powers of two", powers_of_two},
      {8, "2-adic limits", theta_limits},
      {9, "sparse vs dense", sparse_vs_dense},
      {10, "classify vs dense", classify_vs_dense},
      {11, "Rodseth-Gupta", rodseth_gupta},
      {12, "b(4n+2) mod 32", mod32_formula},
      {13, "asymptotics", asymptotics},
      {14, "sharpness", sharpness},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += outcome.ok ? 0 : 1;
    std::printf("%s %2d %-24s %6.1fs  %s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.name, secs, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
