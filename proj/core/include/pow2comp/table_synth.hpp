#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pow2comp/exact.hpp"
#include "pow2comp/mod_table.hpp"
#include "pow2comp/residue_source.hpp"

namespace pow2comp {

/// One pattern parameter: an exact value below the cap, or "at least cap".
struct Param {
  std::uint32_t value = 0;
  bool at_least = false;

  friend bool operator==(const Param&, const Param&) = default;
};

/// Shape of n + 2^(N-1) = 2^k1 + ... + 2^k_ell: the gaps k_i - k_(i+1)
/// (top first) and the lowest exponent k_ell, each capped.
struct ClassPattern {
  int n_exp = 1;
  std::uint32_t cap = 2;
  std::vector<Param> gaps;
  Param low;

  std::size_t ell() const noexcept { return gaps.size() + 1; }
  /// ell, then every gap, then low; AtLeast parameters encode as the cap.
  std::vector<std::uint32_t> key() const;
  /// Top exponent of the smallest instance (every AtLeast parameter at the cap).
  std::uint64_t minimal_top() const;
  /// e.g. "ell=2 gaps=[>=5] low=1".
  std::string to_string() const;

  friend bool operator==(const ClassPattern&, const ClassPattern&) = default;
};

/// Pattern of n modulo 2^N, or nullopt when s2(n + 2^(N-1)) >= 2^N.
std::optional<ClassPattern> pattern_of(const SparseIndex& n, int n_exp, std::uint32_t cap);

/// The integer n with n + 2^(N-1) having the given pattern, with the AtLeast
/// parameters set to `saturated` (in pattern order: gaps top first, then low).
/// nullopt when that integer would be negative.
std::optional<SparseIndex> pattern_instance(const ClassPattern& pattern,
                                            const std::vector<std::uint32_t>& saturated);

struct TableEntry {
  ClassPattern pattern;
  Residue residue;
  bool stabilized = true;
  /// False when no instance is a non-negative integer.
  bool reachable = true;
  /// Range of the saturated parameters checked; nullopt when there are none.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> window_checked;
  std::size_t instances = 0;
};

struct SynthOptions {
  /// Only patterns with ell <= max_ell.
  std::optional<std::size_t> max_ell;
  /// Only patterns whose smallest instance has top exponent <= horizon.
  std::optional<std::uint32_t> horizon;
  /// Full [D, D+W] grid over the saturated parameters instead of axis sweeps.
  bool grid = false;
  /// Store verified-zero entries instead of counting them.
  bool keep_zero_entries = false;
  /// Enumeration stops with CapacityError past this many patterns.
  std::size_t pattern_limit = 20'000'000;
  /// Called every 4096 patterns with the number synthesized so far.
  std::function<void(std::size_t)> progress;
};

/// Residue classification for one modulus. Patterns inside the coverage
/// (max_ell / horizon) that carry no entry were verified to be zero on every
/// instance, unless zero_default() is false.
class CongruenceTable {
 public:
  using Key = std::vector<std::uint32_t>;

  CongruenceTable(int n_exp, std::uint32_t cap, std::uint32_t window, std::optional<std::size_t> max_ell,
                  std::optional<std::uint32_t> horizon, bool zero_default);

  int n_exp() const noexcept { return n_exp_; }
  std::uint32_t cap() const noexcept { return cap_; }
  std::uint32_t window() const noexcept { return window_; }
  std::optional<std::size_t> max_ell() const noexcept { return max_ell_; }
  std::optional<std::uint32_t> horizon() const noexcept { return horizon_; }
  bool zero_default() const noexcept { return zero_default_; }
  std::size_t omitted_zero_count() const noexcept { return omitted_zero_; }
  const std::map<Key, TableEntry>& entries() const noexcept { return entries_; }

  /// Whether synthesis enumerated this pattern.
  bool covers(const ClassPattern& pattern) const;
  const TableEntry* find(const ClassPattern& pattern) const;

  void add(TableEntry entry);
  void note_omitted_zero() { ++omitted_zero_; }
  void set_omitted_zero_count(std::size_t count) { omitted_zero_ = count; }

 private:
  int n_exp_;
  std::uint32_t cap_;
  std::uint32_t window_;
  std::optional<std::size_t> max_ell_;
  std::optional<std::uint32_t> horizon_;
  bool zero_default_;
  std::size_t omitted_zero_ = 0;
  std::map<Key, TableEntry> entries_;
};

/// Calls `visit` for every pattern with 1 <= ell < 2^N (and within the
/// options' max_ell / horizon). Returns the number visited.
std::size_t for_each_pattern(int n_exp, std::uint32_t cap, const SynthOptions& options,
                             const std::function<void(const ClassPattern&)>& visit);

/// All patterns; throws CapacityError past options.pattern_limit.
std::vector<ClassPattern> enumerate_patterns(int n_exp, std::uint32_t cap, const SynthOptions& options = {});

/// Number of patterns without max_ell / horizon: sum over ell of (cap+1)·cap^(ell-1).
Natural pattern_count(int n_exp, std::uint32_t cap);

/// Evaluates every pattern on its instances and records the common residue.
TableEntry synthesize_entry(const ClassPattern& pattern, std::uint32_t window, bool grid, ResidueSource& source);

CongruenceTable synthesize(int n_exp, std::uint32_t cap, std::uint32_t window, ResidueSource& source,
                           const SynthOptions& options = {});

/// Dense-table variant: throws RangeError with the required limit when some
/// instance lies beyond the table.
CongruenceTable synthesize(int n_exp, std::uint32_t cap, std::uint32_t window,
                           std::shared_ptr<const ModTable> table, const SynthOptions& options = {});

/// Largest instance index synthesis would touch, or nullopt if beyond 64 bits.
std::optional<std::uint64_t> required_dense_limit(int n_exp, std::uint32_t cap, std::uint32_t window,
                                                  const SynthOptions& options);

/// v(n) mod 2^N by pattern lookup. Throws UnverifiedClassError for patterns
/// outside the coverage or entries that did not stabilize.
Residue classify(const SparseIndex& n, const CongruenceTable& table);

/// classify() as a residue source.
class TableSource final : public ResidueSource {
 public:
  explicit TableSource(std::shared_ptr<const CongruenceTable> table) : table_(std::move(table)) {}
  Residue residue(const SparseIndex& n, int n_exp) override;
  std::string name() const override { return "classify"; }
  const CongruenceTable& table() const { return *table_; }

 private:
  std::shared_ptr<const CongruenceTable> table_;
};

/// The three solution counts of the mod-4 formula for v(2n).
struct TauCounts {
  std::uint64_t tau1 = 0;  // n+1 = 2^s
  std::uint64_t tau2 = 0;  // n+1 = 2^s + 2^u, ordered (s, u), s = u allowed
  std::uint64_t tau3 = 0;  // n+1 = 2^s + 2^v + 2^u, s >= v > u
};
TauCounts tau_counts(std::uint64_t n);

/// v(2n) ≡ 2·tau3 + tau2 + tau1 (mod 4). Requires n >= 3 and 2n within the table.
bool mod4_formula_check(std::uint64_t n, const ExactTable& table);

/// Smallest t with: s2(n + 2^(N-1)) >= t implies v(n) ≡ 0 (mod 2^N), over n <= limit.
std::size_t sharpness_scan(int n_exp, std::uint64_t limit, const ModTable& table);

}  // namespace pow2comp
