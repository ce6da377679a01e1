#include "pow2comp/table_synth.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace pow2comp {
namespace {

Param capped(std::uint64_t value, std::uint32_t cap) {
  if (value >= cap) return Param{cap, true};
  return Param{static_cast<std::uint32_t>(value), false};
}

std::size_t ell_bound(int n_exp, const std::optional<std::size_t>& max_ell) {
  const std::size_t full = (std::size_t{1} << n_exp) - 1;
  return max_ell ? std::min(full, *max_ell) : full;
}

void check_synth_args(int n_exp, std::uint32_t cap, const SynthOptions& options) {
  check_mod_exp(n_exp);
  if (cap < 2) throw DomainError("pattern cap must be at least 2");
  if (n_exp > 5 && !options.max_ell && !options.horizon) {
    throw DomainError("full pattern enumeration supports N <= 5; set max_ell or horizon");
  }
  if (n_exp > 20) throw DomainError("pattern enumeration supports N <= 20");
}

// Assignments of the saturated parameters: the all-D base point, one axis
// sweep per parameter, and the all-(D+W) corner; or the full grid.
std::vector<std::vector<std::uint32_t>> saturated_points(std::size_t count, std::uint32_t cap,
                                                         std::uint32_t window, bool grid) {
  std::vector<std::vector<std::uint32_t>> points;
  if (count == 0) {
    points.emplace_back();
    return points;
  }
  if (grid) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < count; ++i) {
      total *= window + 1;
      if (total > (std::size_t{1} << 16)) throw CapacityError("saturation grid too large", std::size_t{1} << 16);
    }
    std::vector<std::uint32_t> point(count, cap);
    for (std::size_t index = 0; index < total; ++index) {
      std::size_t rest = index;
      for (std::size_t i = 0; i < count; ++i) {
        point[i] = cap + static_cast<std::uint32_t>(rest % (window + 1));
        rest /= window + 1;
      }
      points.push_back(point);
    }
    return points;
  }
  points.emplace_back(count, cap);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::uint32_t w = 1; w <= window; ++w) {
      std::vector<std::uint32_t> point(count, cap);
      point[i] = cap + w;
      points.push_back(std::move(point));
    }
  }
  if (count >= 2 && window > 0) points.emplace_back(count, cap + window);
  return points;
}

}  // namespace

std::vector<std::uint32_t> ClassPattern::key() const {
  std::vector<std::uint32_t> k;
  k.reserve(gaps.size() + 2);
  k.push_back(static_cast<std::uint32_t>(ell()));
  for (const auto& g : gaps) k.push_back(g.value);
  k.push_back(low.value);
  return k;
}

std::uint64_t ClassPattern::minimal_top() const {
  std::uint64_t top = low.value;
  for (const auto& g : gaps) top += g.value;
  return top;
}

std::string ClassPattern::to_string() const {
  std::ostringstream out;
  auto param = [&](const Param& p) {
    if (p.at_least) out << ">=";
    out << p.value;
  };
  out << "ell=" << ell() << " gaps=[";
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (i) out << ',';
    param(gaps[i]);
  }
  out << "] low=";
  param(low);
  return out.str();
}

std::optional<ClassPattern> pattern_of(const SparseIndex& n, int n_exp, std::uint32_t cap) {
  check_mod_exp(n_exp);
  const SparseIndex shifted = sparse_add_pow2(n, static_cast<std::uint32_t>(n_exp - 1));
  if (shifted.bit_count() >= (std::size_t{1} << n_exp)) return std::nullopt;
  const auto& q = shifted.exponents();
  ClassPattern pattern;
  pattern.n_exp = n_exp;
  pattern.cap = cap;
  pattern.gaps.reserve(q.size() - 1);
  for (std::size_t i = 0; i + 1 < q.size(); ++i) pattern.gaps.push_back(capped(q[i] - q[i + 1], cap));
  pattern.low = capped(q.back(), cap);
  return pattern;
}

std::optional<SparseIndex> pattern_instance(const ClassPattern& pattern,
                                            const std::vector<std::uint32_t>& saturated) {
  std::size_t next = 0;
  auto take = [&](const Param& p) -> std::uint64_t {
    if (!p.at_least) return p.value;
    if (next >= saturated.size()) throw DomainError("too few saturated values for " + pattern.to_string());
    const std::uint32_t value = saturated[next++];
    if (value < pattern.cap) throw DomainError("saturated value below the cap");
    return value;
  };
  std::vector<std::uint64_t> gap_values;
  gap_values.reserve(pattern.gaps.size());
  for (const auto& g : pattern.gaps) gap_values.push_back(take(g));
  const std::uint64_t low = take(pattern.low);
  if (next != saturated.size()) throw DomainError("too many saturated values for " + pattern.to_string());

  std::vector<std::uint32_t> exps(pattern.ell());
  std::uint64_t e = low;
  exps.back() = static_cast<std::uint32_t>(e);
  for (std::size_t i = pattern.gaps.size(); i-- > 0;) {
    e += gap_values[i];
    if (e > UINT32_MAX) throw DomainError("pattern instance exponent overflow");
    exps[i] = static_cast<std::uint32_t>(e);
  }
  const auto half = static_cast<std::uint32_t>(pattern.n_exp - 1);
  if (exps.front() < half) return std::nullopt;  // below 2^(N-1): negative index
  return sparse_sub_pow2(SparseIndex::from_exponents(std::move(exps)), half);
}

CongruenceTable::CongruenceTable(int n_exp, std::uint32_t cap, std::uint32_t window,
                                 std::optional<std::size_t> max_ell, std::optional<std::uint32_t> horizon,
                                 bool zero_default)
    : n_exp_(n_exp), cap_(cap), window_(window), max_ell_(max_ell), horizon_(horizon),
      zero_default_(zero_default) {
  check_mod_exp(n_exp);
  if (cap < 2) throw DomainError("pattern cap must be at least 2");
}

bool CongruenceTable::covers(const ClassPattern& pattern) const {
  if (pattern.n_exp != n_exp_ || pattern.cap != cap_) return false;
  if (pattern.ell() > ell_bound(n_exp_, max_ell_)) return false;
  if (horizon_ && pattern.minimal_top() > *horizon_) return false;
  return true;
}

const TableEntry* CongruenceTable::find(const ClassPattern& pattern) const {
  if (pattern.n_exp != n_exp_ || pattern.cap != cap_) return nullptr;
  const auto it = entries_.find(pattern.key());
  return it == entries_.end() ? nullptr : &it->second;
}

void CongruenceTable::add(TableEntry entry) {
  if (entry.pattern.n_exp != n_exp_ || entry.pattern.cap != cap_) {
    throw DomainError("entry " + entry.pattern.to_string() + " does not match the table modulus or cap");
  }
  auto key = entry.pattern.key();
  entries_.insert_or_assign(std::move(key), std::move(entry));
}

std::size_t for_each_pattern(int n_exp, std::uint32_t cap, const SynthOptions& options,
                             const std::function<void(const ClassPattern&)>& visit) {
  check_synth_args(n_exp, cap, options);
  const std::size_t max_ell = ell_bound(n_exp, options.max_ell);
  const std::uint64_t horizon = options.horizon ? *options.horizon : UINT64_MAX;
  std::size_t visited = 0;

  ClassPattern pattern;
  pattern.n_exp = n_exp;
  pattern.cap = cap;

  // Fill gaps[i..], then low. `used` is the top exponent of the smallest instance so far.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t used) -> void {
    const std::size_t remaining_gaps = pattern.gaps.size() - i;
    if (used + remaining_gaps > horizon) return;
    if (i == pattern.gaps.size()) {
      for (std::uint32_t v = 0; v <= cap; ++v) {
        if (used + v > horizon) break;
        pattern.low = Param{v, v == cap};
        if (++visited > options.pattern_limit) {
          throw CapacityError("pattern enumeration exceeded its limit", options.pattern_limit);
        }
        visit(pattern);
      }
      return;
    }
    for (std::uint32_t v = 1; v <= cap; ++v) {
      if (used + v + (remaining_gaps - 1) > horizon) break;
      pattern.gaps[i] = Param{v, v == cap};
      self(self, i + 1, used + v);
    }
  };
  for (std::size_t ell = 1; ell <= max_ell; ++ell) {
    pattern.gaps.assign(ell - 1, Param{});
    rec(rec, 0, 0);
  }
  return visited;
}

std::vector<ClassPattern> enumerate_patterns(int n_exp, std::uint32_t cap, const SynthOptions& options) {
  std::vector<ClassPattern> out;
  for_each_pattern(n_exp, cap, options, [&](const ClassPattern& p) { out.push_back(p); });
  return out;
}

Natural pattern_count(int n_exp, std::uint32_t cap) {
  check_mod_exp(n_exp);
  const std::size_t max_ell = (std::size_t{1} << std::min(n_exp, 24)) - 1;
  Natural total = 0;
  Natural power = 1;
  for (std::size_t ell = 1; ell <= max_ell; ++ell) {
    total += (cap + 1) * power;
    power *= cap;
  }
  return total;
}

TableEntry synthesize_entry(const ClassPattern& pattern, std::uint32_t window, bool grid, ResidueSource& source) {
  std::size_t saturated = pattern.low.at_least ? 1 : 0;
  for (const auto& g : pattern.gaps) saturated += g.at_least ? 1 : 0;

  TableEntry entry;
  entry.pattern = pattern;
  entry.residue = Residue(0, pattern.n_exp);
  if (saturated > 0) entry.window_checked = std::make_pair(pattern.cap, pattern.cap + window);

  bool first = true;
  for (const auto& point : saturated_points(saturated, pattern.cap, window, grid)) {
    const auto n = pattern_instance(pattern, point);
    if (!n) continue;
    const Residue r = source.residue(*n, pattern.n_exp);
    ++entry.instances;
    if (!first && r != entry.residue) entry.stabilized = false;
    // Points are ordered so the last one is the largest instance.
    entry.residue = r;
    first = false;
  }
  entry.reachable = entry.instances > 0;
  return entry;
}

CongruenceTable synthesize(int n_exp, std::uint32_t cap, std::uint32_t window, ResidueSource& source,
                           const SynthOptions& options) {
  CongruenceTable table(n_exp, cap, window, options.max_ell, options.horizon, !options.keep_zero_entries);
  std::size_t done = 0;
  for_each_pattern(n_exp, cap, options, [&](const ClassPattern& pattern) {
    TableEntry entry = synthesize_entry(pattern, window, options.grid, source);
    if (!options.keep_zero_entries && entry.stabilized && entry.residue.value() == 0) {
      table.note_omitted_zero();
    } else {
      table.add(std::move(entry));
    }
    if (options.progress && ++done % 4096 == 0) options.progress(done);
  });
  return table;
}

std::optional<std::uint64_t> required_dense_limit(int n_exp, std::uint32_t cap, std::uint32_t window,
                                                  const SynthOptions& options) {
  check_synth_args(n_exp, cap, options);
  if (!options.horizon) {
    const std::uint64_t bound = ell_bound(n_exp, options.max_ell) * std::uint64_t{cap + window};
    if (bound >= 63) return std::nullopt;
  }
  std::uint64_t required = 0;
  bool overflow = false;
  for_each_pattern(n_exp, cap, options, [&](const ClassPattern& pattern) {
    if (overflow) return;
    std::uint64_t top = pattern.low.at_least ? cap + window : pattern.low.value;
    for (const auto& g : pattern.gaps) top += g.at_least ? cap + window : g.value;
    if (top >= 63) {
      overflow = true;
      return;
    }
    std::size_t saturated = pattern.low.at_least ? 1 : 0;
    for (const auto& g : pattern.gaps) saturated += g.at_least ? 1 : 0;
    std::vector<std::uint32_t> corner(saturated, cap + window);
    if (const auto n = pattern_instance(pattern, corner)) required = std::max(required, *n->to_u64());
  });
  if (overflow) return std::nullopt;
  return required;
}

CongruenceTable synthesize(int n_exp, std::uint32_t cap, std::uint32_t window,
                           std::shared_ptr<const ModTable> table, const SynthOptions& options) {
  const auto required = required_dense_limit(n_exp, cap, window, options);
  if (!required || *required > table->limit()) {
    const std::size_t need = required ? static_cast<std::size_t>(*required) : SIZE_MAX;
    throw RangeError("synthesis needs a dense table up to " +
                         (required ? std::to_string(*required) : std::string("beyond 2^63")) +
                         ", have " + std::to_string(table->limit()),
                     need);
  }
  DenseSource source(std::move(table));
  return synthesize(n_exp, cap, window, source, options);
}

Residue classify(const SparseIndex& n, const CongruenceTable& table) {
  const auto pattern = pattern_of(n, table.n_exp(), table.cap());
  if (!pattern) return Residue(0, table.n_exp());
  if (const TableEntry* entry = table.find(*pattern)) {
    if (!entry->stabilized) {
      throw UnverifiedClassError("class " + pattern->to_string() + " of " + n.to_string() +
                                 " did not stabilize during synthesis");
    }
    return entry->residue;
  }
  if (!table.covers(*pattern)) {
    throw UnverifiedClassError("class " + pattern->to_string() + " of " + n.to_string() +
                               " lies outside the synthesized range");
  }
  if (!table.zero_default()) {
    throw UnverifiedClassError("class " + pattern->to_string() + " missing from table");
  }
  return Residue(0, table.n_exp());
}

Residue TableSource::residue(const SparseIndex& n, int n_exp) {
  if (n_exp > table_->n_exp()) {
    throw DomainError("table classifies mod 2^" + std::to_string(table_->n_exp()) + ", asked for mod 2^" +
                      std::to_string(n_exp));
  }
  return classify(n, *table_).reduce(n_exp);
}

TauCounts tau_counts(std::uint64_t n) {
  const std::uint64_t m = n + 1;
  const int width = static_cast<int>(std::bit_width(m));
  TauCounts t;
  for (int s = 0; s < width; ++s) {
    const std::uint64_t ps = std::uint64_t{1} << s;
    if (ps == m) ++t.tau1;
    for (int u = 0; u < width; ++u) {
      const std::uint64_t pu = std::uint64_t{1} << u;
      if (ps + pu == m) ++t.tau2;
      for (int v = u + 1; v <= s; ++v) {
        if (ps + (std::uint64_t{1} << v) + pu == m) ++t.tau3;
      }
    }
  }
  return t;
}

bool mod4_formula_check(std::uint64_t n, const ExactTable& table) {
  if (n < 3) throw DomainError("mod-4 formula needs n >= 3");
  if (2 * n > table.limit()) {
    throw RangeError("mod-4 formula needs v(" + std::to_string(2 * n) + ")", static_cast<std::size_t>(2 * n));
  }
  const TauCounts t = tau_counts(n);
  const unsigned long lhs = mpz_fdiv_ui(table[static_cast<std::size_t>(2 * n)].get_mpz_t(), 4);
  return lhs == (2 * t.tau3 + t.tau2 + t.tau1) % 4;
}

std::size_t sharpness_scan(int n_exp, std::uint64_t limit, const ModTable& table) {
  check_mod_exp(n_exp);
  if (n_exp > table.n_exp()) throw DomainError("table modulus too small for the scan");
  if (limit > table.limit()) {
    throw RangeError("sharpness scan needs the table up to " + std::to_string(limit),
                     static_cast<std::size_t>(limit));
  }
  const std::uint64_t mask = residue_mask(n_exp);
  const std::uint64_t shift = std::uint64_t{1} << (n_exp - 1);
  std::size_t worst = 0;
  bool any = false;
  for (std::uint64_t n = 0; n <= limit; ++n) {
    if ((table[static_cast<std::size_t>(n)] & mask) == 0) continue;
    worst = std::max(worst, static_cast<std::size_t>(std::popcount(n + shift)));
    any = true;
  }
  return any ? worst + 1 : 0;
}

}  // namespace pow2comp
