#include "pow2comp/published_tables.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>

namespace pow2comp {
namespace {

// n = sum of 2^(param[index] + shift) + offset, parameters strictly decreasing.
struct Term {
  int index;
  std::uint32_t shift;
};

struct Row {
  std::string label;
  std::uint64_t residue;
  int arity;
  std::uint32_t min_last;
  std::uint32_t min_gap;  // required distance between the two largest parameters
  std::vector<Term> terms;
  std::int64_t offset;
  bool remark = false;
};

enum class Parity { kEven, kOdd };

struct TableSpec {
  std::uint64_t domain;  // rows apply to n >= domain
  std::vector<Row> rows;
  // Residue-0 rows for the remaining even / odd numbers, and where they sit in the report.
  bool has_other = false;
  std::size_t other_even_at = 0;
  std::size_t other_odd_at = 0;
};

TableSpec spec_for(int n_exp) {
  TableSpec t;
  const std::vector<Term> one = {{0, 0}};
  const std::vector<Term> two = {{0, 0}, {1, 0}};
  const std::vector<Term> three = {{0, 0}, {1, 0}, {2, 0}};
  const std::vector<Term> thrice = {{0, 1}, {0, 0}};
  if (n_exp == 2) {
    t.domain = 2;
    t.rows = {
        {"2^k+2^l+2^m-2, k>l>m>=1", 2, 3, 1, 1, three, -2},
        {"2^k-2, k>=2", 2, 1, 2, 1, one, -2},
        {"3*2^k-2, k>=1", 2, 1, 1, 1, thrice, -2},
        {"2^k-1, k>=2", 3, 1, 2, 1, one, -1},
        {"2^k+2^l-1, k>l>=1", 2, 2, 1, 1, two, -1},
        {"2^k, k>=3 (other even)", 0, 1, 3, 1, one, 0, true},
        {"2^k+2^l-2, k>l+1>=3 (other even)", 0, 2, 2, 2, two, -2, true},
    };
    t.has_other = true;
    t.other_even_at = 3;
    t.other_odd_at = 6;
  } else if (n_exp == 3) {
    t.domain = 7;
    t.rows = {
        {"2^k+2^l+2^m-2, k>l>m>=1", 6, 3, 1, 1, three, -2},
        {"2^k-2, k>=2", 2, 1, 2, 1, one, -2},
        {"3*2^k-2, k>=1", 6, 1, 1, 1, thrice, -2},
        {"2^k-1, k>=3", 7, 1, 3, 1, one, -1},
        {"2^k+1, k>=4", 6, 1, 4, 1, one, 1},
        {"2^k+2^l-1, k>l>=2", 2, 2, 2, 1, two, -1},
        {"2^k-3, k>=4", 4, 1, 4, 1, one, -3},
        {"3*2^k-3, k>=3", 4, 1, 3, 1, thrice, -3},
        {"2^k+2^l+2^m-3, k>l>m>=2", 4, 3, 2, 1, three, -3},
    };
    t.has_other = true;
    t.other_even_at = 3;
    t.other_odd_at = 10;
  } else if (n_exp == 4) {
    t.domain = 1;
    t.rows = {
        {"7*2^k-2, k>=1", 14, 1, 1, 1, {{0, 2}, {0, 1}, {0, 0}}, -2},
        {"5*2^k-2, k>=3", 8, 1, 3, 1, {{0, 2}, {0, 0}}, -2},
    };
  } else {
    throw DomainError("published tables exist for N = 2, 3, 4 only");
  }
  return t;
}

std::optional<SparseIndex> build(const Row& row, const std::vector<std::uint32_t>& params) {
  SparseIndex n;
  for (const auto& term : row.terms) n = sparse_add_pow2(n, params[static_cast<std::size_t>(term.index)] + term.shift);
  const SparseIndex c = SparseIndex::from_u64(static_cast<std::uint64_t>(row.offset < 0 ? -row.offset : row.offset));
  if (row.offset >= 0) return sparse_add(n, c);
  if (n < c) return std::nullopt;
  return sparse_sub(n, c);
}

std::uint32_t top_exponent(const Row& row, const std::vector<std::uint32_t>& params) {
  std::uint32_t top = 0;
  for (const auto& term : row.terms) top = std::max(top, params[static_cast<std::size_t>(term.index)] + term.shift);
  return top;
}

// Parameter tuples (largest first). `below` selects tuples one step outside a bound.
std::vector<std::vector<std::uint32_t>> samples(const Row& row, bool below) {
  static const std::vector<std::uint32_t> kLow = {0, 1, 2, 3, 4, 5, 6, 8, 13, 17, 32, 33, 64, 100, 500, 1000};
  static const std::vector<std::uint32_t> kGap = {1, 2, 3, 4, 5, 7, 10, 16, 33, 100};
  std::vector<std::uint32_t> lasts;
  if (below) {
    if (row.min_last > 0) lasts.push_back(row.min_last - 1);
  } else {
    lasts.push_back(row.min_last);
    for (auto v : kLow) {
      if (v > row.min_last) lasts.push_back(v);
    }
  }
  std::vector<std::vector<std::uint32_t>> out;
  if (row.arity == 1) {
    for (auto k : lasts) out.push_back({k});
    return out;
  }
  std::vector<std::uint32_t> top_gaps;
  for (auto g : kGap) {
    if (g >= row.min_gap) top_gaps.push_back(g);
  }
  if (row.arity == 2) {
    for (auto l : lasts) {
      for (auto g : top_gaps) out.push_back({l + g, l});
    }
    if (below && row.min_gap > 1) {
      // Gap bound one short, with the last parameter in range.
      for (auto l : {row.min_last, row.min_last + 1, row.min_last + 5}) out.push_back({l + row.min_gap - 1, l});
    }
    return out;
  }
  // Three parameters: trim the grid, it is cubic.
  std::vector<std::uint32_t> few_lasts;
  for (std::size_t i = 0; i < lasts.size(); i += (i < 4 ? 1 : 3)) few_lasts.push_back(lasts[i]);
  const std::vector<std::uint32_t> few_gaps = {1, 2, 3, 5, 16, 100};
  for (auto m : few_lasts) {
    for (auto g1 : few_gaps) {
      for (auto g2 : few_gaps) out.push_back({m + g1 + g2, m + g1, m});
    }
  }
  return out;
}

std::string describe(const SparseIndex& n) {
  if (const auto small = n.to_u64()) return std::to_string(*small);
  return n.to_string();
}

// Indices of the listed rows near 2^big as offsets in [-64, 64], and every
// listed index up to `limit`. One-below-boundary instances count as listed.
void listed_indices(const TableSpec& spec, std::uint64_t limit, std::uint32_t big, std::set<std::uint64_t>& small,
                    std::set<std::int64_t>& near_big) {
  // Lower parameters up to 8 reach every offset within 64 of 2^big.
  const std::uint32_t lim_bits = std::max<std::uint32_t>(static_cast<std::uint32_t>(std::bit_width(limit)) + 2, 8);
  for (const auto& row : spec.rows) {
    std::vector<std::uint32_t> params(static_cast<std::size_t>(row.arity));
    auto visit = [&](const std::vector<std::uint32_t>& p) {
      const auto n = build(row, p);
      if (!n) return;
      if (const auto v = n->to_u64(); v && *v <= limit) small.insert(*v);
      if (!n->is_zero() && n->top() >= big) {
        if (const auto d = sparse_sub_pow2(*n, big).to_u64(); d && *d <= 64) near_big.insert(static_cast<std::int64_t>(*d));
      } else {
        const auto d = sparse_sub(SparseIndex::from_exponents({big}), *n).to_u64();
        if (d && *d <= 64) near_big.insert(-static_cast<std::int64_t>(*d));
      }
    };
    const std::uint32_t lo = row.min_last > 0 ? row.min_last - 1 : 0;
    if (row.arity == 1) {
      for (std::uint32_t k = lo; k <= lim_bits; ++k) visit({k});
      for (std::uint32_t k = big - 3; k <= big + 1; ++k) visit({k});
    } else if (row.arity == 2) {
      for (std::uint32_t l = lo; l <= lim_bits; ++l) {
        for (std::uint32_t k = l + 1; k <= lim_bits; ++k) visit({k, l});
        for (std::uint32_t k = big - 3; k <= big + 1; ++k) visit({k, l});
      }
    } else {
      for (std::uint32_t m = lo; m <= lim_bits; ++m) {
        for (std::uint32_t l = m + 1; l <= lim_bits; ++l) {
          for (std::uint32_t k = l + 1; k <= lim_bits; ++k) visit({k, l, m});
          for (std::uint32_t k = big - 3; k <= big + 1; ++k) visit({k, l, m});
        }
      }
    }
  }
}

}  // namespace

bool PublishedTableReport::passed() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed(); });
}

std::size_t PublishedTableReport::failed_rows() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.passed(); }));
}

std::size_t PublishedTableReport::table_rows() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.remark; }));
}

PublishedTableReport verify_published_tables(ResidueSource& source, int n_exp, const PublishedVerifyOptions& options) {
  const TableSpec spec = spec_for(n_exp);
  PublishedTableReport report;
  report.n_exp = n_exp;

  auto check = [&](PublishedRowReport& out, const SparseIndex& n, std::uint64_t expected) {
    ++out.samples;
    try {
      const Residue r = source.residue(n, n_exp);
      if (r.value() != expected) out.failures.push_back("n=" + describe(n) + " got " + std::to_string(r.value()));
    } catch (const Error& e) {
      out.failures.push_back("n=" + describe(n) + ": " + e.what());
    }
  };

  for (const auto& row : spec.rows) {
    PublishedRowReport out;
    out.label = row.label;
    out.expected = row.residue;
    out.remark = row.remark;
    std::set<SparseIndex> seen;
    for (const auto& params : samples(row, false)) {
      if (top_exponent(row, params) > options.max_exponent) continue;
      const auto n = build(row, params);
      if (!n || !seen.insert(*n).second) continue;
      if (const auto v = n->to_u64(); v && *v < spec.domain) continue;
      check(out, *n, row.residue);
    }
    for (const auto& params : samples(row, true)) {
      const auto n = build(row, params);
      if (!n) continue;
      if (const auto v = n->to_u64(); v && *v < spec.domain) continue;
      try {
        const Residue r = source.residue(*n, n_exp);
        out.notes.push_back("below bound: n=" + describe(*n) + " has residue " + std::to_string(r.value()));
      } catch (const Error& e) {
        out.notes.push_back("below bound: n=" + describe(*n) + ": " + e.what());
      }
    }
    report.rows.push_back(std::move(out));
  }

  if (spec.has_other) {
    PublishedRowReport even{"other even numbers", 0, 0, {}, {}, false};
    PublishedRowReport odd{"other odd numbers", 0, 0, {}, {}, false};
    std::set<std::uint64_t> small;
    std::set<std::int64_t> unused;
    listed_indices(spec, options.other_limit, 100, small, unused);
    for (std::uint64_t n = spec.domain; n <= options.other_limit; ++n) {
      if (!small.count(n)) check(n % 2 == 0 ? even : odd, SparseIndex::from_u64(n), 0);
    }
    for (const std::uint32_t big : {100U, 1000U}) {
      if (big > options.max_exponent) continue;
      std::set<std::uint64_t> ignored;
      std::set<std::int64_t> near_big;
      listed_indices(spec, 0, big, ignored, near_big);
      for (std::int64_t a = -64; a <= 64; ++a) {
        if (!near_big.count(a)) check(a % 2 == 0 ? even : odd, SparseIndex::pow2_plus(big, a), 0);
      }
    }
    report.rows.insert(report.rows.begin() + static_cast<std::ptrdiff_t>(spec.other_even_at), std::move(even));
    report.rows.insert(report.rows.begin() + static_cast<std::ptrdiff_t>(spec.other_odd_at), std::move(odd));
  }
  return report;
}

PublishedTableReport verify_published_tables(const CongruenceTable& table, const PublishedVerifyOptions& options) {
  // Non-owning handle: the source does not outlive this call.
  TableSource source(std::shared_ptr<const CongruenceTable>(std::shared_ptr<void>(), &table));
  return verify_published_tables(source, table.n_exp(), options);
}

}  // namespace pow2comp
