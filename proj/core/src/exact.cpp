#include "pow2comp/exact.hpp"

#include <algorithm>
#include <string>

#include "pow2comp/errors.hpp"

namespace pow2comp {

ExactTable build_exact_table(std::size_t limit, std::size_t cap) {
  if (limit > cap) {
    throw CapacityError("exact table limit " + std::to_string(limit) + " exceeds the configured cap", cap);
  }
  std::vector<Natural> v(limit + 1);
  v[0] = 1;
  for (std::size_t i = 1; i <= limit; ++i) {
    Natural acc = 0;
    for (std::size_t step = 1; step <= i; step <<= 1) acc += v[i - step];
    v[i] = std::move(acc);
  }
  return ExactTable(std::move(v));
}

const Natural& v_exact(std::size_t n, const ExactTable& table) {
  if (n > table.limit()) {
    throw RangeError("index " + std::to_string(n) + " beyond exact table limit " +
                         std::to_string(table.limit()),
                     n);
  }
  return table[n];
}

namespace {

// Extends `parts` in every possible way and counts completed sequences.
void enumerate_compositions(unsigned remaining, std::vector<unsigned>& parts, Natural& count) {
  if (remaining == 0) {
    ++count;
    return;
  }
  for (unsigned part = 1; part <= remaining; part <<= 1) {
    parts.push_back(part);
    enumerate_compositions(remaining - part, parts, count);
    parts.pop_back();
  }
}

}  // namespace

Natural brute_force_v(unsigned n) {
  if (n > kBruteForceLimit) {
    throw CapacityError("brute-force enumeration is limited to n <= 25", kBruteForceLimit);
  }
  std::vector<unsigned> parts;
  Natural count = 0;
  enumerate_compositions(n, parts, count);
  return count;
}

Natural sum_identity_rhs(std::size_t m, std::size_t n, const ExactTable& table) {
  if (m < 1 || n < 1) throw DomainError("sum identity needs m, n >= 1");
  const std::size_t total = m + n;
  if (total > table.limit()) {
    throw RangeError("m + n beyond exact table limit", total);
  }
  Natural rhs = table[m] * table[n];
  for (std::size_t part = 2; part <= total; part <<= 1) {
    const std::size_t rest = total - part;  // a + b
    // a < m and b = rest - a < n  =>  rest - n < a < m, a >= 0, b >= 0.
    const std::size_t a_lo = rest >= n ? rest - n + 1 : 0;
    const std::size_t a_hi = std::min(m - 1, rest);
    for (std::size_t a = a_lo; a <= a_hi && a_lo <= a_hi; ++a) {
      rhs += table[a] * table[rest - a];
    }
  }
  return rhs;
}

bool check_sum_identity(std::size_t m, std::size_t n, const ExactTable& table) {
  const Natural rhs = sum_identity_rhs(m, n, table);
  return table[m + n] == rhs;
}

}  // namespace pow2comp
