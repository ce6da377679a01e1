#include "pow2comp/partition.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pow2comp/errors.hpp"

namespace pow2comp {

const Natural& PartitionTable::at(std::size_t n) const {
  if (n > limit()) {
    throw RangeError("b(" + std::to_string(n) + ") beyond partition table limit " + std::to_string(limit()), n);
  }
  return values_[n];
}

PartitionTable build_partition_table(std::size_t limit, std::size_t cap) {
  if (limit > cap) throw CapacityError("partition table limit " + std::to_string(limit), cap);
  std::vector<Natural> b(limit + 1);
  b[0] = 1;
  for (std::size_t n = 1; n <= limit; ++n) b[n] = (n % 2 == 1) ? b[n - 1] : Natural(b[n - 1] + b[n / 2]);
  return PartitionTable(std::move(b));
}

Natural brute_force_b(unsigned n) {
  if (n > 60) throw CapacityError("brute-force partition count for n=" + std::to_string(n), 60);
  // Parts in non-increasing order; `largest` bounds the next part.
  auto count = [](auto&& self, unsigned rest, unsigned largest) -> Natural {
    if (rest == 0) return 1;
    Natural total = 0;
    for (unsigned part = largest; part >= 1; part /= 2) {
      if (part <= rest) total += self(self, rest - part, part);
    }
    return total;
  };
  unsigned top = 1;
  while (top * 2 <= std::max(n, 1U)) top *= 2;
  return count(count, n, top);
}

int mu(int s) {
  if (s < 1) throw DomainError("mu(s) needs s >= 1");
  return (3 * s + 4) / 2;
}

RodsethGuptaReport rodseth_gupta_check(int s, std::uint64_t odd_limit, const PartitionTable& table) {
  RodsethGuptaReport report;
  report.s = s;
  report.mu = mu(s);
  report.odd_limit = odd_limit;
  if (s > 40) throw DomainError("s too large");
  const std::uint64_t hi = odd_limit - (odd_limit % 2 == 0 ? 1 : 0);
  const std::uint64_t need = (std::uint64_t{1} << (s + 2)) * hi;
  if (odd_limit >= 1 && need > table.limit()) {
    throw RangeError("Rodseth-Gupta check needs b up to " + std::to_string(need), static_cast<std::size_t>(need));
  }
  for (std::uint64_t n = 1; n <= odd_limit; n += 2) {
    const Natural diff = table[static_cast<std::size_t>((std::uint64_t{1} << (s + 2)) * n)] -
                         table[static_cast<std::size_t>((std::uint64_t{1} << s) * n)];
    ++report.checked;
    if (sgn(diff) == 0) continue;  // divisible by every power of two
    const std::size_t val = two_adic_valuation(abs(diff));
    if (val < static_cast<std::size_t>(report.mu)) {
      if (!report.counterexample) report.counterexample = n;
    } else if (val == static_cast<std::size_t>(report.mu) && !report.witness) {
      report.witness = n;
    }
  }
  return report;
}

int thue_morse(std::uint64_t n) { return std::popcount(n) & 1; }

int thue_morse(const Natural& n) { return static_cast<int>(popcount(n) & 1U); }

int rudin_shapiro(std::uint64_t n) { return std::popcount(n & (n >> 1)) & 1; }

int rudin_shapiro(const Natural& n) {
  const Natural pairs = n & Natural(n >> 1);
  return static_cast<int>(popcount(pairs) & 1U);
}

bool b_mod32_formula_check(std::uint64_t n, const PartitionTable& table) {
  const std::uint64_t index = 4 * n + 2;
  const unsigned long lhs = mpz_fdiv_ui(table.at(static_cast<std::size_t>(index)).get_mpz_t(), 32);
  const unsigned long rhs =
      (2UL + 4UL * static_cast<unsigned long>(thue_morse(n)) + 8UL * static_cast<unsigned long>(thue_morse(n / 2)) +
       16UL * static_cast<unsigned long>(rudin_shapiro(n))) %
      32UL;
  return lhs == rhs;
}

}  // namespace pow2comp
