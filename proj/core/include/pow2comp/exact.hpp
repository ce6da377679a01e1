#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pow2comp/natural.hpp"

namespace pow2comp {

inline constexpr std::size_t kDefaultExactCap = 20'000;
inline constexpr unsigned kBruteForceLimit = 25;

/// Exact values v(0..limit) of the binary composition function.
/// Immutable once built; safe to share between readers.
class ExactTable {
 public:
  std::size_t limit() const noexcept { return values_.size() - 1; }
  const Natural& operator[](std::size_t n) const { return values_[n]; }
  std::span<const Natural> values() const noexcept { return values_; }

 private:
  explicit ExactTable(std::vector<Natural> values) : values_(std::move(values)) {}
  friend ExactTable build_exact_table(std::size_t, std::size_t);

  std::vector<Natural> values_;
};

/// Ascending pass of v(i) = sum over 2^k <= i of v(i - 2^k), v(0) = 1.
/// Values grow like 1.77^n, so memory is quadratic in `limit`.
ExactTable build_exact_table(std::size_t limit, std::size_t cap = kDefaultExactCap);

/// table[n], or RangeError when n > table.limit().
const Natural& v_exact(std::size_t n, const ExactTable& table);

/// Counts compositions of n into powers of two by generating every one of
/// them. Test oracle only: n <= 25.
Natural brute_force_v(unsigned n);

/// Right-hand side of the two-block convolution identity
///   v(m + n) = v(m) v(n) + sum_{s >= 1} sum_{a < m, b < n, a + b = m + n - 2^s} v(a) v(b).
Natural sum_identity_rhs(std::size_t m, std::size_t n, const ExactTable& table);

/// Whether the identity above holds exactly for (m, n); m, n >= 1.
bool check_sum_identity(std::size_t m, std::size_t n, const ExactTable& table);

}  // namespace pow2comp
