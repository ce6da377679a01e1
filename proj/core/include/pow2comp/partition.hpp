#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pow2comp/natural.hpp"

namespace pow2comp {

inline constexpr std::size_t kDefaultPartitionCap = 4'000'000;

/// Binary partition numbers b(0..limit): partitions into powers of two,
/// order ignored.
class PartitionTable {
 public:
  std::size_t limit() const noexcept { return values_.size() - 1; }
  const Natural& operator[](std::size_t n) const { return values_[n]; }
  /// Range-checked access.
  const Natural& at(std::size_t n) const;
  std::span<const Natural> values() const noexcept { return values_; }

 private:
  explicit PartitionTable(std::vector<Natural> values) : values_(std::move(values)) {}
  friend PartitionTable build_partition_table(std::size_t, std::size_t);
  std::vector<Natural> values_;
};

/// b(0) = 1, b(2n+1) = b(2n), b(2n) = b(2n-1) + b(n).
PartitionTable build_partition_table(std::size_t limit, std::size_t cap = kDefaultPartitionCap);

/// Counts partitions by enumerating non-increasing power-of-two sequences. n <= 60.
Natural brute_force_b(unsigned n);

/// floor((3s + 4) / 2).
int mu(int s);

struct RodsethGuptaReport {
  int s = 0;
  int mu = 0;
  std::uint64_t odd_limit = 0;
  /// First odd n whose difference is not divisible by 2^mu.
  std::optional<std::uint64_t> counterexample;
  /// Smallest odd n with valuation exactly mu.
  std::optional<std::uint64_t> witness;
  std::size_t checked = 0;

  bool passed() const { return !counterexample && witness.has_value(); }
};

/// 2^mu(s) | b(2^(s+2) n) - b(2^s n) for odd n <= odd_limit, plus a witness
/// that the exponent is attained.
RodsethGuptaReport rodseth_gupta_check(int s, std::uint64_t odd_limit, const PartitionTable& table);

/// Parity of the number of ones in binary.
int thue_morse(std::uint64_t n);
int thue_morse(const Natural& n);
/// Parity of the number of (overlapping) "11" blocks in binary.
int rudin_shapiro(std::uint64_t n);
int rudin_shapiro(const Natural& n);

/// b(4n+2) ≡ 2 + 4 w(n) + 8 w(floor(n/2)) + 16 r(n) (mod 32), w Thue–Morse,
/// r Rudin–Shapiro.
bool b_mod32_formula_check(std::uint64_t n, const PartitionTable& table);

}  // namespace pow2comp
