#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pow2comp/natural.hpp"

namespace pow2comp {

/// A non-negative integer held as its binary exponents q1 > q2 > ... > ql,
/// so that n = 2^q1 + ... + 2^ql. The empty list is zero.
class SparseIndex {
 public:
  SparseIndex() = default;

  /// Throws DomainError unless `exponents` is strictly decreasing.
  static SparseIndex from_exponents(std::vector<std::uint32_t> exponents);
  static SparseIndex from_natural(const Natural& n);
  static SparseIndex from_u64(std::uint64_t n);
  /// 2^k + offset; throws DomainError when the result is negative.
  static SparseIndex pow2_plus(std::uint32_t k, std::int64_t offset);

  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  bool is_zero() const noexcept { return exps_.empty(); }
  std::size_t bit_count() const noexcept { return exps_.size(); }
  /// Highest exponent; requires a non-zero index.
  std::uint32_t top() const { return exps_.front(); }
  std::uint32_t bottom() const { return exps_.back(); }
  bool test_bit(std::uint32_t e) const;

  Natural to_natural() const;
  std::optional<std::uint64_t> to_u64() const;

  /// "2^a+2^b+..." (or "0").
  std::string to_string() const;

  friend auto operator<=>(const SparseIndex& a, const SparseIndex& b) = default;
  friend bool operator==(const SparseIndex& a, const SparseIndex& b) = default;

 private:
  explicit SparseIndex(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  friend SparseIndex sparse_add_pow2(const SparseIndex&, std::uint32_t);
  friend SparseIndex sparse_sub_pow2(const SparseIndex&, std::uint32_t);

  std::vector<std::uint32_t> exps_;  // strictly decreasing
};

struct SparseIndexHash {
  std::size_t operator()(const SparseIndex& n) const noexcept;
};

/// Number of binary ones of n.
std::size_t s2(const SparseIndex& n);

/// n + 2^e with carries resolved.
SparseIndex sparse_add_pow2(const SparseIndex& n, std::uint32_t e);

/// n - 2^e with borrows resolved; throws DomainError when n < 2^e.
SparseIndex sparse_sub_pow2(const SparseIndex& n, std::uint32_t e);

SparseIndex sparse_add(const SparseIndex& a, const SparseIndex& b);
/// a - b; throws DomainError when a < b.
SparseIndex sparse_sub(const SparseIndex& a, const SparseIndex& b);

/// True iff s2(n + 2^(N-1)) < 2^N, i.e. the divisibility criterion does not
/// force 2^N | v(n).
bool in_support(const SparseIndex& n, int n_exp);
bool in_support(std::uint64_t n, int n_exp);

}  // namespace pow2comp
