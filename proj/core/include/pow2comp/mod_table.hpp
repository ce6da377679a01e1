#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pow2comp/residue.hpp"

namespace pow2comp {

inline constexpr std::size_t kDefaultModCap = 10'000'000;

/// v(0..limit) reduced modulo 2^n_exp, one machine word per index.
class ModTable {
 public:
  int n_exp() const noexcept { return n_exp_; }
  std::size_t limit() const noexcept { return values_.size() - 1; }
  std::uint64_t operator[](std::size_t n) const { return values_[n]; }
  Residue at(std::size_t n) const;
  std::span<const std::uint64_t> values() const noexcept { return values_; }

 private:
  ModTable(int n_exp, std::vector<std::uint64_t> values) : n_exp_(n_exp), values_(std::move(values)) {}
  friend ModTable build_mod_table(std::size_t, int, std::size_t);

  int n_exp_;
  std::vector<std::uint64_t> values_;
};

ModTable build_mod_table(std::size_t limit, int n_exp, std::size_t cap = kDefaultModCap);

}  // namespace pow2comp
