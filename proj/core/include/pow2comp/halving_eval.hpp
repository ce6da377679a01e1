#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>

#include "pow2comp/residue_source.hpp"

namespace pow2comp {

inline constexpr std::size_t kDefaultHalvingBudget = 4'000'000;

/// Exact v(n) mod 2^N for indices of any size, using the even/odd convolution
/// identities read modulo powers of two. Squares only need their base modulo
/// 2^(N-1), and every cross term v(a)v(b) with a + b = K is recovered by
/// enumerating pairs whose shifted indices both stay in a support of the
/// appropriate level. Every recursive call therefore lowers the modulus
/// exponent, and the memo stays small for indices with few binary ones.
///
/// Indices below 2^120 run on 128-bit integers, larger ones on GMP.
class HalvingEvaluator final : public ResidueSource {
 public:
  /// With `evict_when_full` the memo is dropped instead of throwing
  /// BudgetError once it holds `budget` entries.
  explicit HalvingEvaluator(std::size_t budget = kDefaultHalvingBudget, bool evict_when_full = false);
  ~HalvingEvaluator() override;
  HalvingEvaluator(HalvingEvaluator&&) noexcept;
  HalvingEvaluator& operator=(HalvingEvaluator&&) noexcept;

  Residue residue(const SparseIndex& n, int n_exp) override;
  Residue residue(std::uint64_t n, int n_exp);
  Residue residue(const Natural& n, int n_exp);
  std::string name() const override { return "halving"; }

  std::size_t memo_size() const noexcept;
  void clear();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pow2comp
