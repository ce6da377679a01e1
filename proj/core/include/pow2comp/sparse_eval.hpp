#pragma once

#include <cstddef>
#include <unordered_map>

#include "pow2comp/residue_source.hpp"

namespace pow2comp {

inline constexpr std::size_t kDefaultSparseBudget = 2'000'000;

/// Memoized evaluation of v(n) mod 2^N straight from the first-part recurrence,
/// dropping every summand v(n - 2^k) whose index lies outside the mod-2^N
/// support (those vanish modulo 2^N). The memo is keyed by exponent lists and
/// persists for the evaluator's lifetime; `budget` bounds its size.
class SparseEvaluator final : public ResidueSource {
 public:
  explicit SparseEvaluator(int n_exp, std::size_t budget = kDefaultSparseBudget);

  Residue evaluate(const SparseIndex& n);
  /// n_exp must not exceed the evaluator's own modulus exponent.
  Residue residue(const SparseIndex& n, int n_exp) override;
  std::string name() const override { return "sparse"; }

  int n_exp() const noexcept { return n_exp_; }
  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  int n_exp_;
  std::size_t budget_;
  std::unordered_map<SparseIndex, std::uint64_t, SparseIndexHash> memo_;
};

/// One-shot evaluation with a private memo. Throws BudgetError when the memo
/// would grow beyond `budget` entries.
Residue v_mod_sparse(const SparseIndex& n, int n_exp, std::size_t budget = kDefaultSparseBudget);

}  // namespace pow2comp
