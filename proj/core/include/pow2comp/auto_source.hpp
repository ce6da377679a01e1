#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>

#include "pow2comp/halving_eval.hpp"
#include "pow2comp/table_synth.hpp"

namespace pow2comp {

struct AutoSourceOptions {
  /// Indices up to this bound are read from a dense table (built lazily).
  std::size_t dense_limit = 10'000'000;
  std::size_t halving_budget = kDefaultHalvingBudget;
};

/// Picks an evaluator by magnitude: dense table below dense_limit, classify
/// when an attached table covers the class, the halving evaluator otherwise.
class AutoSource final : public ResidueSource {
 public:
  explicit AutoSource(AutoSourceOptions options = {});

  /// Tables are used for every modulus up to their own.
  void attach_table(std::shared_ptr<const CongruenceTable> table);

  Residue residue(const SparseIndex& n, int n_exp) override;
  std::string name() const override { return "auto"; }
  /// Evaluator that answered the most recent query.
  const std::string& last_method() const noexcept { return last_method_; }

 private:
  const ModTable& dense_up_to(std::size_t n);

  AutoSourceOptions options_;
  std::unique_ptr<ModTable> dense_;
  std::map<int, std::shared_ptr<const CongruenceTable>> tables_;
  HalvingEvaluator halving_;
  std::string last_method_;
};

}  // namespace pow2comp
