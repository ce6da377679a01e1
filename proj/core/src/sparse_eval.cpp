#include "pow2comp/sparse_eval.hpp"

#include <string>
#include <vector>

namespace pow2comp {

SparseEvaluator::SparseEvaluator(int n_exp, std::size_t budget) : n_exp_(n_exp), budget_(budget) {
  check_mod_exp(n_exp);
  if (budget == 0) throw DomainError("sparse evaluator budget must be positive");
}

Residue SparseEvaluator::residue(const SparseIndex& n, int n_exp) {
  if (n_exp > n_exp_) {
    throw DomainError("sparse evaluator works mod 2^" + std::to_string(n_exp_) + ", asked for mod 2^" +
                      std::to_string(n_exp));
  }
  return evaluate(n).reduce(n_exp);
}

Residue SparseEvaluator::evaluate(const SparseIndex& n) {
  const std::uint64_t mask = residue_mask(n_exp_);
  if (n.is_zero()) return Residue(1, n_exp_);
  if (!in_support(n, n_exp_)) return Residue(0, n_exp_);
  if (auto it = memo_.find(n); it != memo_.end()) return Residue(it->second, n_exp_);

  struct Frame {
    SparseIndex n;
    std::uint32_t next_k = 0;
    std::uint64_t acc = 0;
  };
  // Explicit stack: dense-ish inputs recurse to depth ~n.
  std::vector<Frame> stack;
  stack.push_back(Frame{n});
  std::uint64_t result = 0;
  while (!stack.empty()) {
    const std::size_t top = stack.size() - 1;
    bool descended = false;
    while (stack[top].next_k <= stack[top].n.top()) {
      const std::uint32_t k = stack[top].next_k++;
      SparseIndex rest = sparse_sub_pow2(stack[top].n, k);
      if (rest.is_zero()) {
        stack[top].acc += 1;
        continue;
      }
      if (!in_support(rest, n_exp_)) continue;
      if (auto it = memo_.find(rest); it != memo_.end()) {
        stack[top].acc = (stack[top].acc + it->second) & mask;
        continue;
      }
      stack.push_back(Frame{std::move(rest)});
      descended = true;
      break;
    }
    if (descended) continue;

    const std::uint64_t value = stack[top].acc & mask;
    if (memo_.size() >= budget_) throw BudgetError(memo_.size());
    memo_.emplace(std::move(stack[top].n), value);
    stack.pop_back();
    if (stack.empty()) {
      result = value;
    } else {
      stack.back().acc = (stack.back().acc + value) & mask;
    }
  }
  return Residue(result, n_exp_);
}

Residue v_mod_sparse(const SparseIndex& n, int n_exp, std::size_t budget) {
  SparseEvaluator evaluator(n_exp, budget);
  return evaluator.evaluate(n);
}

}  // namespace pow2comp
