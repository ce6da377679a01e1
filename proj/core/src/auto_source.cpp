#include "pow2comp/auto_source.hpp"

#include <algorithm>

namespace pow2comp {

AutoSource::AutoSource(AutoSourceOptions options)
    : options_(options), halving_(options.halving_budget, /*evict_when_full=*/true) {}

void AutoSource::attach_table(std::shared_ptr<const CongruenceTable> table) {
  const int n_exp = table->n_exp();
  tables_[n_exp] = std::move(table);
}

const ModTable& AutoSource::dense_up_to(std::size_t n) {
  if (!dense_ || dense_->limit() < n) {
    // Grow geometrically so a rising sequence of queries costs linear time overall.
    std::size_t limit = std::max<std::size_t>(n, 4096);
    if (dense_) limit = std::max(limit, std::min(options_.dense_limit, 2 * dense_->limit()));
    dense_ = std::make_unique<ModTable>(build_mod_table(limit, kMaxModExp, std::max(limit, kDefaultModCap)));
  }
  return *dense_;
}

Residue AutoSource::residue(const SparseIndex& n, int n_exp) {
  check_mod_exp(n_exp);
  if (const auto small = n.to_u64(); small && *small <= options_.dense_limit) {
    last_method_ = "dense";
    const auto index = static_cast<std::size_t>(*small);
    return Residue(dense_up_to(index)[index], n_exp);
  }
  for (auto it = tables_.lower_bound(n_exp); it != tables_.end(); ++it) {
    try {
      const Residue r = classify(n, *it->second).reduce(n_exp);
      last_method_ = "classify";
      return r;
    } catch (const UnverifiedClassError&) {
      // Not certified at this modulus; try the next table or fall through.
    }
  }
  last_method_ = "halving";
  return halving_.residue(n, n_exp);
}

}  // namespace pow2comp
