#include "pow2comp/residue_source.hpp"

#include <string>

namespace pow2comp {

Residue DenseSource::residue(const SparseIndex& n, int n_exp) {
  if (n_exp > table_->n_exp()) {
    throw DomainError("dense table holds residues mod 2^" + std::to_string(table_->n_exp()) +
                      ", asked for mod 2^" + std::to_string(n_exp));
  }
  const auto small = n.to_u64();
  if (!small || *small > table_->limit()) {
    const std::size_t required = small ? static_cast<std::size_t>(*small) : SIZE_MAX;
    throw RangeError("index " + n.to_string() + " beyond dense table limit " +
                         std::to_string(table_->limit()),
                     required);
  }
  return Residue((*table_)[static_cast<std::size_t>(*small)], n_exp);
}

}  // namespace pow2comp
