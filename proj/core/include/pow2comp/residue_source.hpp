#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "pow2comp/mod_table.hpp"
#include "pow2comp/residue.hpp"
#include "pow2comp/sparse_index.hpp"

namespace pow2comp {

/// Anything that can produce v(n) mod 2^N. Implementations may memoize, so
/// residue() is non-const; give each thread its own source.
class ResidueSource {
 public:
  virtual ~ResidueSource() = default;
  virtual Residue residue(const SparseIndex& n, int n_exp) = 0;
  virtual std::string name() const = 0;
};

/// Lookups in a dense table. Indices beyond the table raise RangeError whose
/// required() is the index that was asked for.
class DenseSource final : public ResidueSource {
 public:
  explicit DenseSource(std::shared_ptr<const ModTable> table) : table_(std::move(table)) {}
  Residue residue(const SparseIndex& n, int n_exp) override;
  std::string name() const override { return "dense"; }
  const ModTable& table() const { return *table_; }

 private:
  std::shared_ptr<const ModTable> table_;
};

}  // namespace pow2comp
