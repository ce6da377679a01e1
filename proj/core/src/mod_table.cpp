#include "pow2comp/mod_table.hpp"

#include <string>

namespace pow2comp {

Residue ModTable::at(std::size_t n) const {
  if (n > limit()) {
    throw RangeError("index " + std::to_string(n) + " beyond dense table limit " + std::to_string(limit()),
                     n);
  }
  return Residue(values_[n], n_exp_);
}

ModTable build_mod_table(std::size_t limit, int n_exp, std::size_t cap) {
  check_mod_exp(n_exp);
  if (limit > cap) {
    throw CapacityError("dense table limit " + std::to_string(limit) + " exceeds the configured cap", cap);
  }
  const std::uint64_t mask = residue_mask(n_exp);
  std::vector<std::uint64_t> r(limit + 1);
  r[0] = 1 & mask;
  for (std::size_t i = 1; i <= limit; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t step = 1; step <= i; step <<= 1) acc += r[i - step];
    r[i] = acc & mask;
  }
  return ModTable(n_exp, std::move(r));
}

}  // namespace pow2comp
