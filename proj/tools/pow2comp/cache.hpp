#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pow2comp/table_synth.hpp"

namespace cli {

/// Table files kept under the cache directory, one per modulus: mod<N>.json.
class TableCache {
 public:
  explicit TableCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

  bool enabled() const { return dir_.has_value(); }
  std::filesystem::path path_for(int n_exp) const;
  void store(const pow2comp::CongruenceTable& table) const;

  /// Cached tables for moduli >= n_exp that pass re-validation, finest first.
  /// Rejected files are reported in `warnings`.
  std::vector<std::shared_ptr<const pow2comp::CongruenceTable>> load_for(int n_exp,
                                                                         std::vector<std::string>& warnings) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

/// Loads a table file and re-checks a sample of its entries. Throws Error when
/// the sample disagrees.
std::shared_ptr<const pow2comp::CongruenceTable> load_validated(const std::filesystem::path& path);

inline constexpr std::size_t kRevalidateSample = 8;

}  // namespace cli
