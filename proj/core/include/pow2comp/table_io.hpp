#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "pow2comp/table_synth.hpp"

namespace pow2comp {

/// JSON text of a table. Saturated parameters are written as ">=D".
std::string table_to_json(const CongruenceTable& table, int indent = 1);

/// Inverse of table_to_json; throws ParseError on malformed or inconsistent input.
CongruenceTable table_from_json(std::string_view text);

void save_table(const CongruenceTable& table, const std::filesystem::path& path);
CongruenceTable load_table(const std::filesystem::path& path);

/// Re-synthesizes up to `sample` entries (chosen by `seed`) from `source` and
/// returns the patterns whose residue or stabilization disagrees.
std::vector<std::string> revalidate_table(const CongruenceTable& table, ResidueSource& source,
                                          std::size_t sample, std::uint64_t seed = 1);

}  // namespace pow2comp
