#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pow2comp/table_synth.hpp"

namespace pow2comp {

struct PublishedRowReport {
  std::string label;
  std::uint64_t expected = 0;
  std::size_t samples = 0;
  /// Asserted samples that disagreed ("n=... got r").
  std::vector<std::string> failures;
  /// Instances one step below a row's parameter bound: recorded, not asserted.
  std::vector<std::string> notes;
  /// Row from the remarks after the mod-4 table rather than from a table.
  bool remark = false;

  bool passed() const { return samples > 0 && failures.empty(); }
};

struct PublishedTableReport {
  int n_exp = 0;
  std::vector<PublishedRowReport> rows;

  bool passed() const;
  std::size_t failed_rows() const;
  /// Rows that belong to the published table itself (remarks excluded).
  std::size_t table_rows() const;
};

struct PublishedVerifyOptions {
  /// Samples whose largest exponent exceeds this are skipped.
  std::uint32_t max_exponent = 1100;
  /// The "other numbers" rows are scanned exhaustively up to this index.
  std::uint64_t other_limit = 4096;
};

/// Checks the published mod-4 and mod-8 tables (N = 2, 3) and the two mod-16
/// classes (N = 4) by sampling each row's parameterization, including the
/// boundary value of every parameter bound.
PublishedTableReport verify_published_tables(ResidueSource& source, int n_exp, const PublishedVerifyOptions& options = {});

/// Same, routed through classify().
PublishedTableReport verify_published_tables(const CongruenceTable& table, const PublishedVerifyOptions& options = {});

}  // namespace pow2comp
