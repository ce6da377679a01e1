#pragma once

#include <string_view>

#include "pow2comp/sparse_index.hpp"

namespace pow2comp {

/// Parses a plain decimal ("362") or a sum of powers and constants such as
/// "2^100-2", "2^1000+2^3-7", "3*2^50-2". Terms are evaluated exactly on
/// exponent lists, never through the decimal value. Throws ParseError on bad
/// syntax and DomainError when the value is negative.
SparseIndex parse_index_spec(std::string_view text);

}  // namespace pow2comp
