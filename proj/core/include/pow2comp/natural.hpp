#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pow2comp {

/// Arbitrary-precision non-negative integer (indices and exact values).
using Natural = mpz_class;

std::size_t bit_length(const Natural& x);
std::size_t popcount(const Natural& x);
bool test_bit(const Natural& x, std::size_t i);
Natural pow2(std::size_t e);

/// Exponent of the largest power of two dividing x; x must be non-zero.
std::size_t two_adic_valuation(const Natural& x);

/// x mod 2^bits for x >= 0, bits <= 64.
std::uint64_t low_bits(const Natural& x, int bits);

bool fits_u64(const Natural& x);
std::uint64_t to_u64(const Natural& x);
Natural from_u64(std::uint64_t x);

/// Parses a plain non-negative decimal integer.
Natural parse_natural(std::string_view text);

/// Natural log of a positive integer, accurate to double precision even for
/// values far beyond the double range.
double log_natural(const Natural& x);

}  // namespace pow2comp
