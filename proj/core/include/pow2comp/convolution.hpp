#pragma once

#include <cstddef>
#include <cstdint>

#include "pow2comp/exact.hpp"
#include "pow2comp/mod_table.hpp"
#include "pow2comp/natural.hpp"

namespace pow2comp {

// Residue-free and residue-level evaluations of the doubling identities
//
//   v(2n)   = v(n)^2 + 2 sum_{s>=1, 0<=a<b<n, a+b=2n-2^s} v(a)v(b) + sum_{s>=1} v(n-2^(s-1))^2
//   v(2n-1) = 2 v(n-1) v(n) - v(n-1)^2 + 2 sum_{s>=1, a<b<n-1, a+b=2n-1-2^s} v(a)v(b)
//
// computed by a direct double loop over s and a. They are validators, not hot paths.

Natural v_even_conv(std::size_t n, const ExactTable& table);
std::uint64_t v_even_conv(std::size_t n, const ModTable& table);

/// n >= 1.
Natural v_odd_conv(std::size_t n, const ExactTable& table);
std::uint64_t v_odd_conv(std::size_t n, const ModTable& table);

/// U = V (mod 2^N) implies U^2 = V^2 (mod 2^(N+1)). Returns false only if the
/// hypothesis holds and the conclusion fails.
bool square_lift_holds(const Natural& u, const Natural& v, int n_exp);

}  // namespace pow2comp
