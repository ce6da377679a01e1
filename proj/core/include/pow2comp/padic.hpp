#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pow2comp/residue_source.hpp"

namespace pow2comp {

/// Consecutive equal residues required before a sequence counts as settled.
inline constexpr std::uint32_t kStableRun = 4;

/// Residue of the 2-adic limit of v(2^k + a), read off a settled tail.
struct TwoAdicApprox {
  std::int64_t a = 0;
  int n_exp = 1;
  Residue value;
  /// Smallest k from which every checked residue equals `value`.
  std::uint32_t k0 = 0;
  std::uint32_t kmax = 0;
  /// First k with 2^k + a >= 1; trace[i] is the residue at k_first + i.
  std::uint32_t k_first = 0;
  std::vector<std::uint64_t> trace;
};

/// Scans k = 0..kmax (skipping 2^k + a < 1). Throws NonStabilizedError, with
/// the trace, unless the last kStableRun or more residues agree.
TwoAdicApprox theta(std::int64_t a, int n_exp, std::uint32_t kmax, ResidueSource& source);

/// theta(0, 5, kmax).value; kmax >= 12.
Residue theta0_mod32(std::uint32_t kmax, ResidueSource& source);

/// P(x) = a0 + a1 x + ... + ad x^d with ad >= 1.
struct Polynomial {
  std::vector<std::int64_t> coeffs;

  /// P(2^k), which may be negative.
  Natural at_pow2(std::uint32_t k) const;
  std::string to_string() const;
  bool has_negative_nonconstant() const;
};

/// Parses "x^2+x", "2x^2-x+3", "x-1".
Polynomial parse_polynomial(const std::string& text);

struct PolyLimitReport {
  bool stabilized = false;
  std::optional<std::uint32_t> k0;
  std::optional<Residue> value;
  /// (k, v(P(2^k)) mod 2^N) across the window.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> trace;
};

/// Non-negative coefficients: finds the smallest in-window k0 after which
/// v(P(2^k)) mod 2^N is constant, requiring a run of kStableRun values.
PolyLimitReport poly_limit_check(const Polynomial& p, int n_exp, std::uint32_t k_lo, std::uint32_t k_hi,
                                 ResidueSource& source);

struct PolyNullityReport {
  /// First k from which P(2^k) stays outside the mod-2^N support through k_hi.
  std::optional<std::uint32_t> exit_k;
  /// (k, in support) for every k with P(2^k) >= 0.
  std::vector<std::pair<std::uint32_t, bool>> support_trace;
  /// Residues evaluated past exit_k (all must be 0).
  std::vector<std::pair<std::uint32_t, std::uint64_t>> sampled;
  bool passed = false;
};

/// Some a_i < 0 with i >= 1: the support bound eventually forces v(P(2^k)) ≡ 0.
/// When `source` is given, a few k past the exit point are evaluated as well.
PolyNullityReport poly_nullity_check(const Polynomial& p, int n_exp, std::uint32_t k_lo, std::uint32_t k_hi,
                                     ResidueSource* source = nullptr);

}  // namespace pow2comp
