#pragma once

#include <cstdint>
#include <string>

#include "pow2comp/errors.hpp"

namespace pow2comp {

inline constexpr int kMaxModExp = 62;

constexpr std::uint64_t residue_mask(int n_exp) {
  return n_exp >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_exp) - 1;
}

inline void check_mod_exp(int n_exp) {
  if (n_exp < 1 || n_exp > kMaxModExp) {
    throw DomainError("modulus exponent must lie in [1, 62], got " + std::to_string(n_exp));
  }
}

/// A value of v(n) reduced modulo 2^n_exp.
class Residue {
 public:
  Residue() = default;
  Residue(std::uint64_t value, int n_exp) : n_exp_(n_exp), value_(value & residue_mask(n_exp)) {
    check_mod_exp(n_exp);
  }

  int n_exp() const noexcept { return n_exp_; }
  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return std::uint64_t{1} << n_exp_; }

  /// The same residue seen modulo a coarser power 2^lower.
  Residue reduce(int lower) const {
    if (lower > n_exp_) throw DomainError("cannot refine a residue to a finer modulus");
    return Residue(value_, lower);
  }

  /// Fixed-width binary digits, most significant first.
  std::string binary() const {
    std::string s(static_cast<std::size_t>(n_exp_), '0');
    for (int i = 0; i < n_exp_; ++i) {
      if ((value_ >> i) & 1U) s[static_cast<std::size_t>(n_exp_ - 1 - i)] = '1';
    }
    return s;
  }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  int n_exp_ = 1;
  std::uint64_t value_ = 0;
};

}  // namespace pow2comp
