#include "pow2comp/halving_eval.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmp.h>

namespace pow2comp {
namespace {

using u128 = unsigned __int128;

constexpr std::size_t kWideLimitBits = 120;

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <class Int>
struct Ops;

template <>
struct Ops<u128> {
  static std::size_t bit_length(const u128& x) {
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    if (hi != 0) return 128 - static_cast<std::size_t>(std::countl_zero(hi));
    return 64 - static_cast<std::size_t>(std::countl_zero(static_cast<std::uint64_t>(x)));
  }
  static std::size_t popcount(const u128& x) {
    return static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(x)) +
                                    std::popcount(static_cast<std::uint64_t>(x >> 64)));
  }
  static u128 pow2(std::size_t e) { return u128{1} << e; }
  static bool is_zero(const u128& x) { return x == 0; }
  static bool is_odd(const u128& x) { return (x & 1) != 0; }
  static void set_bits(const u128& x, std::vector<std::uint32_t>& out) {
    out.clear();
    for (u128 y = x; y != 0; y &= y - 1) {
      const auto lo = static_cast<std::uint64_t>(y);
      out.push_back(lo != 0 ? static_cast<std::uint32_t>(std::countr_zero(lo))
                            : 64U + static_cast<std::uint32_t>(
                                        std::countr_zero(static_cast<std::uint64_t>(y >> 64))));
    }
  }
  struct Hash {
    std::size_t operator()(const u128& x) const noexcept {
      return mix64(static_cast<std::uint64_t>(x) ^ mix64(static_cast<std::uint64_t>(x >> 64)));
    }
  };
};

template <>
struct Ops<Natural> {
  static std::size_t bit_length(const Natural& x) { return pow2comp::bit_length(x); }
  static std::size_t popcount(const Natural& x) { return pow2comp::popcount(x); }
  static Natural pow2(std::size_t e) { return pow2comp::pow2(e); }
  static bool is_zero(const Natural& x) { return sgn(x) == 0; }
  static bool is_odd(const Natural& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }
  static void set_bits(const Natural& x, std::vector<std::uint32_t>& out) {
    out.clear();
    if (sgn(x) == 0) return;
    for (mp_bitcnt_t i = mpz_scan1(x.get_mpz_t(), 0); i != ~mp_bitcnt_t{0};
         i = mpz_scan1(x.get_mpz_t(), i + 1)) {
      out.push_back(static_cast<std::uint32_t>(i));
    }
  }
  struct Hash {
    std::size_t operator()(const Natural& x) const noexcept {
      const mpz_srcptr z = x.get_mpz_t();
      std::uint64_t h = 0x243f6a8885a308d3ULL;
      for (std::size_t i = 0; i < mpz_size(z); ++i) h = mix64(h ^ mpz_getlimbn(z, i));
      return h;
    }
  };
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mask) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b) & mask;
}

template <class Int>
class Core {
  using O = Ops<Int>;

 public:
  Core(std::size_t budget, bool evict, const std::size_t* shared_size, std::size_t* own_size)
      : budget_(budget), evict_(evict), other_size_(shared_size), own_size_(own_size) {}

  std::uint64_t value(const Int& n, int j) {
    if (j <= 0) return 0;
    if (O::is_zero(n)) return 1;
    if (j == 1) return O::popcount(n + Int(1)) == 1 ? 1 : 0;
    if (!supported(n, j)) return 0;
    auto& memo = memo_at(j);
    if (auto it = memo.find(n); it != memo.end()) return it->second;

    const std::uint64_t mask = residue_mask(j);
    const std::size_t len = O::bit_length(n);
    std::uint64_t r = 0;
    std::uint64_t cross = 0;
    if (!O::is_odd(n)) {
      const Int m = n >> 1;
      r = square(value(m, j - 1), mask);
      for (std::size_t e = 0; e + 1 < len; ++e) {
        r = (r + square(value(m - O::pow2(e), j - 1), mask)) & mask;
      }
      for (std::size_t s = 1; s < len; ++s) {
        cross = (cross + pair_sum(n - O::pow2(s), m, j - 1)) & mask;
      }
    } else {
      const Int low = n >> 1;  // n = 2*low + 1
      const Int high = low + Int(1);
      const std::uint64_t a = value(low, j - 1);
      const std::uint64_t b = value(high, j - 1);
      r = (2 * mul_mod(a, b, mask) + (mask + 1 - square(a, mask))) & mask;
      for (std::size_t s = 1; s < len; ++s) {
        cross = (cross + pair_sum(n - O::pow2(s), low, j - 1)) & mask;
      }
    }
    r = (r + 2 * cross) & mask;

    if (*own_size_ + *other_size_ >= budget_) {
      if (!evict_) throw BudgetError(*own_size_ + *other_size_);
      clear();  // no iterators into the memo are live here
    }
    memo_at(j).emplace(n, r);
    ++*own_size_;
    return r;
  }

  void clear() {
    memo_.clear();
    *own_size_ = 0;
  }

 private:
  using Memo = std::unordered_map<Int, std::uint64_t, typename O::Hash>;

  Memo& memo_at(int j) {
    if (memo_.size() <= static_cast<std::size_t>(j)) memo_.resize(static_cast<std::size_t>(j) + 1);
    return memo_[static_cast<std::size_t>(j)];
  }

  // Exact for u known mod 2^(j-1): (u + t 2^(j-1))^2 = u^2 mod 2^j.
  static std::uint64_t square(std::uint64_t u, std::uint64_t mask) { return mul_mod(u, u, mask); }

  static bool supported(const Int& n, int j) {
    if (O::bit_length(n) + 1 < (std::size_t{1} << static_cast<unsigned>(j))) return true;
    return O::popcount(n + O::pow2(static_cast<std::size_t>(j - 1))) <
           (std::size_t{1} << static_cast<unsigned>(j));
  }

  // Sum of v(a) v(b) mod 2^p over 0 <= a < b < bound, a + b = k.
  //
  // A pair is charged to the least alpha with a in the level-(alpha+1) support
  // (every a with v(a) odd-free enough lies in some such level). For that alpha,
  // v(b) only matters mod 2^(p-alpha-1), so b lies in the level-(p-alpha)
  // support. Both memberships are popcount bounds on a + 2^alpha and
  // b + 2^(p-alpha-1), whose sum is fixed, so the candidates come from a
  // constrained split of that sum.
  std::uint64_t pair_sum(const Int& k, const Int& bound, int p) {
    if (p <= 0) return 0;
    const std::uint64_t mask = residue_mask(p);
    std::uint64_t total = 0;
    for (int alpha = 0; alpha < p; ++alpha) {
      const auto shift_a = static_cast<std::size_t>(alpha);
      const auto shift_b = static_cast<std::size_t>(p - alpha - 1);
      const Int off_a = O::pow2(shift_a);
      const Int off_b = O::pow2(shift_b);
      const Int target = k + off_a + off_b;
      const std::size_t cap_x = budget_bits(alpha + 1);
      const std::size_t cap_y = budget_bits(p - alpha);
      split(target, cap_x, cap_y, [&](const Int& x, const Int& y) {
        if (x < off_a || y < off_b) return;
        const Int a = x - off_a;
        const Int b = y - off_b;
        if (!(a < b) || !(b < bound)) return;
        if (alpha >= 1 && supported(a, alpha)) return;  // charged to a smaller alpha
        const std::uint64_t va = value(a, p);
        if (va == 0) return;
        total = (total + mul_mod(va, value(b, p), mask)) & mask;
      });
    }
    return total;
  }

  // 2^level - 1, saturated.
  static std::size_t budget_bits(int level) {
    return level >= 40 ? (std::size_t{1} << 40) : (std::size_t{1} << level) - 1;
  }

  // All (x, y) with x + y = target, popcount(x) <= cap_x, popcount(y) <= cap_y.
  template <class F>
  void split(const Int& target, std::size_t cap_x, std::size_t cap_y, F&& emit) {
    O::set_bits(target, bits_);
    const std::size_t pc = bits_.size();
    if (pc > cap_x + cap_y) return;
    if (cap_x == 1 || cap_y == 1) {
      const bool x_single = cap_x == 1;
      split_single(target, x_single ? cap_y : cap_x, [&](const Int& single, const Int& rest) {
        if (x_single) {
          emit(single, rest);
        } else {
          emit(rest, single);
        }
      });
      // x or y == 0 with the other taking everything.
      if (x_single && pc <= cap_y) emit(Int(0), target);
      if (!x_single && pc <= cap_x) emit(target, Int(0));
      return;
    }
    const std::size_t width = O::bit_length(target);
    std::vector<std::uint8_t> tbit(width + 1, 0);
    for (auto e : bits_) tbit[e] = 1;
    std::vector<std::uint32_t> suffix_pc(width + 2, 0);
    std::vector<std::uint32_t> next_one(width + 2, static_cast<std::uint32_t>(width + 1));
    for (std::size_t i = width + 1; i-- > 0;) {
      suffix_pc[i] = suffix_pc[i + 1] + (i < width ? tbit[i] : 0);
      next_one[i] = (i < width && tbit[i]) ? static_cast<std::uint32_t>(i) : next_one[i + 1];
    }
    Walk<F> walk{tbit, suffix_pc, next_one, width, emit, {}, {}};
    walk.run(0, 0, cap_x, cap_y);
  }

  // Carry-propagating split of the target, least significant bit first.
  template <class F>
  struct Walk {
    const std::vector<std::uint8_t>& tbit;
    const std::vector<std::uint32_t>& suffix_pc;
    const std::vector<std::uint32_t>& next_one;
    std::size_t width;
    F& emit;
    std::vector<std::uint32_t> xs;
    std::vector<std::uint32_t> ys;

    void run(std::size_t i, unsigned carry, std::size_t rx, std::size_t ry) {
      if (carry == 0 && suffix_pc[i] == 0) {
        Int x(0);
        Int y(0);
        for (auto e : xs) x += O::pow2(e);
        for (auto e : ys) y += O::pow2(e);
        emit(x, y);
        return;
      }
      if (i >= width) return;
      // popcount of (target >> i) - carry bounds the ones still needed.
      std::size_t need = suffix_pc[i];
      if (carry != 0) {
        if (suffix_pc[i] == 0) return;
        need = suffix_pc[i] - 1 + (next_one[i] - i);
      }
      if (need > rx + ry) return;
      const unsigned t = tbit[i];
      static constexpr unsigned kChoices[4][2] = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
      for (const auto& c : kChoices) {
        const unsigned sum = c[0] + c[1] + carry;
        if ((sum & 1U) != t) continue;
        if (c[0] > rx || c[1] > ry) continue;
        if (c[0]) xs.push_back(static_cast<std::uint32_t>(i));
        if (c[1]) ys.push_back(static_cast<std::uint32_t>(i));
        run(i + 1, sum >> 1, rx - c[0], ry - c[1]);
        if (c[0]) xs.pop_back();
        if (c[1]) ys.pop_back();
      }
    }
  };

  // Pairs (2^u, target - 2^u) with popcount(target - 2^u) <= cap.
  // Subtracting 2^u clears bit u if set; otherwise it borrows from the next
  // set bit q above u and sets bits u..q-1.
  template <class F>
  void split_single(const Int& target, std::size_t cap, F&& emit) {
    const std::vector<std::uint32_t> bits = bits_;
    const std::size_t pc = bits.size();
    if (pc == 0) return;
    if (pc - 1 <= cap) {
      for (auto u : bits) emit(O::pow2(u), target - O::pow2(u));
    }
    if (pc > cap + 1) return;
    const std::size_t reach = cap + 1 - pc;  // q - u <= reach
    for (std::size_t idx = 0; idx < bits.size(); ++idx) {
      const std::uint32_t q = bits[idx];
      const std::uint32_t floor = idx == 0 ? 0 : bits[idx - 1] + 1;
      for (std::size_t d = 1; d <= reach && q >= floor + d; ++d) {
        const auto u = static_cast<std::uint32_t>(q - d);
        emit(O::pow2(u), target - O::pow2(u));
      }
    }
  }

  std::size_t budget_;
  bool evict_;
  const std::size_t* other_size_;
  std::size_t* own_size_;
  std::vector<Memo> memo_;
  std::vector<std::uint32_t> bits_;
};

}  // namespace

struct HalvingEvaluator::Impl {
  Impl(std::size_t budget, bool evict)
      : wide(budget, evict, &big_size, &wide_size), big(budget, evict, &wide_size, &big_size) {}
  std::size_t wide_size = 0;
  std::size_t big_size = 0;
  Core<u128> wide;
  Core<Natural> big;
};

HalvingEvaluator::HalvingEvaluator(std::size_t budget, bool evict_when_full)
    : impl_(std::make_unique<Impl>(budget, evict_when_full)) {
  if (budget == 0) throw DomainError("halving evaluator budget must be positive");
}
HalvingEvaluator::~HalvingEvaluator() = default;
HalvingEvaluator::HalvingEvaluator(HalvingEvaluator&&) noexcept = default;
HalvingEvaluator& HalvingEvaluator::operator=(HalvingEvaluator&&) noexcept = default;

Residue HalvingEvaluator::residue(const Natural& n, int n_exp) {
  check_mod_exp(n_exp);
  if (sgn(n) < 0) throw DomainError("negative index");
  if (bit_length(n) <= kWideLimitBits) {
    u128 w = 0;
    const mpz_srcptr z = n.get_mpz_t();
    for (std::size_t i = mpz_size(z); i-- > 0;) {
      w = (w << (8 * sizeof(mp_limb_t))) | mpz_getlimbn(z, static_cast<mp_size_t>(i));
    }
    return Residue(impl_->wide.value(w, n_exp), n_exp);
  }
  return Residue(impl_->big.value(n, n_exp), n_exp);
}

Residue HalvingEvaluator::residue(const SparseIndex& n, int n_exp) {
  check_mod_exp(n_exp);
  if (n.is_zero() || n.top() < kWideLimitBits) {
    u128 w = 0;
    for (auto e : n.exponents()) w |= u128{1} << e;
    return Residue(impl_->wide.value(w, n_exp), n_exp);
  }
  return Residue(impl_->big.value(n.to_natural(), n_exp), n_exp);
}

Residue HalvingEvaluator::residue(std::uint64_t n, int n_exp) {
  check_mod_exp(n_exp);
  return Residue(impl_->wide.value(u128{n}, n_exp), n_exp);
}

std::size_t HalvingEvaluator::memo_size() const noexcept {
  return impl_->wide_size + impl_->big_size;
}

void HalvingEvaluator::clear() {
  impl_->wide.clear();
  impl_->big.clear();
}

}  // namespace pow2comp
