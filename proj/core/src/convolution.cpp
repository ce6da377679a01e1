#include "pow2comp/convolution.hpp"

#include <string>
#include <type_traits>

#include "pow2comp/errors.hpp"

namespace pow2comp {
namespace {

// Minimal arithmetic shim so one template serves exact and reduced tables.
struct ExactRing {
  const ExactTable& t;
  using Value = Natural;
  Value at(std::size_t i) const { return t[i]; }
  Value zero() const { return 0; }
  Value reduce(Value x) const { return x; }
  std::size_t limit() const { return t.limit(); }
};

struct ModRing {
  const ModTable& t;
  using Value = std::uint64_t;
  Value at(std::size_t i) const { return t[i]; }
  Value zero() const { return 0; }
  Value reduce(Value x) const { return x & residue_mask(t.n_exp()); }
  std::size_t limit() const { return t.limit(); }
};

template <class Ring>
typename Ring::Value mul(const Ring& ring, const typename Ring::Value& a, const typename Ring::Value& b) {
  if constexpr (std::is_same_v<typename Ring::Value, std::uint64_t>) {
    return ring.reduce(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b));
  } else {
    return a * b;
  }
}

// sum_{0 <= a < b < bound, a + b = target} v(a) v(b)
template <class Ring>
typename Ring::Value ordered_pair_sum(const Ring& ring, std::size_t target, std::size_t bound) {
  auto acc = ring.zero();
  // b = target - a > a  <=>  2a < target;  b < bound  <=>  a > target - bound.
  const std::size_t a_lo = target >= bound ? target - bound + 1 : 0;
  for (std::size_t a = a_lo; 2 * a < target; ++a) {
    acc = ring.reduce(acc + mul(ring, ring.at(a), ring.at(target - a)));
  }
  return acc;
}

template <class Ring>
typename Ring::Value even_conv(const Ring& ring, std::size_t n) {
  if (n < 1) throw DomainError("v_even_conv needs n >= 1");
  if (2 * n > ring.limit()) throw RangeError("2n beyond table limit", 2 * n);
  auto result = mul(ring, ring.at(n), ring.at(n));
  auto cross = ring.zero();
  for (std::size_t part = 2; part <= 2 * n; part <<= 1) {
    cross = ring.reduce(cross + ordered_pair_sum(ring, 2 * n - part, n));
    const std::size_t half = part / 2;  // 2^(s-1)
    if (half <= n) result = ring.reduce(result + mul(ring, ring.at(n - half), ring.at(n - half)));
  }
  return ring.reduce(result + cross + cross);
}

template <class Ring>
typename Ring::Value odd_conv(const Ring& ring, std::size_t n) {
  if (n < 1) throw DomainError("v_odd_conv needs n >= 1");
  if (2 * n - 1 > ring.limit()) throw RangeError("2n-1 beyond table limit", 2 * n - 1);
  const auto prev = ring.at(n - 1);
  const auto cur = ring.at(n);
  auto cross = ring.zero();
  for (std::size_t part = 2; part <= 2 * n - 1; part <<= 1) {
    cross = ring.reduce(cross + ordered_pair_sum(ring, 2 * n - 1 - part, n - 1));
  }
  const auto pc = mul(ring, prev, cur);
  const auto pp = mul(ring, prev, prev);
  // 2 v(n-1) v(n) >= v(n-1)^2 in Z since v(n) >= v(n-1); for residues wrap modulo 2^N.
  return ring.reduce(pc + pc + cross + cross - pp);
}

}  // namespace

Natural v_even_conv(std::size_t n, const ExactTable& table) { return even_conv(ExactRing{table}, n); }
std::uint64_t v_even_conv(std::size_t n, const ModTable& table) { return even_conv(ModRing{table}, n); }
Natural v_odd_conv(std::size_t n, const ExactTable& table) { return odd_conv(ExactRing{table}, n); }
std::uint64_t v_odd_conv(std::size_t n, const ModTable& table) { return odd_conv(ModRing{table}, n); }

bool square_lift_holds(const Natural& u, const Natural& v, int n_exp) {
  if (n_exp < 1) throw DomainError("square lift needs N >= 1");
  const Natural diff = u - v;
  Natural r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), diff.get_mpz_t(), static_cast<mp_bitcnt_t>(n_exp));
  if (sgn(r) != 0) return true;  // hypothesis false, implication vacuous
  const Natural sq_diff = u * u - v * v;
  mpz_fdiv_r_2exp(r.get_mpz_t(), sq_diff.get_mpz_t(), static_cast<mp_bitcnt_t>(n_exp + 1));
  return sgn(r) == 0;
}

}  // namespace pow2comp
