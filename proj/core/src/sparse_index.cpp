#include "pow2comp/sparse_index.hpp"

#include <algorithm>
#include <functional>

#include "pow2comp/errors.hpp"

namespace pow2comp {
namespace {

// Index of the first element <= e in a strictly decreasing list.
std::size_t first_not_above(const std::vector<std::uint32_t>& xs, std::uint32_t e) {
  return static_cast<std::size_t>(
      std::lower_bound(xs.begin(), xs.end(), e, std::greater<>{}) - xs.begin());
}

}  // namespace

SparseIndex SparseIndex::from_exponents(std::vector<std::uint32_t> exponents) {
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    if (exponents[i - 1] <= exponents[i]) {
      throw DomainError("sparse index exponents must be strictly decreasing");
    }
  }
  return SparseIndex(std::move(exponents));
}

SparseIndex SparseIndex::from_natural(const Natural& n) {
  if (sgn(n) < 0) throw DomainError("sparse index of a negative integer");
  std::vector<std::uint32_t> exps;
  exps.reserve(popcount(n));
  for (std::size_t i = bit_length(n); i-- > 0;) {
    if (pow2comp::test_bit(n, i)) exps.push_back(static_cast<std::uint32_t>(i));
  }
  return SparseIndex(std::move(exps));
}

SparseIndex SparseIndex::from_u64(std::uint64_t n) {
  std::vector<std::uint32_t> exps;
  for (int i = 63; i >= 0; --i) {
    if ((n >> i) & 1U) exps.push_back(static_cast<std::uint32_t>(i));
  }
  return SparseIndex(std::move(exps));
}

SparseIndex SparseIndex::pow2_plus(std::uint32_t k, std::int64_t offset) {
  SparseIndex n = SparseIndex({k});
  if (offset >= 0) return sparse_add(n, from_u64(static_cast<std::uint64_t>(offset)));
  return sparse_sub(n, from_u64(static_cast<std::uint64_t>(-(offset + 1)) + 1));
}

bool SparseIndex::test_bit(std::uint32_t e) const {
  return std::binary_search(exps_.begin(), exps_.end(), e, std::greater<>{});
}

Natural SparseIndex::to_natural() const {
  Natural r;
  for (auto e : exps_) mpz_setbit(r.get_mpz_t(), e);
  return r;
}

std::optional<std::uint64_t> SparseIndex::to_u64() const {
  if (!exps_.empty() && exps_.front() >= 64) return std::nullopt;
  std::uint64_t r = 0;
  for (auto e : exps_) r |= std::uint64_t{1} << e;
  return r;
}

std::string SparseIndex::to_string() const {
  if (exps_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) s += '+';
    s += "2^" + std::to_string(exps_[i]);
  }
  return s;
}

std::size_t SparseIndexHash::operator()(const SparseIndex& n) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto e : n.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::size_t s2(const SparseIndex& n) { return n.bit_count(); }

SparseIndex sparse_add_pow2(const SparseIndex& n, std::uint32_t e) {
  std::vector<std::uint32_t> xs = n.exps_;
  std::size_t pos = first_not_above(xs, e);
  if (pos == xs.size() || xs[pos] != e) {
    xs.insert(xs.begin() + static_cast<std::ptrdiff_t>(pos), e);
    return SparseIndex(std::move(xs));
  }
  // Run e, e+1, ..., e+r-1 sits at indices pos, pos-1, ..., pos-r+1.
  std::size_t first = pos;
  std::uint32_t carry_to = e + 1;
  while (first > 0 && xs[first - 1] == carry_to) {
    --first;
    ++carry_to;
  }
  xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(first),
           xs.begin() + static_cast<std::ptrdiff_t>(pos) + 1);
  xs.insert(xs.begin() + static_cast<std::ptrdiff_t>(first), carry_to);
  return SparseIndex(std::move(xs));
}

SparseIndex sparse_sub_pow2(const SparseIndex& n, std::uint32_t e) {
  const auto& xs = n.exps_;
  // Smallest exponent >= e is the last element before the first one < e.
  std::size_t below = static_cast<std::size_t>(
      std::upper_bound(xs.begin(), xs.end(), e, std::greater<>{}) - xs.begin());
  if (below > 0 && xs[below - 1] == e) {
    std::vector<std::uint32_t> out = xs;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(below) - 1);
    return SparseIndex(std::move(out));
  }
  if (below == 0) throw DomainError("sparse subtraction would go negative");
  const std::uint32_t q = xs[below - 1];
  std::vector<std::uint32_t> out;
  out.reserve(xs.size() + (q - e));
  out.insert(out.end(), xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(below) - 1);
  for (std::uint32_t b = q; b-- > e;) out.push_back(b);
  out.insert(out.end(), xs.begin() + static_cast<std::ptrdiff_t>(below), xs.end());
  return SparseIndex(std::move(out));
}

SparseIndex sparse_add(const SparseIndex& a, const SparseIndex& b) {
  const SparseIndex& big = a.bit_count() >= b.bit_count() ? a : b;
  const SparseIndex& small = a.bit_count() >= b.bit_count() ? b : a;
  SparseIndex r = big;
  for (auto it = small.exponents().rbegin(); it != small.exponents().rend(); ++it) {
    r = sparse_add_pow2(r, *it);
  }
  return r;
}

SparseIndex sparse_sub(const SparseIndex& a, const SparseIndex& b) {
  if (a < b) throw DomainError("sparse subtraction would go negative");
  SparseIndex r = a;
  // Highest bits first keeps every intermediate value non-negative.
  for (auto e : b.exponents()) r = sparse_sub_pow2(r, e);
  return r;
}

bool in_support(const SparseIndex& n, int n_exp) {
  if (n_exp < 1) return false;
  const std::size_t bits = s2(sparse_add_pow2(n, static_cast<std::uint32_t>(n_exp - 1)));
  return n_exp >= 63 || bits < (std::size_t{1} << n_exp);
}

bool in_support(std::uint64_t n, int n_exp) {
  if (n_exp < 1) return false;
  const unsigned __int128 t = static_cast<unsigned __int128>(n) + (static_cast<unsigned __int128>(1) << (n_exp - 1));
  const auto lo = static_cast<std::uint64_t>(t);
  const auto hi = static_cast<std::uint64_t>(t >> 64);
  const auto bits = static_cast<std::size_t>(__builtin_popcountll(lo) + __builtin_popcountll(hi));
  return n_exp >= 63 || bits < (std::size_t{1} << n_exp);
}

}  // namespace pow2comp
