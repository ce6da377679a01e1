#include "pow2comp/natural.hpp"

#include <cmath>

#include "pow2comp/errors.hpp"

namespace pow2comp {

std::size_t bit_length(const Natural& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t popcount(const Natural& x) { return mpz_popcount(x.get_mpz_t()); }

bool test_bit(const Natural& x, std::size_t i) {
  return mpz_tstbit(x.get_mpz_t(), static_cast<mp_bitcnt_t>(i)) != 0;
}

Natural pow2(std::size_t e) {
  Natural r;
  mpz_setbit(r.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  return r;
}

std::size_t two_adic_valuation(const Natural& x) {
  if (sgn(x) == 0) throw DomainError("2-adic valuation of zero is infinite");
  return mpz_scan1(x.get_mpz_t(), 0);
}

std::uint64_t low_bits(const Natural& x, int bits) {
  Natural r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return to_u64(r);
}

bool fits_u64(const Natural& x) { return sgn(x) >= 0 && bit_length(x) <= 64; }

std::uint64_t to_u64(const Natural& x) {
  if (!fits_u64(x)) throw DomainError("value does not fit in 64 bits");
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return count == 0 ? 0 : out;
}

Natural from_u64(std::uint64_t x) {
  Natural r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
  return r;
}

Natural parse_natural(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer");
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("not a non-negative decimal integer: " + std::string(text));
  }
  return Natural(std::string(text), 10);
}

double log_natural(const Natural& x) {
  if (sgn(x) <= 0) throw DomainError("log of a non-positive integer");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace pow2comp
