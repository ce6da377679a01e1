#pragma once

// Reference implementations for tests. Deliberately naive and independent of
// the library's own tables and evaluators.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using u128 = unsigned __int128;

inline std::string to_string(u128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  return s;
}

// Compositions into powers of two counted by the last part. Fits 128 bits up to n ~ 150.
inline std::vector<u128> compositions(std::size_t limit) {
  std::vector<u128> v(limit + 1, 0);
  v[0] = 1;
  for (std::size_t n = 1; n <= limit; ++n) {
    for (std::size_t part = 1; part <= n; part *= 2) v[n] += v[n - part];
  }
  return v;
}

// Same count, reduced mod 2^bits as it goes.
inline std::vector<std::uint64_t> compositions_mod(std::size_t limit, int bits) {
  const std::uint64_t mask = bits >= 64 ? ~0ULL : (1ULL << bits) - 1;
  std::vector<std::uint64_t> v(limit + 1, 0);
  v[0] = 1;
  for (std::size_t n = 1; n <= limit; ++n) {
    std::uint64_t s = 0;
    for (std::size_t part = 1; part <= n; part *= 2) s += v[n - part];
    v[n] = s & mask;
  }
  return v;
}

// Exact compositions as GMP integers.
inline std::vector<mpz_class> compositions_big(std::size_t limit) {
  std::vector<mpz_class> v(limit + 1, 0);
  v[0] = 1;
  for (std::size_t n = 1; n <= limit; ++n) {
    for (std::size_t part = 1; part <= n; part *= 2) v[n] += v[n - part];
  }
  return v;
}

// Partitions into powers of two, by the coin-change recurrence over parts.
inline std::vector<mpz_class> binary_partitions(std::size_t limit) {
  std::vector<mpz_class> b(limit + 1, 0);
  b[0] = 1;
  for (std::size_t part = 1; part <= limit; part *= 2) {
    for (std::size_t n = part; n <= limit; ++n) b[n] += b[n - part];
  }
  return b;
}

struct ReferenceRow {
  unsigned n;
  std::string value;
  std::string mod64;
};

inline std::vector<ReferenceRow> reference_values() {
  std::ifstream in(std::string(POW2COMP_TEST_DATA_DIR) + "/reference_values.txt");
  if (!in) throw std::runtime_error("missing reference_values.txt");
  std::vector<ReferenceRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    ReferenceRow row;
    fields >> row.n >> row.value >> row.mod64;
    rows.push_back(row);
  }
  return rows;
}

inline int popcount(u128 x) {
  return __builtin_popcountll(static_cast<std::uint64_t>(x)) + __builtin_popcountll(static_cast<std::uint64_t>(x >> 64));
}

}  // namespace oracle
