#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pow2comp/errors.hpp"
#include "pow2comp/exact.hpp"
#include "pow2comp/partition.hpp"

using namespace pow2comp;

namespace {

int ones_parity(std::uint64_t n) { return __builtin_popcountll(n) & 1; }

int pair_parity(std::uint64_t n) {
  int count = 0;
  for (; n; n >>= 1) count += ((n & 3U) == 3U) ? 1 : 0;
  return count & 1;
}

}  // namespace

TEST(PartitionTable, Examples) {
  const auto b = build_partition_table(20);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[1], 1);
  EXPECT_EQ(b[6], 6);
  EXPECT_EQ(b[8], 10);
  EXPECT_EQ(b[10], 14);
  EXPECT_EQ(b[12], 20);
  EXPECT_EQ(b[14], 26);
  EXPECT_THROW(b.at(21), RangeError);
  EXPECT_THROW(build_partition_table(11, 10), CapacityError);
}

TEST(PartitionTable, BruteForce) {
  const auto b = build_partition_table(60);
  for (unsigned n = 0; n <= 60; ++n) EXPECT_EQ(brute_force_b(n), b[n]) << n;
  EXPECT_THROW(brute_force_b(61), CapacityError);
}

TEST(PartitionTable, CoinChangeOracle) {
  const auto expected = oracle::binary_partitions(5000);
  const auto b = build_partition_table(5000);
  for (std::size_t n = 0; n <= 5000; ++n) ASSERT_EQ(b[n], expected[n]) << n;
}

TEST(PartitionTable, BoundedByCompositions) {
  const auto b = build_partition_table(5000);
  const auto v = build_exact_table(5000);
  for (std::size_t n = 0; n <= 5000; ++n) ASSERT_LE(b[n], v[n]) << n;
}

TEST(RodsethGupta, Mu) {
  EXPECT_EQ(mu(1), 3);
  EXPECT_EQ(mu(2), 5);
  for (int s = 1; s <= 20; ++s) EXPECT_EQ(mu(s + 2), mu(s) + 3);
  EXPECT_THROW(mu(0), DomainError);
}

TEST(RodsethGupta, DivisibleAndExact) {
  const auto b = build_partition_table(256 * 201);
  for (int s = 1; s <= 6; ++s) {
    const auto report = rodseth_gupta_check(s, 201, b);
    EXPECT_TRUE(report.passed()) << "s=" << s;
    EXPECT_EQ(report.mu, mu(s));
    EXPECT_EQ(report.checked, 101U);
    ASSERT_TRUE(report.witness.has_value());
    const Natural diff = b[(std::size_t{1} << (s + 2)) * *report.witness] - b[(std::size_t{1} << s) * *report.witness];
    EXPECT_EQ(two_adic_valuation(diff), static_cast<std::size_t>(mu(s)));
  }
  const Natural d = b[32] - b[8];
  EXPECT_GE(two_adic_valuation(d), 6U);
}

TEST(RodsethGupta, TableTooSmall) {
  const auto b = build_partition_table(1000);
  EXPECT_THROW(rodseth_gupta_check(6, 201, b), RangeError);
}

TEST(AutomaticSequences, Examples) {
  EXPECT_EQ(thue_morse(0), 0);
  EXPECT_EQ(thue_morse(1), 1);
  EXPECT_EQ(thue_morse(3), 0);
  EXPECT_EQ(rudin_shapiro(0), 0);
  EXPECT_EQ(rudin_shapiro(3), 1);
  EXPECT_EQ(rudin_shapiro(7), 0);
  EXPECT_EQ(thue_morse(pow2(200) + 1), 0);
  EXPECT_EQ(rudin_shapiro(pow2(200) + pow2(199)), 1);
}

TEST(AutomaticSequences, DefinitionsAndRecursions) {
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    ASSERT_EQ(thue_morse(n), ones_parity(n));
    ASSERT_EQ(rudin_shapiro(n), pair_parity(n));
    ASSERT_EQ(thue_morse(2 * n), thue_morse(n));
    ASSERT_EQ(thue_morse(2 * n + 1), 1 - thue_morse(n));
    ASSERT_EQ(rudin_shapiro(2 * n), rudin_shapiro(n));
    ASSERT_EQ(rudin_shapiro(4 * n + 1), rudin_shapiro(n));
    ASSERT_EQ(rudin_shapiro(4 * n + 3), 1 - rudin_shapiro(2 * n + 1));
    ASSERT_EQ(thue_morse(from_u64(n)), thue_morse(n));
    ASSERT_EQ(rudin_shapiro(from_u64(n)), rudin_shapiro(n));
  }
}

TEST(ModThirtyTwo, Examples) {
  const auto b = build_partition_table(100);
  EXPECT_TRUE(b_mod32_formula_check(0, b));
  EXPECT_TRUE(b_mod32_formula_check(2, b));
  EXPECT_TRUE(b_mod32_formula_check(3, b));
  EXPECT_THROW(b_mod32_formula_check(25, b), RangeError);
}

TEST(ModThirtyTwo, HoldsUpTo100000) {
  const auto b = build_partition_table(400'002);
  for (std::uint64_t n = 0; n <= 100'000; ++n) ASSERT_TRUE(b_mod32_formula_check(n, b)) << n;
}
