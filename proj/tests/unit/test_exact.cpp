#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pow2comp/convolution.hpp"
#include "pow2comp/errors.hpp"
#include "pow2comp/exact.hpp"

using namespace pow2comp;

TEST(ExactTable, SmallExamples) {
  EXPECT_EQ(build_exact_table(0).limit(), 0U);
  EXPECT_EQ(build_exact_table(0)[0], 1);
  const auto t = build_exact_table(72);
  EXPECT_EQ(t[1], 1);
  EXPECT_EQ(t[2], 2);
  EXPECT_EQ(t[7], 31);
  EXPECT_EQ(v_exact(3, t), 3);
  EXPECT_EQ(v_exact(24, t), 499590);
  EXPECT_EQ(t[72], Natural("362129691668018062"));
}

TEST(ExactTable, MatchesReferenceValues) {
  const auto rows = oracle::reference_values();
  ASSERT_EQ(rows.size(), 72U);
  const auto t = build_exact_table(72);
  for (const auto& row : rows) {
    EXPECT_EQ(t[row.n], Natural(row.value)) << row.n;
    const std::uint64_t low = low_bits(t[row.n], 6);
    std::string bits(6, '0');
    for (int i = 0; i < 6; ++i) {
      if ((low >> i) & 1U) bits[5 - i] = '1';
    }
    EXPECT_EQ(bits, row.mod64) << row.n;
  }
}

TEST(ExactTable, MatchesNaiveRecurrence) {
  const auto expected = oracle::compositions_big(2000);
  const auto t = build_exact_table(2000);
  for (std::size_t n = 0; n <= 2000; ++n) ASSERT_EQ(t[n], expected[n]) << n;
}

TEST(ExactTable, RangeAndCapacity) {
  const auto t = build_exact_table(10);
  EXPECT_THROW(v_exact(11, t), RangeError);
  EXPECT_THROW(build_exact_table(101, 100), CapacityError);
  try {
    build_exact_table(kDefaultExactCap + 1);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.cap(), kDefaultExactCap);
  }
}

TEST(ExactTable, ParityLaw) {
  const auto t = build_exact_table(3000);
  for (std::size_t n = 1; n <= 3000; ++n) {
    const bool odd = mpz_odd_p(t[n].get_mpz_t()) != 0;
    const bool mersenne = ((n + 1) & n) == 0;
    ASSERT_EQ(odd, mersenne) << n;
  }
}

TEST(ExactTable, StrictlyIncreasing) {
  const auto t = build_exact_table(1000);
  for (std::size_t n = 1; n < 1000; ++n) ASSERT_GT(t[n + 1], t[n]) << n;
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_v(0), 1);
  EXPECT_EQ(brute_force_v(3), 3);
  EXPECT_EQ(brute_force_v(14), 1690);
  EXPECT_THROW(brute_force_v(26), CapacityError);
}

TEST(BruteForce, AgreesWithTable) {
  const auto t = build_exact_table(25);
  for (unsigned n = 0; n <= 25; ++n) EXPECT_EQ(brute_force_v(n), t[n]) << n;
}

TEST(SumIdentity, Examples) {
  const auto t = build_exact_table(20);
  EXPECT_TRUE(check_sum_identity(1, 5, t));
  EXPECT_TRUE(check_sum_identity(4, 4, t));
  EXPECT_TRUE(check_sum_identity(3, 7, t));
  EXPECT_EQ(sum_identity_rhs(3, 7, t), t[10]);
  // m = 1 collapses to the first-part recurrence
  EXPECT_EQ(sum_identity_rhs(1, 5, t), t[5] + t[4] + t[2]);
}

TEST(SumIdentity, AllPairsUpTo300) {
  const auto t = build_exact_table(300);
  for (std::size_t m = 1; m < 300; ++m) {
    for (std::size_t n = 1; m + n <= 300; ++n) ASSERT_TRUE(check_sum_identity(m, n, t)) << m << "," << n;
  }
}

TEST(Convolution, ExactExamples) {
  const auto t = build_exact_table(400);
  EXPECT_EQ(v_even_conv(8, t), 5272);
  EXPECT_EQ(v_even_conv(1, t), 2);
  EXPECT_EQ(v_even_conv(100, t), t[200]);
  EXPECT_EQ(v_odd_conv(4, t), 31);
  EXPECT_EQ(v_odd_conv(1, t), 1);
  EXPECT_EQ(v_odd_conv(150, t), t[299]);
}

TEST(Convolution, ExactUpTo400) {
  const auto t = build_exact_table(400);
  for (std::size_t n = 1; 2 * n <= 400; ++n) {
    ASSERT_EQ(v_even_conv(n, t), t[2 * n]) << n;
    ASSERT_EQ(v_odd_conv(n, t), t[2 * n - 1]) << n;
  }
}

TEST(Convolution, RangeErrors) {
  const auto t = build_exact_table(20);
  EXPECT_THROW(v_even_conv(11, t), RangeError);
  EXPECT_THROW(v_odd_conv(11, t), RangeError);
}

TEST(SquareLift, Examples) {
  EXPECT_TRUE(square_lift_holds(3, 7, 2));
  EXPECT_TRUE(square_lift_holds(12345, 12345, 9));
  EXPECT_TRUE(square_lift_holds(3, 4, 3));  // hypothesis fails
}

TEST(SquareLift, RandomTriples) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10000; ++i) {
    const int n_exp = 1 + static_cast<int>(rng() % 40);
    const Natural u = from_u64(rng());
    const Natural k = from_u64(rng() % 1000);
    const Natural v = u + k * pow2(static_cast<std::size_t>(n_exp));
    ASSERT_TRUE(square_lift_holds(u, v, n_exp));
    // the square lift gains exactly one bit, not two
    const Natural w = u + pow2(static_cast<std::size_t>(n_exp));
    const Natural diff = w * w - u * u;
    ASSERT_EQ(low_bits(diff, n_exp + 1), 0U);
  }
}
