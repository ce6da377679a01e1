#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "oracles.hpp"
#include "pow2comp/auto_source.hpp"
#include "pow2comp/errors.hpp"
#include "pow2comp/halving_eval.hpp"
#include "pow2comp/index_spec.hpp"
#include "pow2comp/mod_table.hpp"
#include "pow2comp/residue_source.hpp"
#include "pow2comp/sparse_eval.hpp"
#include "pow2comp/table_synth.hpp"

using namespace pow2comp;

namespace {

const std::vector<std::uint64_t>& dense62() {
  static const auto values = oracle::compositions_mod(100'000, 62);
  return values;
}

std::uint64_t expected(std::uint64_t n, int n_exp) { return dense62()[n] & residue_mask(n_exp); }

}  // namespace

TEST(SparseEvaluator, Examples) {
  EXPECT_EQ(v_mod_sparse(SparseIndex::from_exponents({20}), 4).value(), 8U);
  // s2(0b1110111 + 2) = s2(0b1111001) = 5 >= 4
  EXPECT_EQ(v_mod_sparse(SparseIndex::from_u64(0b1110111), 2).value(), 0U);
  EXPECT_EQ(v_mod_sparse(SparseIndex::from_u64(100'000), 5).value(), expected(100'000, 5));
  EXPECT_EQ(v_mod_sparse(SparseIndex{}, 3).value(), 1U);
}

TEST(SparseEvaluator, AgreesWithDenseSampled) {
  for (int n_exp = 1; n_exp <= 6; ++n_exp) {
    SparseEvaluator eval(n_exp);
    for (std::uint64_t n = 0; n <= 100'000; n += (n_exp <= 3 ? 1 : 7)) {
      ASSERT_EQ(eval.evaluate(SparseIndex::from_u64(n)).value(), expected(n, n_exp)) << n << " N=" << n_exp;
    }
  }
}

TEST(SparseEvaluator, CoarserResidue) {
  SparseEvaluator eval(5);
  EXPECT_EQ(eval.residue(SparseIndex::from_u64(49), 3), Residue(28, 3));
  EXPECT_THROW(eval.residue(SparseIndex::from_u64(49), 6), DomainError);
}

TEST(SparseEvaluator, BudgetExhaustion) {
  try {
    v_mod_sparse(SparseIndex::from_u64(90'000), 5, 10);
    FAIL() << "expected BudgetError";
  } catch (const BudgetError& e) {
    EXPECT_GE(e.memo_size(), 10U);
  }
  EXPECT_THROW(SparseEvaluator(3, 0), DomainError);
}

TEST(SparseEvaluator, PowersOfTwo) {
  for (std::uint32_t k : {3U, 10U, 16U}) {
    EXPECT_EQ(v_mod_sparse(SparseIndex::from_exponents({k}), 4).value(), 8U) << k;
  }
  EXPECT_EQ(v_mod_sparse(SparseIndex::from_exponents({70}), 2).value(), 0U);
}

TEST(HalvingEvaluator, AgreesWithDense) {
  HalvingEvaluator eval;
  for (int n_exp = 1; n_exp <= 6; ++n_exp) {
    for (std::uint64_t n = 0; n <= 5000; ++n) {
      ASSERT_EQ(eval.residue(n, n_exp).value(), expected(n, n_exp)) << n << " N=" << n_exp;
    }
  }
  for (std::uint64_t n = 0; n <= 100'000; n += 13) {
    ASSERT_EQ(eval.residue(n, 4).value(), expected(n, 4)) << n;
  }
}

TEST(HalvingEvaluator, OverloadsAgree) {
  HalvingEvaluator eval;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = rng() % 100'000;
    const auto a = eval.residue(n, 5);
    EXPECT_EQ(eval.residue(from_u64(n), 5), a);
    EXPECT_EQ(eval.residue(SparseIndex::from_u64(n), 5), a);
  }
}

TEST(HalvingEvaluator, AgreesWithSparseBeyondDenseRange) {
  HalvingEvaluator halving;
  // The first-part recursion only stays small for low moduli and few binary ones.
  for (const auto& [n_exp, k] : {std::pair{2, 40U}, std::pair{2, 70U}, std::pair{3, 22U}}) {
    SparseEvaluator sparse(n_exp);
    for (std::int64_t a = -6; a <= 6; ++a) {
      const auto n = SparseIndex::pow2_plus(k, a);
      ASSERT_EQ(halving.residue(n, n_exp), sparse.evaluate(n)) << n.to_string();
    }
    const auto three_terms = SparseIndex::from_exponents({k, k / 2, 1});
    ASSERT_EQ(halving.residue(three_terms, n_exp), sparse.evaluate(three_terms)) << three_terms.to_string();
  }
}

TEST(HalvingEvaluator, BudgetAndEviction) {
  HalvingEvaluator tight(50);
  EXPECT_THROW(tight.residue(parse_index_spec("2^300+2^150+2^70-3"), 4), BudgetError);
  HalvingEvaluator evicting(50, true);
  HalvingEvaluator roomy;
  const auto n = parse_index_spec("2^300+2^150+2^70-3");
  EXPECT_EQ(evicting.residue(n, 4), roomy.residue(n, 4));
  EXPECT_LE(evicting.memo_size(), 200U);
  roomy.clear();
  EXPECT_EQ(roomy.memo_size(), 0U);
  EXPECT_THROW(HalvingEvaluator(0), DomainError);
}

TEST(HalvingEvaluator, PowersOfTwo) {
  HalvingEvaluator eval;
  for (std::uint32_t k : {3U, 4U, 100U, 500U, 1000U}) {
    EXPECT_EQ(eval.residue(SparseIndex::from_exponents({k}), 4).value(), 8U) << k;
  }
  for (std::uint32_t k : {8U, 9U, 64U, 130U}) {
    EXPECT_EQ(eval.residue(SparseIndex::from_exponents({k}), 5).value(), 8U) << k;
  }
}

TEST(DenseSource, LookupAndErrors) {
  auto table = std::make_shared<const ModTable>(build_mod_table(1000, 5));
  DenseSource source(table);
  EXPECT_EQ(source.residue(SparseIndex::from_u64(49), 5).value(), 28U);
  EXPECT_EQ(source.residue(SparseIndex::from_u64(49), 2).value(), 0U);
  EXPECT_THROW(source.residue(SparseIndex::from_u64(49), 6), DomainError);
  try {
    source.residue(SparseIndex::from_u64(1001), 3);
    FAIL();
  } catch (const RangeError& e) {
    EXPECT_EQ(e.required(), 1001U);
  }
  EXPECT_EQ(source.name(), "dense");
}

TEST(AutoSource, PicksEvaluatorByMagnitude) {
  AutoSource source(AutoSourceOptions{.dense_limit = 5000});
  EXPECT_EQ(source.residue(SparseIndex::from_u64(49), 6).value(), 28U);
  EXPECT_EQ(source.last_method(), "dense");
  EXPECT_EQ(source.residue(SparseIndex::from_u64(70'000), 5).value(), expected(70'000, 5));
  EXPECT_EQ(source.last_method(), "halving");

  HalvingEvaluator synth_source;
  auto table = std::make_shared<const CongruenceTable>(synthesize(2, 4, 4, synth_source));
  source.attach_table(table);
  EXPECT_EQ(source.residue(parse_index_spec("2^1000-2"), 2).value(), 2U);
  EXPECT_EQ(source.last_method(), "classify");
  EXPECT_EQ(source.residue(parse_index_spec("2^1000-2"), 1).value(), 0U);
  EXPECT_EQ(source.last_method(), "classify");
  EXPECT_EQ(source.residue(parse_index_spec("2^1000"), 4).value(), 8U);
  EXPECT_EQ(source.last_method(), "halving");
}
