#include <gtest/gtest.h>

#include <memory>

#include "pow2comp/errors.hpp"
#include "pow2comp/halving_eval.hpp"
#include "pow2comp/padic.hpp"
#include "pow2comp/residue_source.hpp"
#include "pow2comp/sparse_index.hpp"
#include "pow2comp/table_synth.hpp"

using namespace pow2comp;

namespace {

// Residue flips with the parity of the top exponent: never settles along 2^k.
class FlipSource final : public ResidueSource {
 public:
  Residue residue(const SparseIndex& n, int n_exp) override {
    return Residue(n.is_zero() ? 0 : n.top() % 2, n_exp);
  }
  std::string name() const override { return "flip"; }
};

HalvingEvaluator& source() {
  static HalvingEvaluator eval(kDefaultHalvingBudget, true);
  return eval;
}

}  // namespace

TEST(Theta, KnownValues) {
  const auto t0 = theta(0, 4, 20, source());
  EXPECT_EQ(t0.value.value(), 8U);
  EXPECT_LE(t0.k0, 3U);
  const auto tm1 = theta(-1, 3, 20, source());
  EXPECT_EQ(tm1.value.value(), 7U);
  EXPECT_LE(tm1.k0, 3U);
  const auto tp1 = theta(1, 3, 20, source());
  EXPECT_EQ(tp1.value.value(), 6U);
  EXPECT_LE(tp1.k0, 4U);
  EXPECT_EQ(theta(-1, 2, 12, source()).value.value(), 3U);
  EXPECT_EQ(theta(-2, 2, 12, source()).value.value(), 2U);
  for (int l = 1; l <= 6; ++l) {
    EXPECT_EQ(theta((std::int64_t{1} << l) - 1, 2, 24, source()).value.value(), 2U) << l;
  }
}

TEST(Theta, ModThirtyTwo) {
  const auto r = theta0_mod32(16, source());
  EXPECT_EQ(r.value(), 8U);
  EXPECT_EQ(r.reduce(4).value(), 8U);
  EXPECT_LE(theta(0, 5, 16, source()).k0, 8U);
  EXPECT_EQ(build_mod_table(256, 5)[256], 8U);
  EXPECT_THROW(theta0_mod32(11, source()), DomainError);
}

TEST(Theta, TraceLayout) {
  const auto t = theta(-5, 3, 12, source());
  EXPECT_EQ(t.k_first, 3U);  // 2^3 - 5 is the first positive index
  EXPECT_EQ(t.trace.size(), 10U);
  EXPECT_EQ(t.kmax, 12U);
  for (std::uint32_t k = t.k0; k <= t.kmax; ++k) EXPECT_EQ(t.trace[k - t.k_first], t.value.value());
  if (t.k0 > t.k_first) {
    EXPECT_NE(t.trace[t.k0 - 1 - t.k_first], t.value.value());
  }
}

TEST(Theta, NonStabilized) {
  FlipSource flip;
  try {
    theta(0, 3, 10, flip);
    FAIL();
  } catch (const NonStabilizedError& e) {
    EXPECT_EQ(e.trace().size(), 11U);
  }
  EXPECT_THROW(theta(0, 3, 3, source()), DomainError);
}

TEST(Theta, PrefixCoherenceAndClassify) {
  HalvingEvaluator synth_source(kDefaultHalvingBudget, true);
  std::vector<CongruenceTable> tables;
  for (int n_exp = 1; n_exp <= 3; ++n_exp) {
    tables.push_back(synthesize(n_exp, static_cast<std::uint32_t>(n_exp + 4), 4, synth_source));
  }
  SynthOptions horizon;
  horizon.horizon = 14;
  tables.push_back(synthesize(4, 8, 4, synth_source, horizon));

  const auto huge = [](std::int64_t a) { return SparseIndex::pow2_plus(200, a); };
  for (std::int64_t a = -8; a <= 8; ++a) {
    std::optional<Residue> coarser;
    for (int n_exp = 1; n_exp <= 4; ++n_exp) {
      const auto t = theta(a, n_exp, 28, source());
      EXPECT_EQ(t.value, classify(huge(a), tables[static_cast<std::size_t>(n_exp - 1)])) << "a=" << a << " N=" << n_exp;
      if (coarser) {
        EXPECT_EQ(t.value.reduce(n_exp - 1), *coarser) << "a=" << a << " N=" << n_exp;
      }
      coarser = t.value;
    }
  }
}

TEST(Polynomial, ParseAndEvaluate) {
  const auto p = parse_polynomial("2x^2-x+3");
  EXPECT_EQ(p.coeffs, (std::vector<std::int64_t>{3, -1, 2}));
  EXPECT_EQ(p.at_pow2(3), 123);
  EXPECT_TRUE(p.has_negative_nonconstant());
  EXPECT_EQ(parse_polynomial("x").coeffs, (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(parse_polynomial("x^2+x").coeffs, (std::vector<std::int64_t>{0, 1, 1}));
  EXPECT_FALSE(parse_polynomial("x-1").has_negative_nonconstant());
  EXPECT_EQ(parse_polynomial(parse_polynomial("2x^2-x+3").to_string()).coeffs, p.coeffs);
  EXPECT_THROW(parse_polynomial(""), ParseError);
  EXPECT_THROW(parse_polynomial("x^"), ParseError);
}

TEST(Polynomial, Preconditions) {
  EXPECT_THROW(poly_limit_check(parse_polynomial("3"), 3, 1, 10, source()), DomainError);
  EXPECT_THROW(poly_limit_check(parse_polynomial("-x^2+1"), 3, 1, 10, source()), DomainError);
  EXPECT_THROW(poly_limit_check(parse_polynomial("x"), 3, 10, 1, source()), DomainError);
}

TEST(Polynomial, LimitCheck) {
  const auto x = poly_limit_check(parse_polynomial("x"), 4, 1, 20, source());
  ASSERT_TRUE(x.stabilized);
  EXPECT_EQ(x.value->value(), 8U);
  const auto x1 = poly_limit_check(parse_polynomial("x+1"), 3, 1, 20, source());
  ASSERT_TRUE(x1.stabilized);
  EXPECT_EQ(x1.value->value(), 6U);
  const auto sq = poly_limit_check(parse_polynomial("x^2+x"), 3, 1, 20, source());
  EXPECT_TRUE(sq.stabilized);
  EXPECT_EQ(sq.trace.size(), 20U);
  EXPECT_THROW(poly_limit_check(parse_polynomial("x^2-x"), 3, 1, 20, source()), DomainError);
}

TEST(Polynomial, LimitIndexGrowsWithPrecision) {
  for (const char* text : {"x", "x+1", "x^2+x", "3x+5"}) {
    std::uint32_t previous = 0;
    for (int n_exp = 1; n_exp <= 4; ++n_exp) {
      const auto r = poly_limit_check(parse_polynomial(text), n_exp, 1, 24, source());
      ASSERT_TRUE(r.stabilized) << text << " N=" << n_exp;
      EXPECT_GE(*r.k0, previous) << text << " N=" << n_exp;
      previous = *r.k0;
    }
  }
}

TEST(Polynomial, NullityCheck) {
  const auto r = poly_nullity_check(parse_polynomial("x^2-x"), 5, 1, 60, &source());
  EXPECT_TRUE(r.passed);
  ASSERT_TRUE(r.exit_k.has_value());
  EXPECT_FALSE(r.sampled.empty());
  for (const auto& [k, value] : r.sampled) EXPECT_EQ(value, 0U) << k;
  const auto r2 = poly_nullity_check(parse_polynomial("2x^2-x"), 3, 1, 40, &source());
  EXPECT_TRUE(r2.passed);
  const auto r3 = poly_nullity_check(parse_polynomial("2x^2-x"), 3, 1, 40);
  EXPECT_TRUE(r3.passed);
  EXPECT_TRUE(r3.sampled.empty());
  EXPECT_THROW(poly_nullity_check(parse_polynomial("x-1"), 1, 1, 20), DomainError);
}
