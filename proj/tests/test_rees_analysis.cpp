#include <gtest/gtest.h>

#include "reesalg/oracle.hpp"
#include "reesalg/rees_analysis.hpp"
#include "reesalg/rees_cone.hpp"
#include "test_util.hpp"

using namespace reesalg;
using testutil::ideal;
using testutil::m;

namespace {

const MonomialIdeal kNormalExample = ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 4}});
const MonomialIdeal kTwoValuations = ideal(2, {{3, 0}, {1, 1}, {0, 3}});
const MonomialIdeal kMSquared = ideal(2, {{2, 0}, {1, 1}, {0, 2}});
const MonomialIdeal kXY2 = ideal(2, {{2, 0}, {0, 2}});

struct Case {
  MonomialIdeal I;
  MonomialIdeal J;
};

// Corpus ideals that carry a pure-power reduction.
std::vector<Case> applicable(std::size_t n, std::uint64_t seed) {
  std::vector<Case> out;
  for (const auto& I : testutil::corpus(n, seed))
    if (auto J = find_pure_power_reduction(I)) out.push_back({I, *J});
  return out;
}

}  // namespace

TEST(Staircase, MatchesComplement) {
  const auto S = staircase(kXY2);
  EXPECT_EQ(S.size(), 4u);
  for (const auto& v : S) EXPECT_FALSE(kXY2.contains(v));
  EXPECT_TRUE(staircase(MonomialIdeal::unit(2)).empty());
  EXPECT_THROW(staircase(ideal(2, {{1, 1}})), Inapplicable);
}

TEST(Reduction, Examples) {
  EXPECT_TRUE(is_monomial_reduction(kXY2, kMSquared));
  EXPECT_FALSE(is_monomial_reduction(ideal(2, {{3, 0}, {0, 3}}), kTwoValuations));
  EXPECT_TRUE(is_monomial_reduction(kTwoValuations, kTwoValuations));
  EXPECT_THROW(is_monomial_reduction(kMSquared, kXY2), std::invalid_argument);
}

TEST(Reduction, PurePowerSearch) {
  EXPECT_EQ(find_pure_power_reduction(kMSquared), kXY2);
  EXPECT_FALSE(find_pure_power_reduction(kTwoValuations));
  EXPECT_EQ(find_pure_power_reduction(kNormalExample), kNormalExample);
  EXPECT_FALSE(find_pure_power_reduction(ideal(2, {{2, 1}, {0, 3}})));
}

TEST(Reduction, Numbers) {
  EXPECT_EQ(reduction_number(kXY2, kMSquared), 1);
  EXPECT_EQ(index_of_nilpotency(kXY2, kMSquared), 1);
  EXPECT_EQ(reduction_number(kTwoValuations, kTwoValuations), 0);
  EXPECT_EQ(index_of_nilpotency(kTwoValuations, kTwoValuations), 0);
  EXPECT_EQ(index_of_nilpotency_filtration(kNormalExample, kNormalExample), 1);
  EXPECT_THROW(reduction_number(ideal(2, {{3, 0}, {0, 3}}), kTwoValuations), std::invalid_argument);

  const auto D = reduction_data(kXY2, kMSquared);
  EXPECT_EQ(D.r, 1);
  EXPECT_EQ(D.s, 1);
  EXPECT_EQ(D.s_bar, 1);
  EXPECT_EQ(D.mu_J, 2u);
}

TEST(CanonicalPiece, Examples) {
  EXPECT_EQ(canonical_piece(kXY2, kMSquared, 0, 1), m(2));
  EXPECT_EQ(canonical_piece(kXY2, kMSquared, 1, 1), power(m(2), 3));
  const oracle::Box box{{8, 8}};
  EXPECT_EQ(canonical_piece(kXY2, kMSquared, 1, 1), oracle::oracle_colon(power(kXY2, 2), kMSquared, box));
  EXPECT_TRUE(canonical_piece(kXY2, kMSquared, -3, 1).is_unit());
  for (Exponent i = 0; i <= 3; ++i) EXPECT_EQ(canonical_piece(kNormalExample, kNormalExample, i, 0), power(kNormalExample, i));
  EXPECT_THROW(canonical_piece(kXY2, kMSquared, 1, 0), std::invalid_argument);
  EXPECT_THROW(canonical_piece(kMSquared, kMSquared, 1, 1), Inapplicable);
}

TEST(QuasiGorenstein, CompleteIntersection) {
  const auto v = quasi_gorenstein_test(kNormalExample, kNormalExample);
  EXPECT_TRUE(v.quasi_gorenstein);
  EXPECT_EQ(v.a, -2);
  EXPECT_EQ(v.u, 0);
  EXPECT_EQ(v.r, 0);
  EXPECT_EQ(v.range_lo, -5);
  EXPECT_EQ(v.range_hi, 5);
  EXPECT_EQ(v.probe_index, 6);
}

TEST(QuasiGorenstein, MaximalIdeal) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto v = quasi_gorenstein_test(m(d), m(d));
    EXPECT_TRUE(v.quasi_gorenstein);
    EXPECT_EQ(v.a, 1 - static_cast<Exponent>(d));
  }
}

TEST(QuasiGorenstein, MSquaredRejected) {
  const auto v = quasi_gorenstein_test(kXY2, kMSquared);
  EXPECT_FALSE(v.quasi_gorenstein);
  EXPECT_EQ(v.candidate_lo, 0);
  EXPECT_EQ(v.candidate_hi, 0);
  EXPECT_NE(colon(kXY2, kMSquared), kMSquared);
}

TEST(QuasiGorenstein, Inapplicable) {
  EXPECT_THROW(quasi_gorenstein_test(ideal(2, {{3, 0}, {0, 3}}), kTwoValuations), Inapplicable);
  EXPECT_THROW(quasi_gorenstein_test(kMSquared, kMSquared), Inapplicable);
}

TEST(CohenMacaulay, Examples) {
  EXPECT_TRUE(valabrega_valla_test(kXY2, kMSquared));
  EXPECT_TRUE(valabrega_valla_test(kTwoValuations, kTwoValuations));
  EXPECT_TRUE(two_standard_test(kXY2, kMSquared));
  EXPECT_TRUE(two_standard_test(kTwoValuations, kTwoValuations));
}

TEST(Core, Examples) {
  EXPECT_EQ(core_compute(m(2), m(2), 1).core, m(2));
  for (Exponent u = 1; u <= 4; ++u) {
    EXPECT_EQ(core_compute(m(2), m(2), u).core, power(m(2), 2 * u - 1));
    EXPECT_TRUE(core_theorem_check(m(2), m(2), u, -1));
  }
  EXPECT_EQ(core_compute(kNormalExample, kNormalExample, 1).core, kNormalExample);
  EXPECT_EQ(core_compute(kNormalExample, kNormalExample, 2).core, power(kNormalExample, 4));
  EXPECT_THROW(core_compute(kMSquared, kMSquared, 1), Inapplicable);
  EXPECT_THROW(core_compute(m(2), m(2), 0), std::invalid_argument);
}

TEST(Conductor, Examples) {
  EXPECT_EQ(conductor_t_exponent(kXY2, 6).q, 1);
  EXPECT_EQ(conductor_t_exponent(m(3), 8).q, 0);
  EXPECT_EQ(conductor_t_exponent(kMSquared, 8).q, 0);
  EXPECT_THROW(conductor_t_exponent(ideal(2, {{1, 1}}), 4), Inapplicable);
}

TEST(Consistency, NormalExample) {
  const auto v = quasi_gorenstein_test(kNormalExample, kNormalExample);
  const auto checks = a_invariant_consistency(kNormalExample, kNormalExample, v, -1);
  ASSERT_EQ(checks.size(), 4u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(Consistency, MaximalIdeal) {
  const auto v = quasi_gorenstein_test(m(3), m(3));
  for (const auto& c : a_invariant_consistency(m(3), m(3), v, -2)) EXPECT_TRUE(c.passed) << c.name;
  EXPECT_THROW(a_invariant_consistency(kMSquared, kXY2, quasi_gorenstein_test(kXY2, kMSquared), 0), std::invalid_argument);
}

// ---- properties ------------------------------------------------------------

TEST(AnalysisProperty, StaircaseMatchesOracle) {
  for (const auto& I : testutil::corpus(100, 51)) {
    std::size_t expected = 0;
    oracle::Box box{I.generator_box().coords()};
    box.for_each([&](const std::vector<Exponent>& v) { expected += !oracle::raw::member(I.generators(), v); });
    EXPECT_EQ(staircase(I).size(), expected);
  }
}

TEST(AnalysisProperty, NilpotencyBelowReductionNumber) {
  for (const auto& [I, J] : applicable(200, 52)) {
    const auto D = reduction_data(J, I);
    EXPECT_GE(D.s, 0);
    EXPECT_LE(D.s, D.r);
    EXPECT_GE(D.s_bar, D.s);
    EXPECT_EQ(product(J, power(I, D.r)), power(I, D.r + 1));
    if (D.r > 0) {
      EXPECT_NE(product(J, power(I, D.r - 1)), power(I, D.r));
    }
  }
}

TEST(AnalysisProperty, ReductionNumberMatchesPowerOracle) {
  // J I^n = I^{n+1} checked pointwise with the membership DP.
  for (const auto& [I, J] : applicable(40, 53)) {
    const auto r = reduction_number(J, I);
    const auto JIr = product(J, power(I, r));
    oracle::PowerMembership dp(I.generators());
    oracle::Box box{((r + 2) * I.generator_box()).coords()};
    box.for_each([&](const std::vector<Exponent>& v) { ASSERT_EQ(JIr.contains(ExponentVector(v)), dp(v, r + 1)); });
  }
}

TEST(AnalysisProperty, Sandwich) {
  for (const auto& [I, J] : applicable(200, 54)) {
    const auto v = quasi_gorenstein_test(J, I);
    if (!v.quasi_gorenstein) continue;
    const auto d = static_cast<Exponent>(I.dim());
    EXPECT_LE(v.s - d + 1, *v.a);
    EXPECT_LE(*v.a, v.r - d + 1);
  }
}

TEST(AnalysisProperty, CanonicalPieceIndependentOfK) {
  for (const auto& [I, J] : applicable(40, 55)) {
    const auto r = reduction_number(J, I);
    for (Exponent i = -2; i <= 3; ++i) {
      const auto base = canonical_piece(J, I, i, r);
      EXPECT_EQ(canonical_piece(J, I, i, r + 1), base);
      EXPECT_EQ(canonical_piece(J, I, i, r + 2), base);
    }
  }
}

TEST(AnalysisProperty, CoreStabilizes) {
  for (const auto& [I, J] : applicable(40, 56)) {
    const auto c = core_compute(I, J, 1);
    EXPECT_GE(c.stabilized, c.start);
    EXPECT_TRUE(is_subset(c.core, J));
  }
}

TEST(AnalysisProperty, QuasiGorensteinImpliesCohenMacaulayTests) {
  for (const auto& [I, J] : applicable(200, 57)) {
    const auto v = quasi_gorenstein_test(J, I);
    if (!v.quasi_gorenstein) continue;
    EXPECT_TRUE(valabrega_valla_test(J, I)) << I;
    if (v.s == v.r) {
      EXPECT_TRUE(two_standard_test(J, I)) << I;
    }
  }
}

TEST(AnalysisProperty, QuasiGorensteinAgreesWithCone) {
  // Gorenstein normalization implies the shift identity a(T) + q = a(normalization).
  for (const auto& [I, J] : applicable(120, 58)) {
    const auto v = quasi_gorenstein_test(J, I);
    if (!v.quasi_gorenstein) continue;
    const auto CD = canonical_generators(rees_cone(I));
    const auto a_bar = a_invariant_normalization(CD, I.dim());
    for (const auto& c : a_invariant_consistency(I, J, v, a_bar)) EXPECT_TRUE(c.passed) << I << " " << c.name << ": " << c.detail;
  }
}
