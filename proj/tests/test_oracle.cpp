#include <gtest/gtest.h>

#include "reesalg/oracle.hpp"
#include "reesalg/rees_cone.hpp"
#include "test_util.hpp"

using namespace reesalg;
using testutil::ideal;
using testutil::vec;

namespace {

const MonomialIdeal kXY2 = ideal(2, {{2, 0}, {0, 2}});

}  // namespace

TEST(OracleIClosure, Examples) {
  EXPECT_TRUE(oracle::oracle_iclosure_member(vec({1, 1}), kXY2, 2));
  EXPECT_FALSE(oracle::oracle_iclosure_member(vec({1, 1}), kXY2, 1));
  EXPECT_FALSE(oracle::oracle_iclosure_member(vec({1, 0}), kXY2, 12));
  for (const auto& g : kXY2.generators()) EXPECT_TRUE(oracle::oracle_iclosure_member(g, kXY2, 1));
  EXPECT_THROW(oracle::oracle_iclosure_member(vec({1, 1, 1}), kXY2, 2), DimensionMismatch);
}

TEST(OraclePower, Examples) {
  EXPECT_FALSE(oracle::oracle_power_member(vec({3, 1}), kXY2, 2));
  EXPECT_TRUE(oracle::oracle_power_member(vec({4, 0}), kXY2, 2));
  EXPECT_TRUE(oracle::oracle_power_member(vec({2, 2}), kXY2, 2));
  EXPECT_TRUE(oracle::oracle_power_member(vec({0, 0}), kXY2, 0));
  EXPECT_THROW(oracle::oracle_power_member(vec({0, 0}), kXY2, -1), std::invalid_argument);
}

TEST(OraclePower, UnitIdealHasNoOrderGrowth) {
  oracle::PowerMembership dp(MonomialIdeal::unit(2).generators());
  EXPECT_TRUE(dp({0, 0}, 0));
  EXPECT_FALSE(dp({5, 5}, 1));
}

TEST(OraclePower, BudgetIsEnforced) {
  oracle::PowerMembership dp(kXY2.generators(), 10);
  EXPECT_THROW(dp({40, 40}, 3), BudgetExceeded);
}

TEST(OracleColon, Examples) {
  const oracle::Box box{{4, 4}};
  EXPECT_EQ(oracle::oracle_colon(kXY2, testutil::m(2), box), ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(oracle::oracle_colon(kXY2, ideal(2, {{2, 0}, {1, 1}, {0, 2}}), box), testutil::m(2));
  EXPECT_EQ(oracle::oracle_intersect(ideal(2, {{2, 0}}), ideal(2, {{0, 2}}), box), ideal(2, {{2, 2}}));
}

TEST(OracleBox, Budget) {
  oracle::Box box{{9, 9, 9}, 999};
  EXPECT_THROW(box.points(), BudgetExceeded);
  EXPECT_THROW(box.for_each([](const std::vector<Exponent>&) {}), BudgetExceeded);
  EXPECT_THROW((oracle::Box{{-1}}.points()), std::invalid_argument);
  EXPECT_EQ((oracle::Box{{2, 3}}.points()), 12u);
}

TEST(OracleRelint, Orthant) {
  const IntMatrix rows{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})};
  const auto pts = oracle::oracle_relint_points(rows, oracle::Box{{2, 2, 2}});
  EXPECT_EQ(pts.size(), 8u);
  for (const auto& p : pts)
    for (Exponent c : p) {
      EXPECT_GE(c, 1);
      EXPECT_LE(c, 2);
    }
}

TEST(OracleRelint, NormalExample) {
  const auto RC = rees_cone(ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 4}}));
  const auto pts = oracle::oracle_relint_points(RC, oracle::Box{{3, 3, 3, 3}});
  EXPECT_NE(std::find(pts.begin(), pts.end(), vec({1, 1, 1, 2})), pts.end());
  EXPECT_EQ(std::find(pts.begin(), pts.end(), vec({1, 1, 1, 1})), pts.end());
  for (const auto& p : pts) EXPECT_TRUE(relint_member(RC, p));
}

// ---- properties ------------------------------------------------------------

TEST(OracleProperty, RelintPointsMatchMembership) {
  for (const auto& I : testutil::corpus(200, 61)) {
    const auto RC = rees_cone(I);
    const oracle::Box box{std::vector<Exponent>(I.dim() + 1, 4)};
    const auto pts = oracle::oracle_relint_points(RC, box);
    std::size_t count = 0;
    box.for_each([&](const std::vector<Exponent>& v) { count += relint_member(RC, ExponentVector(v)); });
    EXPECT_EQ(pts.size(), count);
  }
}

TEST(OracleProperty, PowerDpAgreesWithDirectSums) {
  // order(v) against explicit n-fold sums of generators.
  IdealSampler s(62);
  for (int k = 0; k < 20; ++k) {
    const auto I = s.any(2);
    oracle::PowerMembership dp(I.generators());
    for (Exponent n = 0; n <= 3; ++n) {
      std::vector<ExponentVector> sums{ExponentVector(2)};
      for (Exponent j = 0; j < n; ++j) {
        std::vector<ExponentVector> next;
        for (const auto& a : sums)
          for (const auto& g : I.generators()) next.push_back(a + g);
        sums = std::move(next);
      }
      oracle::Box{I.generator_box().coords()}.for_each([&](const std::vector<Exponent>& v) {
        bool direct = false;
        for (const auto& t : sums) direct = direct || t.divides(ExponentVector(v));
        ASSERT_EQ(dp(v, n), direct);
      });
    }
  }
}
