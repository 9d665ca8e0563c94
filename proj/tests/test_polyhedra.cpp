#include <numeric>

#include <gtest/gtest.h>

#include "reesalg/oracle.hpp"
#include "reesalg/polyhedra.hpp"
#include "test_util.hpp"

using namespace reesalg;
using testutil::ideal;
using testutil::vec;

namespace {

HalfSpace hs(std::initializer_list<Exponent> n, Exponent h) { return HalfSpace{ExponentVector(n), h}; }

const MonomialIdeal kNormalExample = ideal(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 4}});
const MonomialIdeal kTwoValuations = ideal(2, {{3, 0}, {1, 1}, {0, 3}});

}  // namespace

TEST(NewtonPolyhedron, NormalExample) {
  const auto F = newton_polyhedron(kNormalExample);
  EXPECT_EQ(F.bounded, std::vector<HalfSpace>{hs({2, 2, 1}, 4)});
  ASSERT_EQ(F.coordinate.size(), 3u);
  EXPECT_EQ(F.coordinate[2], hs({0, 0, 1}, 0));
  EXPECT_TRUE(F.m_primary_source);
}

TEST(NewtonPolyhedron, MaximalIdealIsSimplex) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto F = newton_polyhedron(MonomialIdeal::maximal(d));
    ASSERT_EQ(F.bounded.size(), 1u);
    EXPECT_EQ(F.bounded[0].normal, ExponentVector(d, 1));
    EXPECT_EQ(F.bounded[0].offset, 1);
  }
}

TEST(NewtonPolyhedron, TwoValuations) {
  const auto F = newton_polyhedron(kTwoValuations);
  EXPECT_EQ(F.bounded, (std::vector<HalfSpace>{hs({1, 2}, 3), hs({2, 1}, 3)}));
}

TEST(NewtonPolyhedron, Errors) {
  EXPECT_THROW(newton_polyhedron(MonomialIdeal::zero(2)), std::invalid_argument);
  EXPECT_THROW(newton_polyhedron(MonomialIdeal::unit(2)), std::invalid_argument);
}

TEST(NewtonPolyhedron, NonMPrimaryStillAnswers) {
  const auto F = newton_polyhedron(ideal(2, {{2, 1}, {0, 3}}));
  EXPECT_FALSE(F.m_primary_source);
  EXPECT_TRUE(F.contains(vec({2, 1})));
  EXPECT_TRUE(F.contains(vec({0, 3})));
  EXPECT_FALSE(F.contains(vec({5, 0})));
}

TEST(IntegralClosure, Examples) {
  EXPECT_EQ(integral_closure(ideal(2, {{2, 0}, {0, 2}})), ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(integral_closure(kNormalExample), ideal(3, {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 2}, {0, 1, 2}, {0, 0, 4}}));
  EXPECT_EQ(integral_closure(MonomialIdeal::maximal(3)), MonomialIdeal::maximal(3));
}

TEST(ClosurePowerMember, Examples) {
  const auto F = newton_polyhedron(kNormalExample);
  EXPECT_TRUE(closure_power_member(F, vec({1, 1, 4}), 2));
  EXPECT_FALSE(closure_power_member(F, vec({1, 1, 3}), 2));
  for (const auto& g : kNormalExample.generators()) EXPECT_TRUE(closure_power_member(F, g, 1));
  EXPECT_THROW(closure_power_member(F, vec({1, 1, 1}), 0), std::invalid_argument);
}

TEST(ExtremeRays, Orthant) {
  IntMatrix id{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})};
  EXPECT_EQ(extreme_rays(id, 3), (std::vector<ExponentVector>{vec({0, 0, 1}), vec({0, 1, 0}), vec({1, 0, 0})}));
}

TEST(ExtremeRays, MaximalIdealCone) {
  // lifted (1,1) >= 1 gives (0,0,1); with e_1, e_2 this is the orthant of Z^3
  IntMatrix M{vec({0, 0, 1}), vec({1, 0, 0}), vec({0, 1, 0})};
  EXPECT_EQ(extreme_rays(M, 3).size(), 3u);
  for (const auto& r : extreme_rays(M, 3)) EXPECT_EQ(r.total(), 1);
}

TEST(ExtremeRays, NormalExampleTightness) {
  IntMatrix M{vec({-2, -2, -3, 4}), vec({1, 0, 0, 0}), vec({0, 1, 0, 0}), vec({0, 0, 1, 0})};
  const auto rays = extreme_rays(M, 4);
  ASSERT_EQ(rays.size(), 4u);
  for (const auto& r : rays) {
    int tight = 0;
    for (const auto& row : M) {
      EXPECT_GE(row.dot(r), 0);
      tight += row.dot(r) == 0;
    }
    EXPECT_EQ(tight, 3) << r;
    Exponent g = 0;
    for (Exponent c : r) g = std::gcd(g, c);
    EXPECT_EQ(g, 1);
  }
}

TEST(ExtremeRays, RejectsDegenerateCones) {
  EXPECT_THROW(extreme_rays(IntMatrix{vec({1, 0})}, 2), std::invalid_argument);  // half-plane, not pointed
  EXPECT_THROW(extreme_rays(IntMatrix{vec({1, 0}), vec({-1, 0}), vec({0, 1})}, 2), std::invalid_argument);
}

// ---- properties ------------------------------------------------------------

TEST(ClosureProperty, IdempotentAndContainsI) {
  for (const auto& I : testutil::corpus(200, 31)) {
    const auto C = integral_closure(I);
    EXPECT_TRUE(is_subset(I, C));
    EXPECT_EQ(integral_closure(C), C);
  }
}

TEST(ClosureProperty, FacetScaling) {
  for (const auto& I : testutil::corpus(40, 32)) {
    const auto F = newton_polyhedron(I);
    for (Exponent n = 1; n <= 4; ++n) {
      const auto Fn = newton_polyhedron(power(I, n));
      ASSERT_EQ(Fn.bounded.size(), F.bounded.size());
      for (std::size_t k = 0; k < F.bounded.size(); ++k) {
        EXPECT_EQ(Fn.bounded[k].normal, F.bounded[k].normal);
        EXPECT_EQ(Fn.bounded[k].offset, n * F.bounded[k].offset);
      }
    }
  }
}

TEST(ClosureProperty, FacetsAgreeWithValuativeOracle) {
  for (const auto& I : testutil::corpus(200, 33)) {
    const auto F = newton_polyhedron(I);
    Exponent k_max = 1;
    for (const auto& h : F.bounded) k_max = std::lcm(k_max, h.offset);
    oracle::Box box{I.generator_box().coords()};
    oracle::PowerMembership dp(I.generators());
    box.for_each([&](const std::vector<Exponent>& v) {
      ASSERT_EQ(F.contains(ExponentVector(v)), oracle::oracle_iclosure_member(ExponentVector(v), dp, k_max))
          << "v = " << ExponentVector(v) << ", k_max = " << k_max;
    });
  }
}

TEST(ClosureProperty, ReesValuationCountStable) {
  for (const auto& I : testutil::corpus(200, 34))
    EXPECT_EQ(newton_polyhedron(integral_closure(I)).bounded.size(), newton_polyhedron(I).bounded.size());
}

TEST(ClosureProperty, GeneratorBoxBoundIsSound) {
  IdealSampler s(35);
  for (const auto& I : testutil::corpus(100, 35)) {
    const auto F = newton_polyhedron(I);
    const auto M = I.generator_box();
    for (int k = 0; k < 50; ++k) {
      auto v = s.point(I.dim());
      for (auto& c : v) c *= 2;
      if (!F.contains(v)) continue;
      for (std::size_t j = 0; j < I.dim(); ++j)
        if (v[j] > M[j]) {
          EXPECT_TRUE(F.contains(v - ExponentVector::unit(I.dim(), j))) << v;
        }
    }
  }
}

TEST(ClosureProperty, FacetsIrredundantAndSupported) {
  for (const auto& I : testutil::corpus(100, 36)) {
    const auto F = newton_polyhedron(I);
    EXPECT_TRUE(facets_are_supported(F, I));
    for (const auto& g : I.generators()) EXPECT_TRUE(F.contains(g));
    const auto hi = 2 * I.generator_box();
    for (std::size_t drop = 0; drop < F.bounded.size(); ++drop) {
      bool enlarged = false;
      detail::for_each_point(ExponentVector(I.dim()), hi, kDefaultPointBudget, [&](const ExponentVector& v) {
        if (enlarged || F.contains(v)) return;
        bool rest = true;
        for (std::size_t k = 0; k < F.bounded.size(); ++k)
          if (k != drop) rest = rest && F.bounded[k].contains(v);
        enlarged = rest;
      });
      EXPECT_TRUE(enlarged) << "facet " << F.bounded[drop].normal << " is redundant";
    }
  }
}
