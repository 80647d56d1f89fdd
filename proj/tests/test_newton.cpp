#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "newton_strata/errors.hpp"

using namespace newton_strata;
using test_support::iso;

namespace {

std::set<oracle::Slopes> as_set(const std::vector<IsoClass>& classes) {
  std::set<oracle::Slopes> out;
  for (const auto& c : classes) out.insert(c.nu().slopes());
  return out;
}

}  // namespace

TEST(Newton, Validation) {
  EXPECT_NO_THROW(NewtonPoint::parse("1/2,1/2"));
  EXPECT_THROW(NewtonPoint::parse("1/2,-1/2"), Error);  // break point at 1/2
  EXPECT_THROW(NewtonPoint::parse("0,1"), Error);       // not dominant
  EXPECT_THROW(NewtonPoint::parse("1/3,1/3"), Error);
  EXPECT_EQ(NewtonPoint::dominant_from({Rational(-1), Rational(2)}), NewtonPoint::parse("2,-1"));
  EXPECT_THROW(IsoClass(NewtonPoint::parse("1,0"), Integer(0)), Error);
  EXPECT_EQ(iso("2/3,2/3,2/3").kappa(), 2);
}

TEST(Newton, DominanceExamples) {
  EXPECT_TRUE(dominance_leq(iso("1/2,1/2"), iso("1,0")));
  EXPECT_FALSE(dominance_leq(iso("1,0"), iso("1/2,1/2")));
  EXPECT_TRUE(dominance_leq(iso("1,0"), iso("1,0")));
  EXPECT_FALSE(dominance_leq(iso("0,0"), iso("1,0")));  // different kappa
  const auto nu_x = iso("149,75,0,-75,-149");
  const auto nu_sxs = iso("149,74,0,-74,-149");
  EXPECT_TRUE(dominance_leq(nu_sxs, nu_x));
  const auto diff = difference(nu_x.nu(), nu_sxs.nu());
  EXPECT_EQ(diff, (std::vector<Rational>{0, 1, 0, -1, 0}));
}

TEST(Newton, Defect) {
  EXPECT_EQ(defect(iso("1/2,1/2")), 1);
  EXPECT_EQ(defect(iso("149,75,0,-75,-149")), 0);
  EXPECT_EQ(defect(iso("1/3,1/3,1/3")), 2);
  EXPECT_EQ(defect(iso("1/2,1/2,1/2,1/2")), 2);
  EXPECT_EQ(defect(IsoClass::basic(4, 0)), 0);
  for (int n = 2; n <= 4; ++n) {
    for (const auto& s : oracle::newton_points(n, -1, 1)) {
      const IsoClass b{NewtonPoint(s)};
      EXPECT_EQ(defect(b) == 0, b.nu().is_integral());
    }
  }
}

TEST(Newton, ChainLengthExamples) {
  EXPECT_EQ(chain_length(iso("1,0"), iso("1,0")), 0);
  EXPECT_EQ(chain_length(iso("1/2,1/2"), iso("1,0")), 1);
  EXPECT_EQ(chain_length(iso("149,74,0,-74,-149"), iso("149,75,0,-75,-149")), 2);
  EXPECT_THROW(chain_length(iso("1,0"), iso("1/2,1/2")), Error);
}

TEST(Newton, IntervalExamples) {
  const auto single = interval(iso("1,0"), iso("1,0"));
  ASSERT_EQ(single.size(), 1u);
  // (1/2, -1/2) has a break point at height 1/2, so nothing lies strictly
  // between these two.
  EXPECT_EQ(as_set(interval(iso("0,0"), iso("1,-1"))), (std::set<oracle::Slopes>{{0, 0}, {1, -1}}));
  EXPECT_EQ(chain_length(iso("0,0"), iso("1,-1")), 1);

  const auto top = iso("149,75,0,-75,-149");
  const auto bottom = iso("149,74,0,-74,-149");
  const auto members = interval(bottom, top);
  EXPECT_EQ(as_set(members), (std::set<oracle::Slopes>{{149, 74, 0, -74, -149},
                                                       {149, 74, 1, -75, -149},
                                                       {149, 75, -1, -74, -149},
                                                       {149, 75, 0, -75, -149}}));
  const auto chains = maximal_chains(bottom, top);
  ASSERT_EQ(chains.size(), 2u);
  for (const auto& chain : chains) {
    ASSERT_EQ(chain.size(), 3u);
    EXPECT_EQ(chain.front(), bottom);
    EXPECT_EQ(chain.back(), top);
  }
  EXPECT_NE(chains[0][1], chains[1][1]);

  // A trivial interval has one chain without steps.
  const auto trivial = maximal_chains(top, top);
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_EQ(trivial.front().size(), 1u);
}

TEST(Newton, IntervalLimits) {
  PosetLimits tight;
  tight.max_gap = 1;
  EXPECT_THROW(interval(iso("0,0,0"), iso("3,0,-3"), tight), Error);
}

// Brute-force Hasse diagrams for GL_2..GL_4: interval, chains and the closed
// form for chain lengths.
TEST(Newton, HasseOracle) {
  std::size_t pairs_checked = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto universe = oracle::newton_points(n, -2, 2);
    for (const auto& a : universe) {
      for (const auto& b : universe) {
        if (!oracle::leq(a, b) || oracle::pair_rho(b) - oracle::pair_rho(a) > 4) continue;
        // The universe only contains the whole interval if the slopes of b
        // stay inside its box; this holds since every c in [a, b] has slopes
        // between the last and first slope of b.
        const oracle::Hasse hasse(universe, a, b);
        const IsoClass ia{NewtonPoint(a)};
        const IsoClass ib{NewtonPoint(b)};
        const auto members = interval(ia, ib);
        EXPECT_EQ(as_set(members), std::set<oracle::Slopes>(hasse.nodes.begin(), hasse.nodes.end()));
        for (const auto& c : members) EXPECT_TRUE(dominance_leq(ia, c) && dominance_leq(c, ib));

        const auto expected = hasse.chains(a, b);
        const auto length = chain_length(ia, ib);
        for (const auto& chain : expected) EXPECT_EQ(Integer(chain.size() - 1), length);
        std::set<std::vector<oracle::Slopes>> got;
        for (const auto& chain : maximal_chains(ia, ib)) {
          std::vector<oracle::Slopes> steps;
          for (const auto& c : chain) steps.push_back(c.nu().slopes());
          got.insert(steps);
        }
        EXPECT_EQ(got, std::set<std::vector<oracle::Slopes>>(expected.begin(), expected.end()));
        ++pairs_checked;
      }
    }
  }
  EXPECT_GT(pairs_checked, 500u);
}

TEST(Newton, Gl3ChainsFromBasicToRegular) {
  const auto universe = oracle::newton_points(3, -1, 1);
  const oracle::Slopes a{0, 0, 0};
  const oracle::Slopes b{1, 0, -1};
  const oracle::Hasse hasse(universe, a, b);
  EXPECT_EQ(maximal_chains(iso("0,0,0"), iso("1,0,-1")).size(), hasse.chains(a, b).size());
}

TEST(Newton, PartialOrderAxioms) {
  const auto universe = oracle::newton_points(3, -2, 2);
  std::vector<IsoClass> classes;
  for (const auto& s : universe) classes.emplace_back(NewtonPoint(s));
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);
  for (int trial = 0; trial < 20000; ++trial) {
    const auto& a = classes[pick(rng)];
    const auto& b = classes[pick(rng)];
    const auto& c = classes[pick(rng)];
    EXPECT_TRUE(dominance_leq(a, a));
    EXPECT_EQ(dominance_leq(a, b), oracle::leq(a.nu().slopes(), b.nu().slopes()));
    if (dominance_leq(a, b) && dominance_leq(b, a)) EXPECT_EQ(a, b);
    if (dominance_leq(a, b) && dominance_leq(b, c)) EXPECT_TRUE(dominance_leq(a, c));
  }
}

TEST(Newton, Pairings) {
  const auto nu = iso("149,74,0,-74,-149");
  EXPECT_EQ(pair_two_rho(nu.nu()), 1488);
  EXPECT_EQ(pair_rho(iso("1/2,1/2").nu()), 0);
  EXPECT_EQ(pair_rho(iso("1,0").nu()), Rational(1, 2));
}
