#include <gtest/gtest.h>

#include "common.hpp"
#include "newton_strata/errors.hpp"

using namespace newton_strata;
using test_support::from_perm;
using test_support::to_perm;

TEST(Weyl, LengthMatchesCayleyGraph) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& [perm, dist] : oracle::cayley_lengths(n)) {
      EXPECT_EQ(from_perm(perm).length(), dist);
    }
  }
}

TEST(Weyl, ExampleWords) {
  EXPECT_EQ(WeylElement::longest(5).length(), 10);
  EXPECT_EQ(WeylElement::from_word(5, {4, 2, 3, 1}).length(), 4);
  const auto w = WeylElement::from_word(5, {1, 2, 3, 4, 2, 3, 1});
  EXPECT_EQ(w.length(), 7);
  EXPECT_EQ(oracle::cayley_lengths(5).at(to_perm(w)), 7);
  const auto s1 = WeylElement::simple_reflection(5, 1);
  EXPECT_TRUE((s1 * s1).is_identity());
  EXPECT_EQ(s1.length(), 1);
  EXPECT_EQ(WeylElement::identity(5).length(), 0);
}

TEST(Weyl, WordConventionMultipliesLeftToRight) {
  // s1 s2 as a composite: first apply s2, then s1.
  const auto u = WeylElement::from_word(3, {1, 2});
  const auto expected = oracle::compose(oracle::swap_positions(oracle::identity_perm(3), 0, 1),
                                        oracle::swap_positions(oracle::identity_perm(3), 1, 2));
  EXPECT_EQ(to_perm(u), expected);
}

TEST(Weyl, Apply) {
  const Coweight mu{150, 75, 0, -75, -150};
  EXPECT_EQ(WeylElement::identity(5).apply(mu), mu);
  EXPECT_EQ(WeylElement::longest(5).apply({1, 0, 0, 0, 0}), (Coweight{0, 0, 0, 0, 1}));
  EXPECT_EQ(WeylElement::simple_reflection(5, 1).apply(mu), (Coweight{75, 150, 0, -75, -150}));
}

TEST(Weyl, ProductLengthParityAndInverse) {
  for (int n : {3, 4}) {
    const auto all = all_elements(n);
    for (const auto& u : all) {
      EXPECT_EQ(u.length(), u.inverse().length());
      EXPECT_TRUE((u * u.inverse()).is_identity());
      for (const auto& v : all) {
        const int l = (u * v).length();
        EXPECT_LE(l, u.length() + v.length());
        EXPECT_EQ((l - u.length() - v.length()) % 2, 0);
      }
    }
  }
}

TEST(Weyl, ReducedWordRoundTripAndIndex) {
  const auto all = all_elements(5);
  ASSERT_EQ(all.size(), 120u);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const auto& u = all[k];
    const auto word = u.reduced_word();
    EXPECT_EQ(static_cast<int>(word.size()), u.length());
    EXPECT_EQ(WeylElement::from_word(5, word), u);
    EXPECT_EQ(u.index(), k);
    EXPECT_EQ(WeylElement::from_index(5, k), u);
  }
}

TEST(Weyl, SupportIsIndependentOfReducedWord) {
  const auto identity_sigma = DiagramAutomorphism::identity(3);
  for (const auto& u : all_elements(4)) {
    if (u.length() > 5) continue;
    std::vector<std::vector<int>> words;
    std::vector<int> scratch;
    oracle::reduced_words(to_perm(u), scratch, words);
    ASSERT_FALSE(words.empty());
    for (const auto& word : words) {
      EXPECT_EQ(WeylElement::from_word(4, word), u);
      EXPECT_EQ(std::set<int>(word.begin(), word.end()), u.support());
    }
    EXPECT_EQ(sigma_support(u, identity_sigma), u.support());
  }
}

TEST(Weyl, SigmaSupportExamples) {
  const auto id = DiagramAutomorphism::identity(4);
  EXPECT_TRUE(sigma_support(WeylElement::identity(5), id).empty());
  EXPECT_EQ(sigma_support(WeylElement::from_word(5, {2, 3}), id), (std::set<int>{2, 3}));
  const auto c = test_support::example_triple();
  EXPECT_EQ(sigma_support(c.w * c.v, id), (std::set<int>{1, 2, 3, 4}));

  const auto& cartan = CartanData::type_a_cached(4);
  const auto flip = DiagramAutomorphism::from_image({4, 3, 2, 1}, cartan);
  EXPECT_EQ(sigma_support(WeylElement::from_word(5, {1}), flip), (std::set<int>{1, 4}));
}

TEST(Weyl, DiagramAutomorphismIsAHomomorphism) {
  const auto& cartan = CartanData::type_a_cached(3);
  const auto flip = DiagramAutomorphism::from_image({3, 2, 1}, cartan);
  EXPECT_EQ(flip.order(), 2);
  const auto all = all_elements(4);
  for (const auto& u : all)
    for (const auto& v : all) EXPECT_EQ(flip.apply(u * v), flip.apply(u) * flip.apply(v));
  EXPECT_THROW(DiagramAutomorphism::from_image({2, 1, 3}, cartan), Error);
}

TEST(Weyl, CartanData) {
  for (int rank = 1; rank <= 6; ++rank) {
    const auto& c = CartanData::type_a_cached(rank);
    EXPECT_EQ(static_cast<int>(c.positive_roots().size()), rank * (rank + 1) / 2);
    for (const auto& coroot : c.simple_coroots()) EXPECT_EQ(pairing(c.two_rho(), coroot), 2);
    for (int i = 1; i <= rank; ++i) EXPECT_EQ(c.cartan_entry(i, i), 2);
  }
}

TEST(Weyl, Descents) {
  const auto v = WeylElement::from_word(5, {4, 2, 3, 1});
  for (int i = 1; i <= 4; ++i) {
    const auto s = WeylElement::simple_reflection(5, i);
    EXPECT_EQ(v.has_left_descent(i), (s * v).length() < v.length());
    EXPECT_EQ(v.has_right_descent(i), (v * s).length() < v.length());
  }
}

TEST(Weyl, RankMismatchThrows) {
  EXPECT_THROW(compose(WeylElement::identity(3), WeylElement::identity(4)), Error);
}
