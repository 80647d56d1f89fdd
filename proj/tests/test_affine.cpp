#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "newton_strata/errors.hpp"

using namespace newton_strata;
using test_support::from_perm;

TEST(Affine, HyperplaneCountMatchesWordLengthInA2) {
  const auto& cartan = CartanData::type_a_cached(2);
  const auto lengths = oracle::affine_word_lengths(3, 6);
  EXPECT_EQ(lengths.size(), 64u);  // 1 + 3 + 6 + 9 + 12 + 15 + 18
  for (const auto& [x, len] : lengths) {
    EXPECT_EQ(affine_length(cartan, x.lambda, from_perm(x.u)), len);
  }
}

TEST(Affine, ProductAgreesWithIndependentArithmetic) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-4, 4);
  const auto all = all_elements(4);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    oracle::Aff a{{coord(rng), coord(rng), coord(rng), coord(rng)}, test_support::to_perm(all[pick(rng)])};
    oracle::Aff b{{coord(rng), coord(rng), coord(rng), coord(rng)}, test_support::to_perm(all[pick(rng)])};
    const auto expected = oracle::multiply(a, b);
    const auto product = AffineElement(a.lambda, from_perm(a.u)) * AffineElement(b.lambda, from_perm(b.u));
    EXPECT_EQ(product.lambda(), expected.lambda);
    EXPECT_EQ(test_support::to_perm(product.finite_part()), expected.u);
  }
}

TEST(Affine, ExampleElement) {
  const auto x = test_support::example_x();
  EXPECT_EQ(x.length(), 1497);
  const auto c = test_support::example_triple();
  EXPECT_EQ(x.length(), pairing(CartanData::type_a_cached(4).two_rho(), test_support::kExampleMu) + c.v.length() -
                            c.w.length());
  EXPECT_EQ(x.normal_form(), (NormalForm{c.v, test_support::kExampleMu, c.w}));
  EXPECT_EQ(x.kappa(), 0);
  EXPECT_EQ(eta(x, c.sigma), c.w * c.v);
  EXPECT_EQ(eta(x, c.sigma).length(), 7);

  const auto sx = mult_simple(Side::left, 2, x);
  EXPECT_EQ(sx.length_delta, -1);
  EXPECT_EQ(sx.element.length(), 1496);
  const auto sxs = conjugate_simple(2, x, c.sigma);
  EXPECT_EQ(sxs.length(), x.length() - 2);
  EXPECT_EQ(eta(sxs, c.sigma), c.w * c.v);
}

TEST(Affine, TrivialLengths) {
  EXPECT_EQ(AffineElement::translation({0, 0, 0}).length(), 0);
  const Coweight mu{5, 2, -1, -6};
  EXPECT_EQ(AffineElement::translation(mu).length(), pairing(CartanData::type_a_cached(3).two_rho(), mu));
  const auto id = AffineElement::translation({0, 0, 0, 0, 0});
  for (int i = 1; i <= 4; ++i) {
    EXPECT_EQ(mult_simple(Side::left, i, id).length_delta, 1);
    EXPECT_EQ(mult_simple(Side::right, i, id).length_delta, 1);
  }
}

TEST(Affine, Superregularity) {
  const auto x = test_support::example_x();
  EXPECT_TRUE(is_superregular(x, 74));
  EXPECT_FALSE(is_superregular(x, 75));
  const auto zero = AffineElement::translation({0, 0, 0, 0, 0});
  for (std::int64_t m : {0, 1, 74}) EXPECT_FALSE(is_superregular(zero, m));
}

TEST(Affine, DominantTranslationTimesFiniteIsMinimal) {
  const Coweight mu{40, 20, 0, -20, -40};
  for (const auto& w : all_elements(5)) {
    const auto x = AffineElement::translation(mu) * AffineElement::finite(w);
    EXPECT_EQ(x.normal_form(), (NormalForm{WeylElement::identity(5), mu, w}));
    for (int i = 1; i <= 4; ++i) EXPECT_EQ(mult_simple(Side::left, i, x).length_delta, 1);
  }
}

TEST(Affine, ClosedFormAndRoundTripInA4) {
  const auto all = all_elements(5);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<int> gap(3, 40);
  const auto& two_rho = CartanData::type_a_cached(4).two_rho();
  for (int trial = 0; trial < 300; ++trial) {
    Coweight mu(5);
    mu[4] = -gap(rng);
    for (int k = 3; k >= 0; --k) mu[static_cast<std::size_t>(k)] = mu[static_cast<std::size_t>(k) + 1] + gap(rng);
    const auto& v = all[pick(rng)];
    const auto& w = all[pick(rng)];
    const auto x = AffineElement::from_normal_form(v, mu, w);
    EXPECT_EQ(x.length(), pairing(two_rho, mu) + v.length() - w.length());
    EXPECT_EQ(x.normal_form(), (NormalForm{v, mu, w}));
    EXPECT_EQ(AffineElement(x.lambda(), x.finite_part()), x);
    EXPECT_EQ(parse_affine(format_normal_form(x)), x);
    EXPECT_EQ(parse_affine(format_raw(x)), x);
  }
}

TEST(Affine, SimpleMultiplicationDeltas) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coord(-3, 3);
  const auto all = all_elements(4);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const AffineElement x({coord(rng), coord(rng), coord(rng), coord(rng)}, all[pick(rng)]);
    for (int i = 1; i <= 3; ++i) {
      for (Side side : {Side::left, Side::right}) {
        const auto r = mult_simple(side, i, x);
        EXPECT_TRUE(r.length_delta == 1 || r.length_delta == -1);
        EXPECT_EQ(r.element.length() - x.length(), r.length_delta);
        const auto s = AffineElement::finite(WeylElement::simple_reflection(4, i));
        EXPECT_EQ(r.element, side == Side::left ? s * x : x * s);
      }
    }
    const auto nf = x.normal_form();
    EXPECT_EQ(AffineElement::from_normal_form(nf.v, nf.mu, nf.w), x);
    EXPECT_EQ(x.length(), nf.v.length() + AffineElement::from_normal_form(WeylElement::identity(4), nf.mu, nf.w).length());
  }
}

TEST(Affine, NonDominantTranslationIsAnError) {
  const auto x = AffineElement::translation({-3, 0, 3});
  // t^lambda with lambda antidominant: its normal form carries the dominant
  // translation, so superregularity is well defined.
  EXPECT_NO_THROW(is_superregular(x, 0));
  EXPECT_THROW(AffineElement({1, 2}, WeylElement::identity(3)), Error);
}
