#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "newton_strata/errors.hpp"
#include "newton_strata/isocrystal.hpp"

using namespace newton_strata;

namespace {

constexpr std::uint32_t kPrime = 101;

LaurentPoly to_poly(const oracle::Laurent& x) {
  if (x.empty()) return {};
  const auto low = x.begin()->first;
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(x.rbegin()->first - low + 1), 0);
  for (const auto& [d, c] : x) coeffs[static_cast<std::size_t>(d - low)] = static_cast<std::uint32_t>(c);
  return LaurentPoly(low, coeffs);
}

oracle::Laurent from_poly(const LaurentPoly& x) {
  oracle::Laurent out;
  for (std::size_t k = 0; k < x.coefficients().size(); ++k) {
    if (x.coefficients()[k]) out[x.valuation() + static_cast<std::int64_t>(k)] = x.coefficients()[k];
  }
  return out;
}

LaurentPolyMatrix to_matrix(const std::vector<std::vector<oracle::Laurent>>& m, std::uint32_t p) {
  LaurentPolyMatrix out(static_cast<int>(m.size()), p);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out.set(static_cast<int>(r), static_cast<int>(c), to_poly(m[r][c]));
  return out;
}

std::vector<std::vector<oracle::Laurent>> from_matrix(const LaurentPolyMatrix& m) {
  std::vector<std::vector<oracle::Laurent>> out(static_cast<std::size_t>(m.size()));
  for (int r = 0; r < m.size(); ++r)
    for (int c = 0; c < m.size(); ++c) out[static_cast<std::size_t>(r)].push_back(from_poly(m(r, c)));
  return out;
}

}  // namespace

TEST(Isocrystal, LaurentPolyNormalisation) {
  const LaurentPoly p(-2, {0, 0, 3, 0, 1, 0});
  EXPECT_EQ(p.valuation(), 0);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coefficient(0), 3u);
  EXPECT_EQ(p.coefficient(1), 0u);
  EXPECT_TRUE(LaurentPoly(4, {0, 0}).is_zero());
  EXPECT_EQ(p.truncated(1), LaurentPoly::monomial(0, 3));
  EXPECT_THROW(LaurentPolyMatrix(2, 100), Error);
  EXPECT_THROW(LaurentPolyMatrix(2, 65537), Error);
  EXPECT_THROW(LaurentPolyMatrix(9, 101), Error);
}

TEST(Isocrystal, DiagonalExample) {
  LaurentPolyMatrix m(2, kPrime);
  m.set(0, 0, LaurentPoly::monomial(2));
  m.set(1, 1, LaurentPoly::monomial(-1));
  const auto b = newton_point_of_matrix(m);
  EXPECT_EQ(b.nu(), NewtonPoint::parse("2,-1"));
  EXPECT_EQ(b.kappa(), 1);
}

TEST(Isocrystal, CharacteristicPolynomialExample) {
  // Companion matrix of T^2 - (1 + t) T + t.
  LaurentPolyMatrix m(2, kPrime);
  m.set(0, 1, LaurentPoly::monomial(1, kPrime - 1));
  m.set(1, 0, LaurentPoly::monomial(0));
  m.set(1, 1, LaurentPoly(0, {1, 1}));
  const auto b = newton_point_of_matrix(m);
  EXPECT_EQ(b.nu(), NewtonPoint::parse("1,0"));
  EXPECT_EQ(b.kappa(), 1);
}

TEST(Isocrystal, MatrixOfTranslationAndReflection) {
  const Coweight mu{3, -1, 5};
  const auto m = matrix_of(AffineElement::translation(mu), kPrime);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (r == c) EXPECT_EQ(m(r, c), LaurentPoly::monomial(mu[static_cast<std::size_t>(r)]));
      else EXPECT_TRUE(m(r, c).is_zero());
    }
  }
  EXPECT_EQ(newton_point_of_matrix(m).nu(), NewtonPoint::parse("5,3,-1"));

  const auto s = matrix_of(AffineElement::finite(WeylElement::simple_reflection(3, 1)), kPrime);
  EXPECT_EQ(s(0, 1), LaurentPoly::monomial(0));
  EXPECT_EQ(s(1, 0), LaurentPoly::monomial(0));
  EXPECT_EQ(s(2, 2), LaurentPoly::monomial(0));
  EXPECT_TRUE(s(0, 0).is_zero());
}

TEST(Isocrystal, MatrixOfExampleIsMonomial) {
  const auto m = matrix_of(test_support::example_x(), kPrime);
  std::multiset<std::int64_t> vals;
  for (int r = 0; r < 5; ++r) {
    int nonzero = 0;
    for (int c = 0; c < 5; ++c) {
      if (m(r, c).is_zero()) continue;
      ++nonzero;
      EXPECT_EQ(m(r, c).valuation(), m(r, c).degree());
      vals.insert(m(r, c).valuation());
    }
    EXPECT_EQ(nonzero, 1);
  }
  EXPECT_EQ(vals, (std::multiset<std::int64_t>{150, 75, 0, -75, -150}));
}

TEST(Isocrystal, IwahoriSamples) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = sample_iwahori(4, kPrime, 0, rng);
    for (int r = 0; r < 4; ++r) {
      EXPECT_EQ(m(r, r).valuation(), 0);
      for (int c = r + 1; c < 4; ++c) EXPECT_TRUE(m(r, c).is_zero());
      for (int c = 0; c < 4; ++c) EXPECT_TRUE(m(r, c).is_zero() || (m(r, c).valuation() == 0 && m(r, c).degree() == 0));
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = sample_iwahori(3, kPrime, 6, rng);
    for (int r = 0; r < 3; ++r) {
      EXPECT_NE(m(r, r).coefficient(0), 0u);
      for (int c = r + 1; c < 3; ++c) EXPECT_TRUE(m(r, c).is_zero() || m(r, c).valuation() >= 1);
      for (int c = 0; c < 3; ++c) EXPECT_TRUE(m(r, c).is_zero() || m(r, c).degree() <= 6);
    }
    // The determinant is a unit: valuation 0.
    const auto cp = oracle::char_poly(from_matrix(m), kPrime);
    ASSERT_FALSE(cp.front().empty());
    EXPECT_EQ(cp.front().begin()->first, 0);
  }
}

TEST(Isocrystal, AgreesWithLeibnizOracle) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> coeff(0, 4);
  std::uniform_int_distribution<std::int64_t> degree(-3, 4);
  int compared = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::vector<oracle::Laurent>> m(static_cast<std::size_t>(n));
      for (auto& row : m) {
        for (int c = 0; c < n; ++c) {
          oracle::Laurent entry;
          for (int terms = 0; terms < 2; ++terms) oracle::add_into(entry, {{degree(rng), coeff(rng)}}, 5);
          row.push_back(entry);
        }
      }
      const auto expected = oracle::newton_from_char_poly(oracle::char_poly(m, 5));
      if (expected.empty()) continue;
      EXPECT_EQ(newton_point_of_matrix(to_matrix(m, 5)).nu().slopes(), expected);
      ++compared;
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(Isocrystal, InvariantUnderPermutationConjugation) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    // Constant lower triangular sample, promoted to an exact matrix.
    const auto g = sample_iwahori(4, kPrime, 0, rng);
    LaurentPolyMatrix exact(4, kPrime);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) exact.set(r, c, g(r, c));
    const auto x = matrix_of(AffineElement::translation({4, 1, -2, 0}), kPrime) * exact;
    ASSERT_TRUE(x.exact());
    const auto before = newton_point_of_matrix(x);
    for (const auto& u : all_elements(4)) {
      const auto p = matrix_of(AffineElement::finite(u), kPrime);
      const auto pinv = matrix_of(AffineElement::finite(u.inverse()), kPrime);
      EXPECT_EQ(newton_point_of_matrix(p * x * pinv), before);
    }
  }
}

TEST(Isocrystal, TruncatedProductTracksExactness) {
  std::mt19937_64 rng(31);
  const auto a = sample_iwahori(3, kPrime, 10, rng);
  const auto b = sample_iwahori(3, kPrime, 10, rng);
  EXPECT_EQ(a.cap(), 11);
  const auto ab = a * b;
  EXPECT_EQ(ab.cap(), 11);
  const auto shifted = matrix_of(AffineElement::translation({-2, 0, 3}), kPrime) * a;
  EXPECT_EQ(shifted.cap(), 9);
}

TEST(Isocrystal, PrecisionFloor) {
  EXPECT_EQ(precision_floor(test_support::example_x()), 1505);
  SamplerConfig cfg;
  cfg.deg_cap = 10;
  EXPECT_THROW(estimate_generic_newton(test_support::example_x(), cfg), Error);
}

TEST(Isocrystal, TranslationSamplesAreGeneric) {
  const auto x = AffineElement::translation({3, 1, -1, -3});
  SamplerConfig cfg;
  cfg.samples = 60;
  cfg.seed = 2;
  const auto summary = estimate_generic_newton(x, cfg);
  ASSERT_EQ(summary.max_points.size(), 1u);
  EXPECT_EQ(summary.max_points.front().nu(), NewtonPoint::parse("3,1,-1,-3"));
  EXPECT_EQ(summary.recheck_mismatches, 0u);
  for (const auto& [point, count] : summary.histogram) EXPECT_EQ(point.kappa(), 0);
}

TEST(Isocrystal, DeterministicAcrossThreadCounts) {
  const auto x = AffineElement::from_normal_form(WeylElement::from_word(4, {2, 1}), {6, 2, -1, -7},
                                                 WeylElement::from_word(4, {1, 3}));
  SamplerConfig cfg;
  cfg.samples = 40;
  cfg.seed = 99;
  cfg.threads = 1;
  const auto one = estimate_generic_newton(x, cfg);
  cfg.threads = 3;
  const auto three = estimate_generic_newton(x, cfg);
  EXPECT_EQ(one.histogram, three.histogram);
  EXPECT_EQ(one.max_points, three.max_points);
  cfg.seed = 100;
  const auto other = estimate_generic_newton(x, cfg);
  EXPECT_EQ(other.samples, 40u);
}
