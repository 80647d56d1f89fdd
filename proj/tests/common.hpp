#pragma once

#include <string>
#include <vector>

#include "newton_strata/affine.hpp"
#include "newton_strata/newton.hpp"
#include "newton_strata/strata.hpp"
#include "newton_strata/weyl.hpp"
#include "oracles.hpp"

namespace test_support {

using namespace newton_strata;

inline WeylElement from_perm(const oracle::Perm& p) {
  std::vector<std::uint8_t> bytes(p.begin(), p.end());
  return WeylElement(bytes);
}

inline oracle::Perm to_perm(const WeylElement& u) { return {u.one_line().begin(), u.one_line().end()}; }

// The worked rank-4 example.
inline const Coweight kExampleMu{150, 75, 0, -75, -150};
constexpr std::int64_t kExampleM = 74;

inline TripleCandidate example_triple() {
  return {WeylElement::from_word(5, {4, 2, 3, 1}), WeylElement::from_word(5, {1, 2, 3, 4, 2, 3, 1}), 2,
          DiagramAutomorphism::identity(4)};
}

inline AffineElement example_x() {
  const auto c = example_triple();
  return AffineElement::from_normal_form(c.v, kExampleMu, c.w);
}

inline IsoClass iso(const std::string& text) { return IsoClass(NewtonPoint::parse(text)); }

inline oracle::Slopes slopes_of(const IsoClass& b) { return b.nu().slopes(); }

// Rows of the shipped fixture.
std::vector<TripleCandidate> fixture_triples();

}  // namespace test_support
