#pragma once

// The poset B(G) for split GL_n. A class is determined by its Newton point
// (a non-increasing vector of rationals whose polygon has integral break
// points) together with its Kottwitz point, here the sum of the slopes.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "newton_strata/rational.hpp"
#include "newton_strata/weyl.hpp"

namespace newton_strata {

class NewtonPoint {
 public:
  /// Throws Error(malformed_slopes) unless the slopes are non-increasing and
  /// every break point of the polygon (and its end point) is integral.
  explicit NewtonPoint(std::vector<Rational> slopes);

  /// Sorts into the dominant chamber first.
  static NewtonPoint dominant_from(std::vector<Rational> slopes);
  static NewtonPoint from_coweight(const Coweight& lambda);
  /// Comma separated entries, each "p" or "p/q".
  static NewtonPoint parse(std::string_view text);

  std::size_t rank() const { return slopes_.size(); }
  const std::vector<Rational>& slopes() const { return slopes_; }
  const Rational& operator[](std::size_t k) const { return slopes_[k]; }

  /// Sum of the first k slopes, i.e. the polygon at abscissa k.
  Rational partial_sum(std::size_t k) const;
  /// Polygon values at 0, 1, ..., n.
  std::vector<Rational> polygon() const;
  bool is_integral() const;

  std::string to_string() const;

  friend bool operator==(const NewtonPoint&, const NewtonPoint&) = default;
  friend bool operator<(const NewtonPoint& a, const NewtonPoint& b) { return a.slopes_ < b.slopes_; }

 private:
  std::vector<Rational> slopes_;
};

class IsoClass {
 public:
  explicit IsoClass(NewtonPoint nu);
  /// Throws Error(invalid_argument) if kappa is not the sum of the slopes.
  IsoClass(NewtonPoint nu, Integer kappa);

  /// The basic class with Kottwitz point kappa: all slopes kappa / n.
  static IsoClass basic(std::size_t n, const Integer& kappa);

  const NewtonPoint& nu() const { return nu_; }
  const Integer& kappa() const { return kappa_; }
  std::size_t rank() const { return nu_.rank(); }

  friend bool operator==(const IsoClass&, const IsoClass&) = default;
  friend bool operator<(const IsoClass& a, const IsoClass& b) { return a.nu_ < b.nu_; }

 private:
  NewtonPoint nu_;
  Integer kappa_;
};

/// <rho, nu> and <2 rho, nu> for the standard rho of GL_n.
Rational pair_rho(const NewtonPoint& nu);
Rational pair_two_rho(const NewtonPoint& nu);

/// nu_a - nu_b coordinatewise.
std::vector<Rational> difference(const NewtonPoint& a, const NewtonPoint& b);

/// a <= b: equal Kottwitz points and the polygon of a lies on or below that
/// of b.
bool dominance_leq(const IsoClass& a, const IsoClass& b);

/// n minus the number of blocks of the slope decomposition; a run of slope
/// p/q (lowest terms) of length m q contributes m blocks.
int defect(const IsoClass& b);

/// Common length of all maximal chains from a to b in B(G):
/// <rho, nu_b - nu_a> + (defect(a) - defect(b)) / 2.
/// Throws Error(not_comparable) unless a <= b.
Integer chain_length(const IsoClass& a, const IsoClass& b);

struct PosetLimits {
  Rational max_gap = 64;  // bound on <rho, nu_b - nu_a>
  std::size_t max_nodes = 2'000'000;
};

/// Every class c with a <= c <= b, sorted. Throws Error(limit_exceeded) when
/// either bound in `limits` is hit and Error(not_comparable) unless a <= b.
std::vector<IsoClass> interval(const IsoClass& a, const IsoClass& b, const PosetLimits& limits = {});

using Chain = std::vector<IsoClass>;

/// Maximal chains a = c_0 < c_1 < ... < c_m = b of the Hasse diagram of
/// interval(a, b). For a == b the result is the single chain {a}.
std::vector<Chain> maximal_chains(const IsoClass& a, const IsoClass& b, const PosetLimits& limits = {});

}  // namespace newton_strata
