#pragma once

// Monte-Carlo oracle for generic Newton points of GL_n. Elements of I x I are
// sampled as matrices of truncated Laurent series over F_p; since the
// coefficients are Frobenius-fixed, the Newton point of such a matrix is the
// Newton polygon of its characteristic polynomial.

#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "newton_strata/affine.hpp"
#include "newton_strata/newton.hpp"

namespace newton_strata {

/// sum_i coeffs[i] t^(low + i) with coefficients in [0, p). Normalised: the
/// first and last stored coefficients are non-zero, and zero has no
/// coefficients at all.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t low, std::vector<std::uint32_t> coeffs);
  static LaurentPoly monomial(std::int64_t degree, std::uint32_t coeff = 1);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest degree with a non-zero coefficient. Undefined for zero.
  std::int64_t valuation() const { return low_; }
  /// Highest degree with a non-zero coefficient. Undefined for zero.
  std::int64_t degree() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  std::uint32_t coefficient(std::int64_t degree) const;
  const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }

  /// Drops every coefficient of degree >= cap.
  LaurentPoly truncated(std::int64_t cap) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::int64_t low_ = 0;
  std::vector<std::uint32_t> coeffs_;
};

/// Square matrix over F_p((t)) known modulo t^cap: coefficients of degree
/// below cap are exact, the rest are unknown and not stored. cap == kExact
/// marks a matrix of Laurent polynomials known completely.
class LaurentPolyMatrix {
 public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

  /// Throws Error(invalid_argument) unless p is a prime below 2^16.
  LaurentPolyMatrix(int n, std::uint32_t p, std::int64_t cap = kExact);

  int size() const { return n_; }
  std::uint32_t prime() const { return p_; }
  std::int64_t cap() const { return cap_; }
  bool exact() const { return cap_ == kExact; }

  const LaurentPoly& operator()(int r, int c) const { return entries_[index(r, c)]; }
  /// Stores the entry truncated at cap().
  void set(int r, int c, LaurentPoly value);

  /// Minimal valuation over the non-zero entries; kExact for the zero matrix.
  std::int64_t min_valuation() const;
  /// Largest degree over the non-zero entries.
  std::int64_t max_degree() const;

  /// Same matrix known only modulo t^cap (no-op if cap >= cap()).
  LaurentPolyMatrix truncated(std::int64_t cap) const;

  /// Product; the result is known modulo t^c with
  /// c = min(cap(A) + minval(B), cap(B) + minval(A)).
  friend LaurentPolyMatrix operator*(const LaurentPolyMatrix& a, const LaurentPolyMatrix& b);

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * n_ + c); }

  int n_;
  std::uint32_t p_;
  std::int64_t cap_;
  std::vector<LaurentPoly> entries_;
};

struct SamplerConfig {
  std::uint32_t prime = 101;
  std::uint64_t samples = 2000;
  /// 0 selects precision_floor(x).
  std::int64_t deg_cap = 0;
  std::uint64_t seed = 0;
  /// Recompute every 20th sample with Iwahori factors extended to degree
  /// 2 * deg_cap and compare.
  bool stability_recheck = true;
  /// Workers; 0 picks worker_count().
  unsigned threads = 0;
};

/// 2 n max|mu_i| + n for the normal-form translation mu of x.
std::int64_t precision_floor(const AffineElement& x);

/// Monomial representative P_v diag(t^mu) P_w, with P_u e_i = e_{u(i)}.
LaurentPolyMatrix matrix_of(const AffineElement& x, std::uint32_t p);

/// Random element of the Iwahori subgroup, truncated at degree deg_cap:
/// unit diagonal, arbitrary entries below it and entries divisible by t above
/// it. The matrix is known modulo t^(deg_cap + 1).
LaurentPolyMatrix sample_iwahori(int n, std::uint32_t p, std::int64_t deg_cap, std::mt19937_64& rng);

/// Newton point from the lower convex hull of (k, val e_k), where e_k are the
/// characteristic polynomial coefficients (sums of principal k x k minors).
/// Throws Error(precision_loss) when some hull vertex or the position of an
/// unknown coefficient relative to the hull is within n of the truncation.
IsoClass newton_point_of_matrix(const LaurentPolyMatrix& m);

struct SampleSummary {
  std::vector<IsoClass> max_points;            // dominance-maximal sampled points
  std::map<IsoClass, std::uint64_t> histogram;
  std::uint64_t samples = 0;                   // kept samples
  std::uint64_t discarded = 0;                 // dropped after precision loss
  std::uint64_t rechecked = 0;
  std::uint64_t recheck_mismatches = 0;
  std::int64_t deg_cap = 0;
};

/// Samples i1 * matrix_of(x) * i2 and collects the Newton points.
///
/// Deterministic in cfg: sample k draws from an mt19937_64 seeded with
/// (cfg.seed, k), independently of the worker that runs it.
/// Errors: invalid_argument (bad prime, zero samples, deg_cap below the
/// floor), precision_loss (more than 10% of the samples discarded).
SampleSummary estimate_generic_newton(const AffineElement& x, const SamplerConfig& cfg);

}  // namespace newton_strata
