#pragma once

// Newton strata of Iwahori double cosets for superregular elements: generic
// Newton points and cordiality via quantum Bruhat graph paths, the single
// reduction step x -> (s x, s x sigma(s)), the search for reduction triples
// producing non-equidimensional strata, and the full analysis of one triple.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "newton_strata/affine.hpp"
#include "newton_strata/newton.hpp"
#include "newton_strata/qbg.hpp"
#include "newton_strata/weyl.hpp"

namespace newton_strata {

struct TripleCandidate {
  WeylElement v;
  WeylElement w;
  int s = 0;
  DiagramAutomorphism sigma;

  friend bool operator==(const TripleCandidate&, const TripleCandidate&) = default;
};

/// nu_x = dominant(mu - wt(w^{-1} => v)) for x = v t^mu w with mu dominant and
/// superregular for `threshold`; kappa = sum(mu).
///
/// Errors: twisted_unsupported (sigma != id), non_dominant_translation,
/// not_superregular (threshold test fails, or mu - wt is not dominant).
IsoClass generic_newton_point(const AffineElement& x, const DiagramAutomorphism& sigma,
                              const QuantumBruhatGraph& graph, std::int64_t threshold);

/// The path criterion alone: d(w^{-1}, v) == l(sigma^{-1}(w) v). Valid for
/// every (v, w); no regularity assumption is checked.
bool cordial_by_paths(const WeylElement& v, const WeylElement& w, const DiagramAutomorphism& sigma,
                      const QuantumBruhatGraph& graph);

/// Cordiality of a superregular x. Also checks the equivalent length identity
/// l(x) - l(eta(x)) = <2rho, nu_x> - defect(b_x) and throws std::logic_error
/// if the two criteria disagree.
bool is_cordial(const AffineElement& x, const DiagramAutomorphism& sigma, const QuantumBruhatGraph& graph,
                std::int64_t threshold);

/// d_x(b) = (l(x) + l(eta(x)) - defect(b) - <2rho, nu_b>) / 2.
/// Throws Error(kappa_mismatch) if kappa(b) != kappa(x).
Rational virtual_dimension(const AffineElement& x, const IsoClass& b, const DiagramAutomorphism& sigma);

struct ReductionCheck {
  bool descent_sv = false;        // l(s v) < l(v)
  bool ascent_w_sigma_s = false;  // l(w sigma(s)) > l(w)
  bool length_drop = false;       // l(sigma^{-1}(w) s v) < l(sigma^{-1}(w) v) - 1
  bool full_support_wv = false;   // supp_sigma(sigma^{-1}(w) v) = S
  bool full_support_wsv = false;  // supp_sigma(sigma^{-1}(w) s v) = S
  bool cordial_sx = false;        // d(w^{-1}, s v) = l(sigma^{-1}(w) s v)
  bool cordial_sxs = false;       // d((w sigma(s))^{-1}, s v) = l(sigma^{-1}(w) v)

  bool passed() const {
    return descent_sv && ascent_w_sigma_s && length_drop && full_support_wv && full_support_wsv && cordial_sx &&
           cordial_sxs;
  }
};

ReductionCheck check_reduction_conditions(const TripleCandidate& candidate, const QuantumBruhatGraph& graph);

/// All triples (v, w, s) passing check_reduction_conditions, ordered
/// lexicographically by (reduced word of v, reduced word of w, s). Work is
/// split over `threads` workers (0 picks worker_count()).
std::vector<TripleCandidate> search_triples(const QuantumBruhatGraph& graph, const DiagramAutomorphism& sigma,
                                            unsigned threads = 0);

struct ClassRecord {
  IsoClass cls;
  std::vector<std::string> labels;
  bool in_bx = false;     // stratum in IxI non-empty
  bool in_noneq = false;  // components of different codimension
  Rational d_sx{};
  Rational d_sxs{};
  std::optional<Rational> dim_xx{};  // empty outside B(G)_x
  std::vector<Integer> component_codims{};  // ascending, without repetition
  /// Covered by [b_x]: maximal in B(G)_x without the generic class.
  bool comaximal = false;
  /// l(x) - <2rho, nu> - 1 for comaximal classes.
  std::optional<Rational> comaximal_dim{};
};

struct ElementSummary {
  AffineElement element;
  std::int64_t length;
  std::int64_t eta_length;
  IsoClass generic;
  bool cordial;
};

struct AnalysisReport {
  TripleCandidate candidate;
  Coweight mu;
  std::int64_t threshold = 0;
  ReductionCheck conditions;

  ElementSummary x;
  ElementSummary sx;
  ElementSummary sxs;

  IsoClass b_x;  // dominance maximum of the generic classes of s x and s x sigma(s)
  bool b_x_matches_formula = false;
  Rational d_difference{};  // d_{sxs}(b) - d_{sx}(b), independent of b

  std::vector<ClassRecord> classes{};
  std::vector<Chain> chains{};  // maximal chains [b_sxs] -> [b_x]
  Integer chain_length{};
  /// Some queried class lies in both B(G)_sx and B(G)_sxs, so its stratum has
  /// components of different codimension.
  bool mixed_codim_certificate = false;
};

/// Runs the full pipeline for one reduction triple.
///
/// Errors: invalid_argument (triple fails the reduction conditions, or
/// (v, mu, w) is not a normal form), not_superregular, kappa_mismatch (for
/// queried classes), incomparable_tops.
AnalysisReport analyze(const TripleCandidate& candidate, const Coweight& mu, std::int64_t threshold,
                       const std::vector<IsoClass>& extra_classes, const QuantumBruhatGraph& graph,
                       const PosetLimits& limits = {});

}  // namespace newton_strata
