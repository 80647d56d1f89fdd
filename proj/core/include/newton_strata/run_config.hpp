#pragma once

// Run configuration: an INI-style file with flat sections and quoted string
// values. Numbers that are not machine integers travel as strings.
//
//   [group]    type, rank, sigma (image of 1..rank, default identity)
//   [element]  v, w (words), s, mu (comma separated), M, kappa (optional)
//   [sampler]  prime, samples, seed, deg_cap, stability_recheck
//   [classes]  list = "nu; nu; ..." with each nu comma separated

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "newton_strata/affine.hpp"
#include "newton_strata/isocrystal.hpp"
#include "newton_strata/newton.hpp"
#include "newton_strata/strata.hpp"
#include "newton_strata/weyl.hpp"

namespace newton_strata {

struct RunConfig {
  char type = 'A';
  int rank = 0;
  std::vector<int> sigma;  // empty means identity

  std::optional<Word> v;
  std::optional<Word> w;
  std::optional<int> s;
  std::optional<Coweight> mu;
  std::optional<std::int64_t> threshold;  // M
  std::optional<std::int64_t> kappa;

  SamplerConfig sampler;
  std::vector<NewtonPoint> classes;

  const CartanData& cartan() const;
  DiagramAutomorphism automorphism() const;
  /// Throw Error(invalid_argument) naming the first missing key.
  TripleCandidate candidate() const;
  AffineElement element() const;
  std::int64_t require_threshold() const;
  std::vector<IsoClass> class_list() const;

  /// Stable "section.key=value" lines of every effective setting, used for
  /// hashing and echoed in reports.
  std::string canonical() const;
};

/// Throws Error(parse_error) for malformed input and Error(invalid_argument)
/// for well-formed but inconsistent settings.
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Checks word letters against the rank, the length of mu, kappa against
/// sum(mu), M >= 0 and the sampler settings. Called by the parsers; call it
/// again after editing a config in place.
void validate(const RunConfig& config);

}  // namespace newton_strata
