#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace newton_strata::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kFixtureMismatch = 3, kPrecision = 4 };

struct Output {
  std::string format = "text";  // text | json (search also accepts csv)
  std::string path;             // empty: stdout
};

struct SearchOptions {
  std::string type = "A";
  int rank = 4;
  std::string sigma;  // images of 1..rank, empty for identity
  std::string fixture;
  unsigned threads = 0;
  Output output{"csv", ""};
};

struct AnalyzeOptions {
  std::string config;
  Output output;
};

struct QbgOptions {
  int rank = 4;
  std::string from;
  std::string to;
  bool dot = false;
  Output output;
};

struct SampleOptions {
  std::string config;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint32_t> prime;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> deg_cap;
  bool no_recheck = false;
  unsigned threads = 0;
  Output output{"json", ""};
};

struct PosetOptions {
  std::string lower;
  std::string upper;
  std::string max_gap = "64";
  Output output;
};

int run_search(const SearchOptions& options);
int run_analyze(const AnalyzeOptions& options);
int run_qbg(const QbgOptions& options);
int run_sample(const SampleOptions& options);
int run_poset(const PosetOptions& options);

}  // namespace newton_strata::cli
