// newton_strata: command line front end.
//
// Exit status: 0 success, 2 invalid input or configuration, 3 fixture
// mismatch, 4 precision failure of the sampling oracle.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "newton_strata/errors.hpp"

using namespace newton_strata;
using namespace newton_strata::cli;

namespace {

void add_output(CLI::App* cmd, Output& output, std::vector<std::string> formats) {
  cmd->add_option("--format", output.format, "Output format")->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("-o,--output", output.path, "Write the report to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton strata combinatorics in Iwahori double cosets"};
  app.set_version_flag("--version", std::string("newton_strata ") + NEWTON_STRATA_VERSION);
  app.require_subcommand(1);

  SearchOptions search;
  auto* search_cmd = app.add_subcommand("search", "Enumerate reduction triples (v, w, s)");
  search_cmd->add_option("--type", search.type, "Root system type")->check(CLI::IsMember({"A"}));
  search_cmd->add_option("--rank", search.rank, "Rank of the root system");
  search_cmd->add_option("--sigma", search.sigma, "Diagram automorphism as images of 1..rank");
  search_cmd->add_option("--fixture", search.fixture, "CSV of expected triples (v;w;s); exit 3 on mismatch");
  search_cmd->add_option("--threads", search.threads, "Worker threads (0: automatic)");
  add_output(search_cmd, search.output, {"csv", "json"});

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of one triple");
  analyze_cmd->add_option("--config", analyze.config, "Run configuration")->required();
  add_output(analyze_cmd, analyze.output, {"text", "json"});

  QbgOptions qbg;
  auto* qbg_cmd = app.add_subcommand("qbg-dist", "Quantum Bruhat graph distance and path weight");
  qbg_cmd->add_option("--rank", qbg.rank, "Rank of type A");
  qbg_cmd->add_option("--from", qbg.from, "Source as a word in simple indices");
  qbg_cmd->add_option("--to", qbg.to, "Target as a word in simple indices");
  qbg_cmd->add_flag("--dot", qbg.dot, "Print the whole graph in Graphviz format");
  add_output(qbg_cmd, qbg.output, {"text", "json"});

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "Monte-Carlo Newton points of I x I");
  sample_cmd->add_option("--config", sample.config, "Run configuration")->required();
  sample_cmd->add_option("--samples", sample.samples, "Number of samples");
  sample_cmd->add_option("--prime", sample.prime, "Coefficient field size");
  sample_cmd->add_option("--seed", sample.seed, "RNG seed");
  sample_cmd->add_option("--deg-cap", sample.deg_cap, "Degree bound of the Iwahori factors");
  sample_cmd->add_flag("--no-recheck", sample.no_recheck, "Skip the doubled-precision recheck");
  sample_cmd->add_option("--threads", sample.threads, "Worker threads (0: automatic)");
  add_output(sample_cmd, sample.output, {"text", "json"});

  PosetOptions poset;
  auto* poset_cmd = app.add_subcommand("poset", "Interval and maximal chains between two classes");
  poset_cmd->add_option("--lower", poset.lower, "Lower Newton point, comma separated")->required();
  poset_cmd->add_option("--upper", poset.upper, "Upper Newton point, comma separated")->required();
  poset_cmd->add_option("--max-gap", poset.max_gap, "Refuse intervals with <rho, gap> above this");
  add_output(poset_cmd, poset.output, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*search_cmd) return run_search(search);
    if (*analyze_cmd) return run_analyze(analyze);
    if (*qbg_cmd) {
      if (!qbg.dot && (qbg.from.empty() && qbg.to.empty())) {
        std::cerr << "qbg-dist: give --from/--to or --dot\n";
        return kValidation;
      }
      return run_qbg(qbg);
    }
    if (*sample_cmd) return run_sample(sample);
    if (*poset_cmd) return run_poset(poset);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::precision_loss ? kPrecision : kValidation;
  }
  return kValidation;
}
