#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include "newton_strata/errors.hpp"
#include "newton_strata/isocrystal.hpp"
#include "newton_strata/qbg.hpp"
#include "newton_strata/run_config.hpp"
#include "newton_strata/strata.hpp"
#include "report.hpp"

namespace newton_strata::cli {

namespace {

// QBG tables are quadratic in |W|; rank 5 (720 elements) is comfortable.
constexpr int kMaxGraphRank = 5;

void emit(const Output& output, const std::string& text) {
  if (output.path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(output.path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write " + output.path);
  out << text;
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

void require_graph_rank(int rank) {
  if (rank < 1 || rank > kMaxGraphRank) {
    throw Error(ErrorCode::invalid_argument, "rank must be in 1.." + std::to_string(kMaxGraphRank));
  }
}

DiagramAutomorphism parse_sigma(const std::string& text, const CartanData& cartan) {
  if (text.empty()) return DiagramAutomorphism::identity(cartan.rank());
  return DiagramAutomorphism::from_image(parse_word(text), cartan);
}

using TripleKey = std::tuple<std::vector<std::uint8_t>, std::vector<std::uint8_t>, int>;

TripleKey key_of(const WeylElement& v, const WeylElement& w, int s) { return {v.one_line(), w.one_line(), s}; }

struct FixtureRow {
  std::string line;
  TripleKey key;
};

std::vector<FixtureRow> read_fixture(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read fixture " + path);
  std::vector<FixtureRow> rows;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.rfind("v;", 0) == 0) continue;
    std::vector<std::string> fields;
    std::stringstream split(line);
    for (std::string field; std::getline(split, field, ';');) fields.push_back(field);
    const std::string where = path + ":" + std::to_string(number);
    if (fields.size() != 3) throw Error(ErrorCode::parse_error, where + ": expected v;w;s");
    try {
      const Word v_word = parse_word(fields[0]);
      const Word w_word = parse_word(fields[1]);
      const Word s_word = parse_word(fields[2]);
      if (s_word.size() != 1) throw Error(ErrorCode::parse_error, "s must be a single index");
      const WeylElement v = WeylElement::from_word(dim, v_word);
      const WeylElement w = WeylElement::from_word(dim, w_word);
      if (static_cast<std::size_t>(v.length()) != v_word.size() || static_cast<std::size_t>(w.length()) != w_word.size()) {
        throw Error(ErrorCode::parse_error, "word is not reduced");
      }
      rows.push_back({line, key_of(v, w, s_word.front())});
    } catch (const Error& e) {
      throw Error(ErrorCode::parse_error, where + ": " + e.what());
    }
  }
  return rows;
}

}  // namespace

int run_search(const SearchOptions& o) {
  if (o.type != "A") throw Error(ErrorCode::invalid_argument, "only type A is supported");
  require_graph_rank(o.rank);
  const CartanData& cartan = CartanData::type_a_cached(o.rank);
  const DiagramAutomorphism sigma = parse_sigma(o.sigma, cartan);
  const QuantumBruhatGraph graph(cartan);
  const auto triples = search_triples(graph, sigma, o.threads);

  std::string canonical = "search\ntype=A\nrank=" + std::to_string(o.rank) + "\nsigma=";
  for (int i : sigma.image()) canonical += std::to_string(i) + " ";
  canonical += "\n";

  if (o.output.format == "json") {
    Json out = report_header("search", canonical);
    out["type"] = "A";
    out["rank"] = o.rank;
    out["sigma"] = sigma.image();
    Json list = Json::array();
    for (const auto& t : triples) list.push_back(to_json(t));
    out["count"] = triples.size();
    out["triples"] = list;
    emit(o.output, dump(out));
  } else {
    std::string text = "v;w;s\n";
    for (const auto& t : triples) text += triple_line(t) + "\n";
    emit(o.output, text);
  }

  if (o.fixture.empty()) return kOk;
  const auto rows = read_fixture(o.fixture, cartan.dim());
  std::set<TripleKey> found;
  for (const auto& t : triples) found.insert(key_of(t.v, t.w, t.s));
  std::set<TripleKey> expected;
  int mismatches = 0;
  for (const auto& row : rows) {
    if (!expected.insert(row.key).second) {
      std::cerr << "duplicate fixture row: " << row.line << "\n";
      ++mismatches;
    }
    if (!found.count(row.key)) {
      std::cerr << "missing: " << row.line << "\n";
      ++mismatches;
    }
  }
  for (const auto& t : triples) {
    if (!expected.count(key_of(t.v, t.w, t.s))) {
      std::cerr << "unexpected: " << triple_line(t) << "\n";
      ++mismatches;
    }
  }
  std::cerr << triples.size() << " triples found, " << rows.size() << " in fixture: "
            << (mismatches ? "MISMATCH" : "match") << "\n";
  return mismatches ? kFixtureMismatch : kOk;
}

int run_analyze(const AnalyzeOptions& o) {
  const RunConfig config = load_run_config(o.config);
  require_graph_rank(config.rank);
  const QuantumBruhatGraph graph(config.cartan());
  if (!config.mu) throw Error(ErrorCode::invalid_argument, "config is missing element.mu");
  const auto report =
      analyze(config.candidate(), *config.mu, config.require_threshold(), config.class_list(), graph);

  if (o.output.format == "json") {
    Json out = report_header("analyze", config.canonical());
    out["analysis"] = to_json(report);
    emit(o.output, dump(out));
  } else {
    emit(o.output, to_text(report));
  }
  return kOk;
}

int run_qbg(const QbgOptions& o) {
  require_graph_rank(o.rank);
  const CartanData& cartan = CartanData::type_a_cached(o.rank);
  const QuantumBruhatGraph graph(cartan);
  if (o.dot) {
    emit(o.output, graph.to_dot());
    return kOk;
  }
  const WeylElement from = WeylElement::from_word(cartan.dim(), parse_word(o.from));
  const WeylElement to = WeylElement::from_word(cartan.dim(), parse_word(o.to));
  const int distance = graph.distance(from, to);
  const Coweight weight = graph.min_path_weight(from, to);

  if (o.output.format == "json") {
    const std::string canonical = "qbg-dist\nrank=" + std::to_string(o.rank) + "\nfrom=" +
                                  format_word(from.reduced_word()) + "\nto=" + format_word(to.reduced_word()) + "\n";
    Json out = report_header("qbg-dist", canonical);
    out["from"] = format_word(from.reduced_word());
    out["to"] = format_word(to.reduced_word());
    out["distance"] = distance;
    out["weight"] = weight;
    emit(o.output, dump(out));
  } else {
    emit(o.output, "distance " + std::to_string(distance) + "\nweight " + format_coweight(weight) + "\n");
  }
  return kOk;
}

int run_sample(const SampleOptions& o) {
  RunConfig config = load_run_config(o.config);
  if (o.samples) config.sampler.samples = *o.samples;
  if (o.prime) config.sampler.prime = *o.prime;
  if (o.seed) config.sampler.seed = *o.seed;
  if (o.deg_cap) config.sampler.deg_cap = *o.deg_cap;
  if (o.no_recheck) config.sampler.stability_recheck = false;
  config.sampler.threads = o.threads;
  validate(config);

  const AffineElement x = config.element();
  const SampleSummary summary = estimate_generic_newton(x, config.sampler);

  // When the formula applies, check the specialisation bound.
  std::optional<IsoClass> formula;
  if (config.threshold && config.automorphism().is_identity() && config.rank <= kMaxGraphRank) {
    const QuantumBruhatGraph graph(config.cartan());
    formula = generic_newton_point(x, config.automorphism(), graph, *config.threshold);
  }
  std::uint64_t above = 0;
  for (const auto& [point, count] : summary.histogram) {
    if (formula && !dominance_leq(point, *formula)) above += count;
  }

  if (o.output.format == "json") {
    Json out = report_header("sample", config.canonical());
    out["element"] = format_normal_form(x);
    out["sampling"] = to_json(summary);
    if (formula) {
      out["formula"] = to_json(formula->nu());
      out["samples_not_below_formula"] = above;
      out["max_equals_formula"] = summary.max_points.size() == 1 && summary.max_points.front() == *formula;
    }
    emit(o.output, dump(out));
  } else {
    emit(o.output, to_text(summary));
  }

  std::cerr << "maximal:";
  for (const auto& point : summary.max_points) std::cerr << " " << paren(point.nu());
  if (formula) std::cerr << "; formula " << paren(formula->nu());
  std::cerr << "\n";
  if (summary.recheck_mismatches > 0) {
    std::cerr << "error: " << summary.recheck_mismatches << " samples changed under the precision recheck\n";
    return kPrecision;
  }
  if (above > 0) {
    std::cerr << "error: " << above << " samples are not below the formula point\n";
    return kPrecision;
  }
  return kOk;
}

int run_poset(const PosetOptions& o) {
  const IsoClass lower(NewtonPoint::parse(o.lower));
  const IsoClass upper(NewtonPoint::parse(o.upper));
  PosetLimits limits;
  limits.max_gap = parse_rational(o.max_gap);
  const auto members = interval(lower, upper, limits);
  const auto chains = maximal_chains(lower, upper, limits);
  const Integer length = chain_length(lower, upper);

  if (o.output.format == "json") {
    const std::string canonical =
        "poset\nlower=" + lower.nu().to_string() + "\nupper=" + upper.nu().to_string() + "\nmax_gap=" + o.max_gap + "\n";
    Json out = report_header("poset", canonical);
    out["lower"] = to_json(lower);
    out["upper"] = to_json(upper);
    out["chain_length"] = length.str();
    Json list = Json::array();
    for (const auto& c : members) {
      Json item = to_json(c);
      item["defect"] = defect(c);
      list.push_back(std::move(item));
    }
    out["interval"] = list;
    Json chain_list = Json::array();
    for (const auto& chain : chains) {
      Json steps = Json::array();
      for (const auto& c : chain) steps.push_back(to_json(c.nu()));
      chain_list.push_back(std::move(steps));
    }
    out["chains"] = chain_list;
    emit(o.output, dump(out));
  } else {
    std::ostringstream out;
    out << "interval (" << members.size() << " classes):\n";
    for (const auto& c : members) out << "  " << paren(c.nu()) << "  defect " << defect(c) << "\n";
    out << "chain length " << length << ", " << chains.size() << " maximal chains\n";
    for (const auto& chain : chains) {
      out << " ";
      for (std::size_t k = 0; k < chain.size(); ++k) out << (k ? " < " : " ") << paren(chain[k].nu());
      out << "\n";
    }
    emit(o.output, out.str());
  }
  return kOk;
}

}  // namespace newton_strata::cli
