#include "newton_strata/run_config.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "newton_strata/errors.hpp"

namespace newton_strata {

namespace {

namespace pt = boost::property_tree;

const std::set<std::string> kKnown = {
    "group.type",   "group.rank",      "group.sigma",       "element.v",        "element.w",
    "element.s",    "element.mu",      "element.M",         "element.kappa",    "sampler.prime",
    "sampler.samples", "sampler.seed", "sampler.deg_cap",   "sampler.stability_recheck", "classes.list",
};

// Strips surrounding quotes and a trailing "; comment". Inside quotes a ';'
// is part of the value.
std::string unquote(std::string value) {
  const auto first = value.find_first_not_of(" \t");
  value = first == std::string::npos ? std::string() : value.substr(first);
  if (!value.empty() && (value.front() == '"' || value.front() == '\'')) {
    const auto close = value.find(value.front(), 1);
    if (close == std::string::npos) throw Error(ErrorCode::parse_error, "unterminated quote in '" + value + "'");
    const auto rest = value.find_first_not_of(" \t", close + 1);
    if (rest != std::string::npos && value[rest] != ';' && value[rest] != '#') {
      throw Error(ErrorCode::parse_error, "text after closing quote in '" + value + "'");
    }
    return value.substr(1, close - 1);
  }
  if (const auto comment = value.find_first_of(";#"); comment != std::string::npos) value.erase(comment);
  const auto last = value.find_last_not_of(" \t");
  return last == std::string::npos ? std::string() : value.substr(0, last + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw Error(ErrorCode::parse_error, key + ": '" + text + "' is not an integer");
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw Error(ErrorCode::parse_error, key + ": expected true or false");
}

std::vector<int> parse_index_list(const std::string& key, const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) out.push_back(parse_number<int>(key, token));
  return out;
}

template <typename F>
auto wrap(const std::string& key, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), key + ": " + e.what());
  }
}

}  // namespace

const CartanData& RunConfig::cartan() const { return CartanData::type_a_cached(rank); }

DiagramAutomorphism RunConfig::automorphism() const {
  if (sigma.empty()) return DiagramAutomorphism::identity(rank);
  return DiagramAutomorphism::from_image(sigma, cartan());
}

TripleCandidate RunConfig::candidate() const {
  if (!v) throw Error(ErrorCode::invalid_argument, "config is missing element.v");
  if (!w) throw Error(ErrorCode::invalid_argument, "config is missing element.w");
  if (!s) throw Error(ErrorCode::invalid_argument, "config is missing element.s");
  const int dim = rank + 1;
  return TripleCandidate{WeylElement::from_word(dim, *v), WeylElement::from_word(dim, *w), *s, automorphism()};
}

AffineElement RunConfig::element() const {
  if (!v) throw Error(ErrorCode::invalid_argument, "config is missing element.v");
  if (!w) throw Error(ErrorCode::invalid_argument, "config is missing element.w");
  if (!mu) throw Error(ErrorCode::invalid_argument, "config is missing element.mu");
  const int dim = rank + 1;
  return AffineElement::from_normal_form(WeylElement::from_word(dim, *v), *mu, WeylElement::from_word(dim, *w));
}

std::int64_t RunConfig::require_threshold() const {
  if (!threshold) throw Error(ErrorCode::invalid_argument, "config is missing element.M");
  return *threshold;
}

std::vector<IsoClass> RunConfig::class_list() const {
  std::vector<IsoClass> out;
  out.reserve(classes.size());
  for (const auto& nu : classes) out.emplace_back(nu);
  return out;
}

std::string RunConfig::canonical() const {
  std::ostringstream out;
  out << "group.type=" << type << '\n' << "group.rank=" << rank << '\n';
  out << "group.sigma=";
  for (int i = 1; i <= rank; ++i) out << (i > 1 ? " " : "") << (sigma.empty() ? i : sigma[static_cast<std::size_t>(i - 1)]);
  out << '\n';
  if (v) out << "element.v=" << format_word(*v) << '\n';
  if (w) out << "element.w=" << format_word(*w) << '\n';
  if (s) out << "element.s=" << *s << '\n';
  if (mu) out << "element.mu=" << format_coweight(*mu) << '\n';
  if (threshold) out << "element.M=" << *threshold << '\n';
  if (kappa) out << "element.kappa=" << *kappa << '\n';
  out << "sampler.prime=" << sampler.prime << '\n';
  out << "sampler.samples=" << sampler.samples << '\n';
  out << "sampler.seed=" << sampler.seed << '\n';
  out << "sampler.deg_cap=" << sampler.deg_cap << '\n';
  out << "sampler.stability_recheck=" << (sampler.stability_recheck ? "true" : "false") << '\n';
  if (!classes.empty()) {
    out << "classes.list=";
    for (std::size_t k = 0; k < classes.size(); ++k) out << (k ? "; " : "") << classes[k].to_string();
    out << '\n';
  }
  return out.str();
}

RunConfig parse_run_config(std::string_view text) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(e.line()) + ": " + e.message());
  }

  std::map<std::string, std::string> values;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw Error(ErrorCode::parse_error, "key '" + section + "' outside a section");
    for (const auto& [key, leaf] : body) {
      const std::string full = section + "." + key;
      if (!kKnown.count(full)) throw Error(ErrorCode::parse_error, "unknown key " + full);
      values[full] = unquote(leaf.get_value<std::string>());
    }
  }
  const auto get = [&](const std::string& key) -> const std::string* {
    const auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };

  RunConfig config;
  if (const auto* t = get("group.type")) {
    if (*t != "A") throw Error(ErrorCode::invalid_argument, "group.type: only type A is supported");
  }
  const auto* rank = get("group.rank");
  if (!rank) throw Error(ErrorCode::parse_error, "config is missing group.rank");
  config.rank = parse_number<int>("group.rank", *rank);
  if (const auto* x = get("group.sigma")) config.sigma = parse_index_list("group.sigma", *x);

  if (const auto* x = get("element.v")) config.v = wrap("element.v", [&] { return parse_word(*x); });
  if (const auto* x = get("element.w")) config.w = wrap("element.w", [&] { return parse_word(*x); });
  if (const auto* x = get("element.s")) {
    std::string letter = *x;
    if (!letter.empty() && (letter.front() == 's' || letter.front() == 'S')) letter.erase(0, 1);
    config.s = parse_number<int>("element.s", letter);
  }
  if (const auto* x = get("element.mu")) config.mu = wrap("element.mu", [&] { return parse_coweight(*x); });
  if (const auto* x = get("element.M")) config.threshold = parse_number<std::int64_t>("element.M", *x);
  if (const auto* x = get("element.kappa")) config.kappa = parse_number<std::int64_t>("element.kappa", *x);

  if (const auto* x = get("sampler.prime")) config.sampler.prime = parse_number<std::uint32_t>("sampler.prime", *x);
  if (const auto* x = get("sampler.samples")) config.sampler.samples = parse_number<std::uint64_t>("sampler.samples", *x);
  if (const auto* x = get("sampler.seed")) config.sampler.seed = parse_number<std::uint64_t>("sampler.seed", *x);
  if (const auto* x = get("sampler.deg_cap")) config.sampler.deg_cap = parse_number<std::int64_t>("sampler.deg_cap", *x);
  if (const auto* x = get("sampler.stability_recheck")) {
    config.sampler.stability_recheck = parse_bool("sampler.stability_recheck", *x);
  }

  if (const auto* x = get("classes.list")) {
    std::size_t pos = 0;
    while (pos <= x->size()) {
      const auto semi = x->find(';', pos);
      const std::string item = unquote(x->substr(pos, semi == std::string::npos ? std::string::npos : semi - pos));
      if (!item.empty()) config.classes.push_back(wrap("classes.list", [&] { return NewtonPoint::parse(item); }));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
  }

  validate(config);
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_run_config(text.str());
}

void validate(const RunConfig& config) {
  if (config.type != 'A') throw Error(ErrorCode::invalid_argument, "only type A is supported");
  if (config.rank < 1 || config.rank > 7) throw Error(ErrorCode::invalid_argument, "group.rank must be in 1..7");
  if (!config.sigma.empty()) (void)config.automorphism();

  const auto check_word = [&](const char* key, const std::optional<Word>& word) {
    if (!word) return;
    for (int letter : *word) {
      if (letter < 1 || letter > config.rank) {
        throw Error(ErrorCode::invalid_argument,
                    std::string(key) + ": letter " + std::to_string(letter) + " is not a simple index");
      }
    }
  };
  check_word("element.v", config.v);
  check_word("element.w", config.w);
  if (config.s && (*config.s < 1 || *config.s > config.rank)) {
    throw Error(ErrorCode::invalid_argument, "element.s is not a simple index");
  }
  const auto dim = static_cast<std::size_t>(config.rank + 1);
  if (config.mu && config.mu->size() != dim) {
    throw Error(ErrorCode::invalid_argument, "element.mu must have " + std::to_string(dim) + " entries");
  }
  if (config.kappa && config.mu && std::accumulate(config.mu->begin(), config.mu->end(), std::int64_t{0}) != *config.kappa) {
    throw Error(ErrorCode::invalid_argument, "element.kappa differs from the sum of mu");
  }
  if (config.threshold && *config.threshold < 0) throw Error(ErrorCode::invalid_argument, "element.M must be >= 0");
  for (const auto& nu : config.classes) {
    if (nu.rank() != dim) throw Error(ErrorCode::invalid_argument, "classes.list: wrong number of slopes");
  }
  (void)LaurentPolyMatrix(1, config.sampler.prime);  // prime check
  if (config.sampler.samples == 0) throw Error(ErrorCode::invalid_argument, "sampler.samples must be positive");
  if (config.sampler.deg_cap < 0) throw Error(ErrorCode::invalid_argument, "sampler.deg_cap must be >= 0");
}

}  // namespace newton_strata
