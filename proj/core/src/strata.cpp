#include "newton_strata/strata.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "newton_strata/errors.hpp"
#include "newton_strata/parallel.hpp"

namespace newton_strata {

namespace {

void require_graph_rank(int dim, const QuantumBruhatGraph& graph) {
  if (dim != graph.cartan().dim()) throw Error(ErrorCode::rank_mismatch, "element and graph have different ranks");
}

Integer to_integer(const Rational& value, const char* what) {
  if (!is_integer(value)) throw std::logic_error(std::string("non-integral ") + what + ": " + format_rational(value));
  return boost::multiprecision::numerator(value);
}

}  // namespace

IsoClass generic_newton_point(const AffineElement& x, const DiagramAutomorphism& sigma,
                              const QuantumBruhatGraph& graph, std::int64_t threshold) {
  if (!sigma.is_identity()) {
    throw Error(ErrorCode::twisted_unsupported, "generic Newton points are only implemented for sigma = id");
  }
  require_graph_rank(x.dim(), graph);
  if (!is_superregular(x, threshold)) {
    throw Error(ErrorCode::not_superregular,
                "translation part of " + format_normal_form(x) + " is not superregular for M = " +
                    std::to_string(threshold));
  }
  const auto& nf = x.normal_form();
  const Coweight weight = graph.min_path_weight(nf.w.inverse(), nf.v);
  Coweight nu = nf.mu;
  for (std::size_t k = 0; k < nu.size(); ++k) nu[k] -= weight[k];
  if (!is_dominant(nu)) {
    throw Error(ErrorCode::not_superregular,
                "mu - wt(w^-1 => v) = (" + format_coweight(nu) + ") is not dominant; increase regularity");
  }
  return IsoClass(NewtonPoint::from_coweight(nu));
}

bool cordial_by_paths(const WeylElement& v, const WeylElement& w, const DiagramAutomorphism& sigma,
                      const QuantumBruhatGraph& graph) {
  const WeylElement twisted_w = sigma.inverse().apply(w);
  return graph.distance(twisted_w.inverse(), v) == (twisted_w * v).length();
}

bool is_cordial(const AffineElement& x, const DiagramAutomorphism& sigma, const QuantumBruhatGraph& graph,
                std::int64_t threshold) {
  const IsoClass b = generic_newton_point(x, sigma, graph, threshold);
  const auto& nf = x.normal_form();
  const bool by_paths = cordial_by_paths(nf.v, nf.w, sigma, graph);
  const int def = defect(b);
  if (def == 0) {
    const Rational lhs = Rational(x.length() - eta(x, sigma).length());
    const bool by_lengths = lhs == pair_two_rho(b.nu()) - def;
    if (by_lengths != by_paths) {
      throw std::logic_error("cordiality criteria disagree for " + format_normal_form(x));
    }
  }
  return by_paths;
}

Rational virtual_dimension(const AffineElement& x, const IsoClass& b, const DiagramAutomorphism& sigma) {
  if (b.rank() != static_cast<std::size_t>(x.dim())) {
    throw Error(ErrorCode::rank_mismatch, "class and element have different ranks");
  }
  if (b.kappa() != Integer(x.kappa())) {
    throw Error(ErrorCode::kappa_mismatch, "class has kappa " + b.kappa().str() + " but the element has kappa " +
                                               std::to_string(x.kappa()));
  }
  const Rational total = Rational(x.length() + eta(x, sigma).length() - defect(b)) - pair_two_rho(b.nu());
  return total / 2;
}

ReductionCheck check_reduction_conditions(const TripleCandidate& c, const QuantumBruhatGraph& graph) {
  const int dim = graph.cartan().dim();
  require_graph_rank(c.v.dim(), graph);
  require_graph_rank(c.w.dim(), graph);
  if (c.s < 1 || c.s >= dim) throw Error(ErrorCode::invalid_argument, "simple index out of range");

  const WeylElement s = WeylElement::simple_reflection(dim, c.s);
  const WeylElement sigma_s = WeylElement::simple_reflection(dim, c.sigma(c.s));
  const WeylElement sv = s * c.v;
  const WeylElement w_sigma_s = c.w * sigma_s;
  const DiagramAutomorphism sigma_inv = c.sigma.inverse();
  const WeylElement tw = sigma_inv.apply(c.w);
  const WeylElement wv = tw * c.v;
  const WeylElement wsv = tw * sv;
  const std::size_t full = static_cast<std::size_t>(dim - 1);

  ReductionCheck check;
  check.descent_sv = sv.length() < c.v.length();
  check.ascent_w_sigma_s = w_sigma_s.length() > c.w.length();
  check.length_drop = wsv.length() < wv.length() - 1;
  check.full_support_wv = sigma_support(wv, c.sigma).size() == full;
  check.full_support_wsv = sigma_support(wsv, c.sigma).size() == full;
  check.cordial_sx = graph.distance(tw.inverse(), sv) == wsv.length();
  check.cordial_sxs = graph.distance(sigma_inv.apply(w_sigma_s).inverse(), sv) == wv.length();
  return check;
}

std::vector<TripleCandidate> search_triples(const QuantumBruhatGraph& graph, const DiagramAutomorphism& sigma,
                                            unsigned threads) {
  const std::size_t count = graph.size();
  const int rank = graph.cartan().rank();
  if (sigma.rank() != rank) throw Error(ErrorCode::rank_mismatch, "automorphism and graph ranks differ");

  std::vector<TripleCandidate> found;
  std::mutex found_mutex;
  parallel_for(count * count, threads, [&](std::size_t pair) {
    const WeylElement& v = graph.vertex(pair / count);
    const WeylElement& w = graph.vertex(pair % count);
    std::vector<TripleCandidate> local;
    for (int s = 1; s <= rank; ++s) {
      // Cheap descent test first: it rules out most of the space.
      if (!v.has_left_descent(s)) continue;
      TripleCandidate candidate{v, w, s, sigma};
      if (check_reduction_conditions(candidate, graph).passed()) local.push_back(std::move(candidate));
    }
    if (local.empty()) return;
    std::lock_guard lock(found_mutex);
    found.insert(found.end(), local.begin(), local.end());
  });

  std::vector<std::tuple<Word, Word, int, std::size_t>> keys;
  keys.reserve(found.size());
  for (std::size_t k = 0; k < found.size(); ++k) {
    keys.emplace_back(found[k].v.reduced_word(), found[k].w.reduced_word(), found[k].s, k);
  }
  std::sort(keys.begin(), keys.end());
  std::vector<TripleCandidate> ordered;
  ordered.reserve(found.size());
  for (const auto& key : keys) ordered.push_back(found[std::get<3>(key)]);
  return ordered;
}

AnalysisReport analyze(const TripleCandidate& candidate, const Coweight& mu, std::int64_t threshold,
                       const std::vector<IsoClass>& extra_classes, const QuantumBruhatGraph& graph,
                       const PosetLimits& limits) {
  if (threshold < 0) throw Error(ErrorCode::invalid_argument, "M must be non-negative");
  if (mu.size() != static_cast<std::size_t>(graph.cartan().dim())) {
    throw Error(ErrorCode::rank_mismatch, "mu has the wrong number of coordinates");
  }
  if (!is_dominant(mu)) throw Error(ErrorCode::non_dominant_translation, "mu must be dominant");

  const ReductionCheck conditions = check_reduction_conditions(candidate, graph);
  if (!conditions.passed()) {
    throw Error(ErrorCode::invalid_argument, "triple does not satisfy the reduction conditions");
  }

  const auto& sigma = candidate.sigma;
  const AffineElement x = AffineElement::from_normal_form(candidate.v, mu, candidate.w);
  if (!(x.normal_form() == NormalForm{candidate.v, mu, candidate.w})) {
    throw Error(ErrorCode::invalid_argument, "(v, mu, w) is not a normal form");
  }

  const auto summarize = [&](const AffineElement& y) {
    return ElementSummary{y, y.length(), eta(y, sigma).length(), generic_newton_point(y, sigma, graph, threshold),
                          is_cordial(y, sigma, graph, threshold)};
  };
  ElementSummary sum_x = summarize(x);
  ElementSummary sum_sx = summarize(mult_simple(Side::left, candidate.s, x).element);
  ElementSummary sum_sxs = summarize(conjugate_simple(candidate.s, x, sigma));

  const bool sxs_below = dominance_leq(sum_sxs.generic, sum_sx.generic);
  const bool sx_below = dominance_leq(sum_sx.generic, sum_sxs.generic);
  if (!sxs_below && !sx_below) {
    throw Error(ErrorCode::incomparable_tops, "[" + sum_sx.generic.nu().to_string() + "] and [" +
                                                  sum_sxs.generic.nu().to_string() + "] are incomparable");
  }
  IsoClass b_x = sxs_below ? sum_sx.generic : sum_sxs.generic;

  AnalysisReport report{.candidate = candidate,
                        .mu = mu,
                        .threshold = threshold,
                        .conditions = conditions,
                        .x = std::move(sum_x),
                        .sx = std::move(sum_sx),
                        .sxs = std::move(sum_sxs),
                        .b_x = std::move(b_x)};
  const IsoClass& top_sx = report.sx.generic;
  const IsoClass& top_sxs = report.sxs.generic;
  report.b_x_matches_formula = report.b_x == report.x.generic;
  report.d_difference =
      Rational(report.sxs.length + report.sxs.eta_length - report.sx.length - report.sx.eta_length) / 2;

  // Queried classes, first occurrence wins the position.
  std::vector<ClassRecord> records;
  const auto add = [&](const IsoClass& c, const std::string& label) {
    if (c.rank() != mu.size()) throw Error(ErrorCode::rank_mismatch, "queried class has the wrong rank");
    if (c.kappa() != Integer(x.kappa())) {
      throw Error(ErrorCode::kappa_mismatch, "queried class [" + c.nu().to_string() + "] has kappa " +
                                                 c.kappa().str() + ", expected " + std::to_string(x.kappa()));
    }
    for (auto& record : records) {
      if (record.cls == c) {
        record.labels.push_back(label);
        return;
      }
    }
    ClassRecord record{.cls = c, .labels = {label}};
    records.push_back(std::move(record));
  };
  add(report.b_x, "b_x");
  add(top_sx, "b_sx");
  add(top_sxs, "b_sxs");
  add(IsoClass::basic(mu.size(), Integer(x.kappa())), "basic");
  const IsoClass& lower_top = sxs_below ? top_sxs : top_sx;
  for (const auto& c : interval(lower_top, report.b_x, limits)) add(c, "interval");
  for (const auto& c : extra_classes) add(c, "query");

  const Integer length_x = report.x.length;
  for (auto& record : records) {
    const IsoClass& b = record.cls;
    const bool in_sx = dominance_leq(b, top_sx);
    const bool in_sxs = dominance_leq(b, top_sxs);
    record.in_bx = in_sx || in_sxs;
    record.in_noneq = in_sx && in_sxs;
    record.d_sx = virtual_dimension(report.sx.element, b, sigma);
    record.d_sxs = virtual_dimension(report.sxs.element, b, sigma);
    const Rational base = Rational(length_x) - pair_two_rho(b.nu()) - 1;
    if (in_sxs) {
      record.dim_xx = record.d_sxs + 1;
      record.component_codims.push_back(to_integer(base - record.d_sxs, "codimension"));
    }
    if (in_sx) {
      if (!in_sxs) record.dim_xx = record.d_sx + 1;
      record.component_codims.push_back(to_integer(base - record.d_sx, "codimension"));
    }
    std::sort(record.component_codims.begin(), record.component_codims.end());
    record.component_codims.erase(std::unique(record.component_codims.begin(), record.component_codims.end()),
                                  record.component_codims.end());
    if (record.in_bx && !(b == report.b_x) && chain_length(b, report.b_x) == 1) {
      record.comaximal = true;
      record.comaximal_dim = base;
    }
  }
  report.classes = std::move(records);
  report.mixed_codim_certificate = std::any_of(report.classes.begin(), report.classes.end(),
                                         [](const ClassRecord& r) { return r.in_noneq; });

  report.chains = maximal_chains(top_sxs, report.b_x, limits);
  report.chain_length = chain_length(top_sxs, report.b_x);
  return report;
}

}  // namespace newton_strata
