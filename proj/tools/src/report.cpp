#include "report.hpp"

#include <sstream>

#include "digest.hpp"

namespace newton_strata::cli {

namespace {

std::string yes_no(bool value) { return value ? "yes" : "no"; }

Json summary_json(const ElementSummary& e) {
  Json out;
  out["normal_form"] = format_normal_form(e.element);
  out["raw"] = format_raw(e.element);
  out["length"] = e.length;
  out["eta_length"] = e.eta_length;
  out["generic_newton_point"] = to_json(e.generic.nu());
  out["defect"] = defect(e.generic);
  out["cordial"] = e.cordial;
  return out;
}

std::string element_line(const char* name, const ElementSummary& e) {
  std::ostringstream out;
  out << name << ": " << format_normal_form(e.element) << "\n"
      << "      length " << e.length << ", eta length " << e.eta_length << ", generic point " << paren(e.generic.nu())
      << ", cordial " << yes_no(e.cordial) << "\n";
  return out.str();
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (const auto& label : labels) out += (out.empty() ? "" : ",") + label;
  return out;
}

}  // namespace

Json report_header(const std::string& command, const std::string& canonical_config) {
  Json out;
  out["tool"] = "newton_strata";
  out["version"] = NEWTON_STRATA_VERSION;
  out["command"] = command;
  out["config_sha256"] = sha256_hex(canonical_config);
  return out;
}

// Slopes as [numerator, denominator] pairs.
Json to_json(const NewtonPoint& nu) {
  Json out = Json::array();
  for (const auto& slope : nu.slopes()) {
    out.push_back({boost::multiprecision::numerator(slope).convert_to<long long>(),
                   boost::multiprecision::denominator(slope).convert_to<long long>()});
  }
  return out;
}

Json to_json(const IsoClass& b) {
  Json out;
  out["newton_point"] = to_json(b.nu());
  out["kappa"] = b.kappa().str();
  return out;
}

Json to_json(const TripleCandidate& c) {
  Json out;
  out["v"] = format_word(c.v.reduced_word());
  out["w"] = format_word(c.w.reduced_word());
  out["s"] = c.s;
  return out;
}

Json to_json(const ReductionCheck& check) {
  Json out;
  out["descent_sv"] = check.descent_sv;
  out["ascent_w_sigma_s"] = check.ascent_w_sigma_s;
  out["length_drop"] = check.length_drop;
  out["full_support_wv"] = check.full_support_wv;
  out["full_support_wsv"] = check.full_support_wsv;
  out["cordial_sx"] = check.cordial_sx;
  out["cordial_sxs"] = check.cordial_sxs;
  out["passed"] = check.passed();
  return out;
}

Json to_json(const AnalysisReport& r) {
  Json out;
  out["triple"] = to_json(r.candidate);
  out["sigma"] = r.candidate.sigma.image();
  out["mu"] = r.mu;
  out["M"] = r.threshold;
  out["conditions"] = to_json(r.conditions);
  out["x"] = summary_json(r.x);
  out["sx"] = summary_json(r.sx);
  out["sxs"] = summary_json(r.sxs);
  out["b_x"] = to_json(r.b_x);
  out["b_x_matches_formula"] = r.b_x_matches_formula;
  Json diff = Json::array();
  for (const auto& d : difference(r.x.generic.nu(), r.sxs.generic.nu())) diff.push_back(format_rational(d));
  out["nu_x_minus_nu_sxs"] = diff;
  out["d_sxs_minus_d_sx"] = format_rational(r.d_difference);

  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json item = to_json(c.cls);
    item["labels"] = c.labels;
    item["in_Bx"] = c.in_bx;
    item["in_noneq"] = c.in_noneq;
    item["d_sx"] = format_rational(c.d_sx);
    item["d_sxs"] = format_rational(c.d_sxs);
    item["dim_Xx"] = c.dim_xx ? Json(format_rational(*c.dim_xx)) : Json(nullptr);
    Json codims = Json::array();
    for (const auto& k : c.component_codims) codims.push_back(k.str());
    item["component_codims"] = codims;
    item["comaximal"] = c.comaximal;
    item["comaximal_dim"] = c.comaximal_dim ? Json(format_rational(*c.comaximal_dim)) : Json(nullptr);
    classes.push_back(std::move(item));
  }
  out["classes"] = classes;

  Json chains = Json::array();
  for (const auto& chain : r.chains) {
    Json steps = Json::array();
    for (const auto& c : chain) steps.push_back(to_json(c.nu()));
    chains.push_back(std::move(steps));
  }
  out["chains"] = chains;
  out["chain_length"] = r.chain_length.str();
  out["mixed_codim_certificate"] = r.mixed_codim_certificate;
  return out;
}

Json to_json(const SampleSummary& s) {
  Json out;
  out["deg_cap"] = s.deg_cap;
  out["kept"] = s.samples;
  out["discarded"] = s.discarded;
  out["rechecked"] = s.rechecked;
  out["recheck_mismatches"] = s.recheck_mismatches;
  Json histogram = Json::array();
  for (const auto& [point, count] : s.histogram) {
    Json item = to_json(point);
    item["count"] = count;
    histogram.push_back(std::move(item));
  }
  out["histogram"] = histogram;
  Json max_points = Json::array();
  for (const auto& point : s.max_points) max_points.push_back(to_json(point.nu()));
  out["max_points"] = max_points;
  return out;
}

std::string paren(const NewtonPoint& nu) {
  std::string out = "(";
  for (std::size_t k = 0; k < nu.rank(); ++k) out += (k ? ", " : "") + format_rational(nu[k]);
  return out + ")";
}

std::string triple_line(const TripleCandidate& c) {
  return format_word(c.v.reduced_word()) + ";" + format_word(c.w.reduced_word()) + ";" + std::to_string(c.s);
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "triple   v = " << format_word(r.candidate.v.reduced_word()) << ", w = "
      << format_word(r.candidate.w.reduced_word()) << ", s = " << r.candidate.s << "\n";
  out << "mu       " << format_coweight(r.mu) << " (M = " << r.threshold << ")\n";
  out << element_line("x   ", r.x) << element_line("sx  ", r.sx) << element_line("sxs ", r.sxs);
  out << "[b_x]    " << paren(r.b_x.nu()) << (r.b_x_matches_formula ? " (agrees with the formula for x)" : " (DIFFERS from the formula for x)")
      << "\n";
  out << "d_sxs(b) - d_sx(b) = " << format_rational(r.d_difference) << " for every class\n\n";

  out << "classes:\n";
  for (const auto& c : r.classes) {
    out << "  " << paren(c.cls.nu()) << "  [" << join_labels(c.labels) << "]\n";
    if (!c.in_bx) {
      out << "      not in B(G)_x\n";
      continue;
    }
    out << "      in B(G)_x" << (c.in_noneq ? ", non-equidimensional" : "") << "; dim X_x(b) = "
        << format_rational(*c.dim_xx) << "; codimensions {";
    for (std::size_t k = 0; k < c.component_codims.size(); ++k) out << (k ? ", " : "") << c.component_codims[k];
    out << "}\n";
    if (c.comaximal) out << "      covered by [b_x]; expected dimension " << format_rational(*c.comaximal_dim) << "\n";
  }

  out << "\nmaximal chains [b_sxs] -> [b_x] (length " << r.chain_length << "): " << r.chains.size() << "\n";
  for (const auto& chain : r.chains) {
    out << " ";
    for (std::size_t k = 0; k < chain.size(); ++k) out << (k ? " < " : " ") << paren(chain[k].nu());
    out << "\n";
  }
  out << "\ncomponents of different codimension: " << yes_no(r.mixed_codim_certificate) << "\n";
  return out.str();
}

std::string to_text(const SampleSummary& s) {
  std::ostringstream out;
  out << "kept " << s.samples << " samples (" << s.discarded << " discarded), deg_cap " << s.deg_cap << ", "
      << s.rechecked << " rechecked with " << s.recheck_mismatches << " mismatches\n";
  for (const auto& [point, count] : s.histogram) out << "  " << paren(point.nu()) << "  " << count << "\n";
  out << "maximal:";
  for (const auto& point : s.max_points) out << " " << paren(point.nu());
  out << "\n";
  return out.str();
}

}  // namespace newton_strata::cli
