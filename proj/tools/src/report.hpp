#pragma once

// JSON and plain-text renderings of library results. JSON objects keep
// insertion order so identical inputs give byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "newton_strata/isocrystal.hpp"
#include "newton_strata/newton.hpp"
#include "newton_strata/strata.hpp"

namespace newton_strata::cli {

using Json = nlohmann::ordered_json;

/// Common header: tool name, library version, command and config hash.
Json report_header(const std::string& command, const std::string& canonical_config);

Json to_json(const NewtonPoint& nu);
Json to_json(const IsoClass& b);
Json to_json(const TripleCandidate& c);
Json to_json(const ReductionCheck& check);
Json to_json(const AnalysisReport& report);
Json to_json(const SampleSummary& summary);

std::string triple_line(const TripleCandidate& c);
std::string to_text(const AnalysisReport& report);
std::string to_text(const SampleSummary& summary);

/// "(a, b, c)".
std::string paren(const NewtonPoint& nu);

}  // namespace newton_strata::cli
