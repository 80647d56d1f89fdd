#include "common.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace test_support {

std::vector<TripleCandidate> fixture_triples() {
  std::ifstream in(NEWTON_STRATA_FIXTURE);
  if (!in) throw std::runtime_error("cannot open fixture " NEWTON_STRATA_FIXTURE);
  std::vector<TripleCandidate> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.rfind("v;", 0) == 0) continue;
    std::stringstream split(line);
    std::string v, w, s;
    std::getline(split, v, ';');
    std::getline(split, w, ';');
    std::getline(split, s, ';');
    out.push_back({WeylElement::from_word(5, parse_word(v)), WeylElement::from_word(5, parse_word(w)), std::stoi(s),
                   DiagramAutomorphism::identity(4)});
  }
  return out;
}

}  // namespace test_support
