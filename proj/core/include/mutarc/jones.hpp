#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mutarc/diagram.hpp"
#include "mutarc/laurent.hpp"

namespace mutarc {

// Jones polynomial normalised by t V(L+) - t^{-1} V(L-) = (t^{-1/2} - t^{1/2}) V(L0)
// and V(unknot) = 1. Requires an oriented diagram.
LaurentPoly jones(const Diagram& d, int threads = 1);

struct SkeinTriple {
  Diagram plus;
  Diagram minus;
  Diagram zero;
  int sign;  // sign of the crossing in the input diagram
};

SkeinTriple skein_triple(const Diagram& d, int crossing);

enum class Verdict { NotSemiAlternating, Inconclusive };

struct ObstructionReport {
  HalfInteger breadth;
  Integer low_coeff;
  Integer high_coeff;
  int crossing_number = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> reasons;
};

// A semi-alternating diagram with n >= c crossings has breadth n - 1 and
// extreme coefficients +-1; any violation rules such diagrams out.
ObstructionReport semi_alternating_obstruction(const LaurentPoly& v, int crossing_number);

std::string to_string(Verdict v);
nlohmann::json to_json(const ObstructionReport& r);

}  // namespace mutarc
