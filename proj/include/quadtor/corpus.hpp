#pragma once

#include <string>
#include <vector>

#include "quadtor/elliptic.hpp"

namespace quadtor {

struct CorpusEntry {
  std::string label;
  FieldDesc K;
  CurveK E;
};

// Regression corpus for the growth classifier: the two nine-torsion curves
// over their fields, the one-parameter seven-torsion family at four
// parameter values over every base field, and twenty seeded small random
// curves with trivial two-torsion per field.  Deterministic across runs.
std::vector<CorpusEntry> growth_corpus();

}  // namespace quadtor
