#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace valuator {

// One acceptance criterion outcome: a pass/fail verdict, the wall time it
// took against its budget, and either summary statistics or the first
// failure found.
struct CriterionOutcome {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;
};

// Runs the full acceptance battery, streaming one line per criterion to
// `out` as it completes.  Returns every outcome; the battery passes iff all
// criteria pass.  `seed` drives decomposition sampling and the random
// functionals and is recorded in the output.
std::vector<CriterionOutcome> run_acceptance(std::ostream& out, unsigned seed = 2027);

}  // namespace valuator
