#pragma once

// The check suites behind `monoidkit check` and the acceptance runner.
// Each suite exercises one acceptance criterion over the corpus monoids
// and reports pass/fail with a one-line summary.

#include <string>
#include <utility>
#include <vector>

#include "monoidkit/monoid.hpp"

namespace monoidkit::suites {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

// the corpus the acceptance criteria quantify over
std::vector<std::pair<std::string, FiniteMonoid>> corpus();

const std::vector<std::string>& acceptance_suite_names();
bool is_suite_name(const std::string& name);  // acceptance names plus "negative"

SuiteResult run_suite(const std::string& name);
std::vector<SuiteResult> run_acceptance();

}  // namespace monoidkit::suites
