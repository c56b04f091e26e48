#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// The acceptance suites: each criterion runs at its stated size and
// tolerance (everything here is exact) and reports one pass/fail line.

namespace pipedreams {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // shown for failures or notable outcomes
};

// Runs one numbered criterion (1..11); max_n caps the scan sizes (0 keeps
//每 criterion's stated size).
CriterionResult run_criterion(int id, int max_n = 0);

// Suite names: figures, specialize, fusing, richardson, shifting, oracle,
// all.  Returns the process exit code (0 pass, 1 any failure).
int run_suite(const std::string& suite, int max_n, std::ostream& out);

const std::vector<std::string>& suite_names();

}  // namespace pipedreams
