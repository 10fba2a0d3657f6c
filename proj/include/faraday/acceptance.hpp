#pragma once

// Exit-gate checks for the simulator, one per criterion, each with pinned
// tolerances.

#include <ostream>
#include <string>
#include <vector>

namespace faraday {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

CriterionResult check_ground_efficiency();
CriterionResult check_case1_classical_point();
CriterionResult check_case1_strong_coupling();
CriterionResult check_case2_reference();
CriterionResult check_case2_frontier();
CriterionResult check_superposition_bounds();
CriterionResult check_phase_flatness();
CriterionResult check_cnot();
CriterionResult check_oracle_suite();

std::vector<CriterionResult> run_acceptance();

// One "[PASS]"/"[FAIL]" line per criterion plus a summary line.
void print_acceptance(const std::vector<CriterionResult>& results,
                      std::ostream& os);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace faraday
