#pragma once

#include <functional>
#include <string>
#include <vector>

#include "flagaut/parabolic.hpp"

namespace flagaut::cli {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool exact = false;
  double seconds = 0.0;
  double time_limit = 0.0;
  std::string detail;

  bool pass() const { return exact && seconds < time_limit; }
};

/// Every spec over the given types and primes whose non-exotic kernels sit at
/// chain positions 0..max_position, plus the G2, p = 2 exotic specs.
std::vector<ParabolicSpec> generated_catalog(const std::vector<DynkinType>& types, const std::vector<int>& primes,
                                             int max_position);

/// Types of rank <= 4 used by the property suites.
std::vector<DynkinType> small_types();

CriterionResult criterion_demazure_table();
CriterionResult criterion_main_catalog();
CriterionResult criterion_exotic_enumeration();
CriterionResult criterion_rank_one_exotic_arithmetic();
CriterionResult criterion_mu_incidence();
CriterionResult criterion_lie_N_normalizer();
CriterionResult criterion_property_suites();
CriterionResult criterion_relative_tangent();

std::vector<std::function<CriterionResult()>> all_criteria();

/// "[PASS] 3 exotic enumeration (0.004 s < 10 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace flagaut::cli
