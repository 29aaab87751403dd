#pragma once

#include <string>
#include <vector>

#include "flagaut/field.hpp"
#include "flagaut/truncated_ring.hpp"

namespace flagaut {

enum class ScenarioCase { BnFrobenius, G2So7, BnVerySpecial };

/// A base point of an incidence variety together with the diagonal action of
/// a generator t of mu_{2^{m+1}}. Coordinates are over F_2.
struct WitnessScenario {
  ScenarioCase which = ScenarioCase::BnFrobenius;
  int n = 2;
  int m = 1;
  /// Index i of the second factor P^{alpha_i} (Bn cases), 1 <= i < n.
  int i = 1;
  /// Act by t = 1 instead of the generator.
  bool identity = false;
};

/// Concrete incidence data. The relation is either
///   fixed ⊆ F^m(t · moving) + extra     (fixed_inside_moved), or
///   F^m(t · moving) ⊆ fixed + extra.
struct ScenarioData {
  int ambient = 0;
  /// t acts on coordinate c by t^{weights[c]}.
  std::vector<int> weights;
  std::vector<Vec> moving;
  std::vector<Vec> fixed;
  std::vector<Vec> extra;
  bool fixed_inside_moved = true;
  std::string relation;
};

/// Throws "bad-scenario" for parameters outside the proofs' range.
ScenarioData scenario_data(const WitnessScenario& w);

struct IncidenceReport {
  bool preserved = false;
  /// F^m(t · g) for every moving generator g.
  std::vector<RVec> moved;
  std::string relation;
};

IncidenceReport mu_incidence_report(const WitnessScenario& w);
bool mu_incidence_check(const WitnessScenario& w);

std::string to_string(ScenarioCase c);
/// Accepts "bn-frob", "g2-so7", "bn-vs" and the long forms; throws "bad-scenario".
ScenarioCase parse_scenario_case(const std::string& text);

}  // namespace flagaut
