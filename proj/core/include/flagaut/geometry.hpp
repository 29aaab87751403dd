#pragma once

#include <map>
#include <vector>

#include "flagaut/parabolic.hpp"

namespace flagaut {

/// Number of factor roots, i.e. |Delta \ I|; an exotic factor counts once.
int picard_rank(const ParabolicSpec& spec);

/// Schubert divisor / curve classes in the bases D_alpha, C_beta indexed by factor roots.
struct DivisorClass {
  std::map<int, int> coeffs;
};
struct CurveClass {
  std::map<int, int> coeffs;
};

/// D_alpha . C_beta = delta; "not-a-factor" when either root is not a factor.
int pairing(const ParabolicSpec& spec, int alpha, int beta);
/// Bilinear extension of the basis pairing.
int pairing(const DivisorClass& d, const CurveClass& c);
std::vector<std::vector<int>> pairing_matrix(const ParabolicSpec& spec);
bool is_nef(const DivisorClass& d);

/// Q^alpha, the smallest parabolic containing P and P^alpha, as a single-factor spec.
ParabolicSpec contraction_target(const ParabolicSpec& spec, int alpha);

/// Factor roots whose contraction target is reduced; P^sm = P_J.
/// Throws "exotic" for specs with an exotic factor.
std::vector<int> smooth_target(const ParabolicSpec& spec);

}  // namespace flagaut
