#pragma once

#include <compare>
#include <vector>

#include "flagaut/parabolic.hpp"
#include "flagaut/rootsys.hpp"

namespace flagaut {

/// Quotient by a chain kernel. Frobenius kernels keep the type (the twist is
/// tracked separately); very special kernels pass to the dual type.
struct IsogenyDescriptor {
  DynkinType source;
  DynkinType target;
  KernelSpec kernel;
  int twist = 0;
};

IsogenyDescriptor describe_isogeny(const DynkinType& type, int p, const KernelSpec& kernel);

/// Total order of the chain; throws "no-very-special-isogeny" for N-kernels
/// on types without an edge of multiplicity p.
std::strong_ordering chain_compare(const DynkinType& type, int p, const KernelSpec& a, const KernelSpec& b);

struct VerySpecialDual {
  DynkinType source;
  DynkinType target;
  /// simple_map[i] = index of the dual simple root matching alpha_i^vee.
  std::vector<int> simple_map;
  /// root_map[k] = dual positive-root index of the image of positive root k.
  std::vector<int> root_map;
};

VerySpecialDual very_special_dual(const DynkinType& type, int p);

/// Image of a root of the source under the dual root map (any sign).
Root dual_root(const VerySpecialDual& d, const Root& gamma);

struct CompositionRow {
  Root root;
  int first = 0;   // height of N on U_gamma
  int second = 0;  // height of the dual N on the image root group
};

/// One row per root (positives then negatives). The composite of the very
/// special isogeny and its dual is Frobenius iff first + second == 1 on every row.
std::vector<CompositionRow> compose_very_special(const DynkinType& type, int p);

/// dim of the p-closure of all short root spaces in the Chevalley algebra.
int lie_N_dimension(const DynkinType& type, int p);

}  // namespace flagaut
