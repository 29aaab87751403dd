#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagaut/parabolic.hpp"
#include "flagaut/rootsys.hpp"

namespace flagaut {

/// (G, alpha) with Aut^0(G/P^alpha) strictly larger than G.
struct ExceptionalPairInfo {
  DynkinType type;
  int alpha = 0;
  DynkinType hat_type;
  /// Display label of the adjoint group, e.g. "PGL_6".
  std::string hat_name;
};

/// Only (C_n, a1) -> A_{2n-1}, (B_n, a_n) -> D_{n+1} and (G2, a1) -> B3.
std::optional<ExceptionalPairInfo> demazure_aut(const DynkinType& type, int alpha);

/// dim Aut^0(G/P_J) for a reduced parabolic: the hat group for an
/// exceptional maximal P^alpha, dim G otherwise.
int demazure_dimension(const DynkinType& type, const std::vector<int>& J);

struct InfinitesimalFactor {
  DynkinType hat;
  int m = 1;
  bool operator==(const InfinitesimalFactor&) const = default;
};

/// Aut^0(G/P) = _m(hat) . H^{(twist)}, where H is `reduced_type`.
struct AutDescriptor {
  DynkinType reduced_type;
  /// The group acting after stripping Frobenius kernels and N; differs from
  /// the spec type only when reduced_is_dual holds.
  DynkinType acting_type;
  int frobenius_twist = 0;
  bool reduced_is_dual = false;
  std::optional<InfinitesimalFactor> infinitesimal;
  int lie_dim = 0;
  bool is_reduced = true;
  std::vector<std::string> notes;
};

/// Throws "not-uniform" when the smooth target is exceptional and no single
/// kernel describes the other factors.
AutDescriptor aut_group(const ParabolicSpec& spec);

/// dim H^0(X, T_f) for the contraction f : X -> G/P^sm, computed as the
/// difference of Lie algebra dimensions. Requires a canonical form with
/// _1G ⊆ ker xi; throws "kernel-too-small" otherwise and "exotic" for Q specs.
int relative_tangent_sections_dim(const ParabolicSpec& spec);

/// Classical name of G/P for Picard rank one, else a generic label.
std::string picard_rank_one_variety_label(const ParabolicSpec& spec);

/// A Frobenius twist stripped from a spec, and the spec over the acting group.
struct ReducedSpec {
  ParabolicSpec spec;
  int twist = 0;
  bool dual = false;
};

/// Removes the largest Frobenius kernel contained in P and, when P then
/// contains N, passes to the dual group. Input is normalized first.
ReducedSpec strip_isogeny_kernels(const ParabolicSpec& spec);

}  // namespace flagaut
