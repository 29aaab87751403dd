#pragma once

#include <climits>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flagaut/rootsys.hpp"

namespace flagaut {

/// Value of phi on roots whose root group lies entirely in P.
inline constexpr int kInfinity = INT_MAX;

/// Element of the chain 1 < N < _1G < ^1N < _2G < ... of non-central
/// isogeny kernels. VerySpecial(m) is the kernel of F^m composed with the
/// very special isogeny.
struct KernelSpec {
  enum class Kind { Trivial, Frobenius, VerySpecial };
  Kind kind = Kind::Trivial;
  int m = 0;

  static KernelSpec trivial() { return {}; }
  static KernelSpec frobenius(int m);
  static KernelSpec very_special(int m);
  /// Inverse of chain_position().
  static KernelSpec from_position(int position);

  /// Trivial 0, VerySpecial(m) 2m+1, Frobenius(m) 2m.
  int chain_position() const;
  /// Largest m with Frobenius(m) <= this.
  int frobenius_floor() const { return chain_position() / 2; }
  bool is_trivial() const { return kind == Kind::Trivial; }
  /// Height of this kernel on the root group of a root of the given length.
  int height(bool long_root) const;
  /// "T", "G<m>", "N<m>".
  std::string to_string() const;

  bool operator==(const KernelSpec&) const = default;
};

enum class ExoticKind { Q1, Q2 };

/// Pullback by F^pullback of one of the two exotic parabolics of G2 at p = 2.
struct ExoticFactor {
  ExoticKind which = ExoticKind::Q1;
  int pullback = 0;
  bool operator==(const ExoticFactor&) const = default;
};

/// One factor (ker xi) P^alpha of the intersection; `root` is 0-based.
/// When `exotic` is set the factor is a pulled-back Q_i at alpha_1 and
/// `kernel` is ignored.
struct Factor {
  int root = 0;
  KernelSpec kernel;
  std::optional<ExoticFactor> exotic;

  bool operator==(const Factor&) const = default;
};

struct ParabolicSpec {
  DynkinType type;
  int p = 2;
  std::vector<Factor> factors;

  bool operator==(const ParabolicSpec&) const = default;
};

/// phi on positive roots, indexed like RootSystem::positive_roots().
struct PhiFunction {
  std::vector<int> values;
  bool operator==(const PhiFunction&) const = default;
};

bool has_very_special_isogeny(const DynkinType& type, int p);
bool has_exotic_parabolics(const DynkinType& type, int p);

/// Throws "no-very-special-isogeny" or "no-exotic" when the spec uses a
/// kernel that does not exist for (type, p), "not-a-factor" for bad roots.
void validate(const ParabolicSpec& spec);

/// kappa(K, gamma).
int kernel_height(const RootSystem& rs, const KernelSpec& k, const Root& gamma);

/// Single-factor phi values (kInfinity off the support of alpha).
PhiFunction factor_phi(const RootSystem& rs, int p, const Factor& f);

PhiFunction phi_from_spec(const ParabolicSpec& spec);

/// The unique spec with minimal factor kernels realizing phi.
/// Throws "not-a-parabolic" naming a witness root.
ParabolicSpec spec_from_phi(const DynkinType& type, int p, const PhiFunction& phi);

/// spec_from_phi(phi_from_spec(spec)).
ParabolicSpec normalize(const ParabolicSpec& spec);

/// P subset of Q, decided by phi_P <= phi_Q pointwise.
bool contains(const ParabolicSpec& outer, const ParabolicSpec& inner);

ParabolicSpec intersect(const ParabolicSpec& a, const ParabolicSpec& b);

/// P = P_J ∩ (ker xi) P' with xi minimal, where J is the set of factor roots
/// whose smallest containing single-factor parabolic is reduced.
struct CanonicalForm {
  bool exotic = false;
  std::vector<int> J;
  KernelSpec xi;
  std::vector<int> J_prime;
  ParabolicSpec normalized;
};

/// Exotic specs pass through with `exotic` set. Throws "not-uniform" when no
/// single xi works and "contains-kernel" when P contains N or _1G.
CanonicalForm canonical_form(const ParabolicSpec& spec);

/// True when P contains _1G, or N when the very special isogeny exists.
bool contains_isogeny_kernel(const ParabolicSpec& spec);

struct UpMinusProfile {
  /// (positive root, phi) for every root with finite phi, in root order.
  std::vector<std::pair<Root, int>> entries;
  long total = 0;
};

UpMinusProfile up_minus_profile(const ParabolicSpec& spec);

std::string describe_factor(const Factor& f);

}  // namespace flagaut
