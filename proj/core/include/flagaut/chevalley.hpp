#pragma once

#include <memory>
#include <vector>

#include "flagaut/field.hpp"
#include "flagaut/lie_algebra.hpp"
#include "flagaut/rootsys.hpp"

namespace flagaut {

struct ParabolicSpec;

/// Integer structure constants N_{a,b} of a Chevalley basis, with signs fixed
/// by extraspecial pairs for the lexicographic order on positive roots.
/// [e_a, e_b] = N_{a,b} e_{a+b}; N_{-a,-b} = -N_{a,b}; |N_{a,b}| = r + 1.
class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs);
  int operator()(const Root& a, const Root& b) const;

 private:
  int compute(int a, int b) const;
  int index(const Root& r) const;

  const RootSystem* rs_;
  std::vector<Root> roots_;
  mutable std::vector<int> memo_;
  mutable std::vector<bool> known_;
};

/// Lie algebra of a split simple group over F_p in a Chevalley basis:
/// e_gamma for every root (positives, then negatives, in RootSystem order)
/// followed by the coroots h_1..h_rank. e^[p] = 0 and h_i^[p] = h_i.
class ChevalleyAlgebra {
 public:
  ChevalleyAlgebra(DynkinType type, int p);

  const RootSystem& roots() const { return *rs_; }
  const DynkinType& type() const { return rs_->type(); }
  int p() const { return algebra_->p(); }
  int dim() const { return algebra_->dim(); }
  const LieAlgebra& algebra() const { return *algebra_; }

  /// Throws "not-a-root".
  int root_basis_index(const Root& gamma) const;
  int cartan_basis_index(int i) const { return rs_->num_roots() + i; }
  int structure_constant(const Root& a, const Root& b) const { return constants_(a, b); }

  Subspace root_space(const Root& gamma) const;
  Subspace cartan() const;

 private:
  const RootSystem* rs_;
  StructureConstants constants_;
  std::shared_ptr<const LieAlgebra> algebra_;
};

ChevalleyAlgebra build_lie_algebra(DynkinType type, int p);

/// Lie P for a spec whose phi takes only the values 0 and infinity: Cartan,
/// all positive root spaces and the negative root spaces of the Levi.
/// Throws "not-reduced" otherwise.
Subspace parabolic_subalgebra(const ChevalleyAlgebra& L, const ParabolicSpec& spec);

/// Lie P for any spec: Lie B plus g_{-gamma} for every gamma with phi >= 1.
Subspace lie_of_parabolic(const ChevalleyAlgebra& L, const ParabolicSpec& spec);

}  // namespace flagaut
