#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagaut/field.hpp"
#include "flagaut/lie_algebra.hpp"
#include "flagaut/rootsys.hpp"

namespace flagaut {

/// Smallest restricted subalgebra containing S: the fixpoint of adding
/// brackets of basis pairs and p-th powers of basis vectors.
Subspace p_closure(const LieAlgebra& L, const Subspace& S);

/// True when S is closed under the bracket and the p-th power map.
bool is_p_subalgebra(const LieAlgebra& L, const Subspace& S);

/// {x : [x, S] ⊆ S}.
Subspace normalizer(const LieAlgebra& L, const Subspace& S);
/// {x : [x, S] = 0}.
Subspace centralizer(const LieAlgebra& L, const Subspace& S);
Subspace center(const LieAlgebra& L);
/// Center of the subalgebra S, as a subspace of the ambient algebra.
Subspace center(const LieAlgebra& L, const Subspace& S);

/// Representation of a restricted Lie algebra on F_p^module_dim, one matrix
/// per basis element. The constructor checks rho([x,y]) = [rho(x), rho(y)]
/// on all basis pairs and throws "not-a-representation" otherwise.
class LinearAction {
 public:
  LinearAction(LieAlgebra algebra, std::vector<Matrix> matrices);
  static LinearAction adjoint(const LieAlgebra& algebra);

  const LieAlgebra& algebra() const { return algebra_; }
  int module_dim() const { return module_dim_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

 private:
  LieAlgebra algebra_;
  int module_dim_ = 0;
  std::vector<Matrix> matrices_;
};

/// Least subspace containing v and stable under every action matrix.
Subspace submodule_generated(const LinearAction& A, const Vec& v);
Subspace submodule_generated(const PrimeField& f, const std::vector<Matrix>& matrices, const Vec& v);

/// Restricted subalgebras of Lie G, (G2, p = 2), strictly between Lie P^{alpha_1}
/// and Lie G, among spans of Lie P^{alpha_1} and negative root lines.
struct ExoticEnumeration {
  struct Hit {
    Subspace algebra;
    /// Negative roots added on top of Lie P^{alpha_1}.
    std::vector<Root> extra_roots;
  };
  std::vector<Hit> hits;
  int candidates = 0;
  /// Whether Lie G itself passed the closure test (it is excluded from `hits`).
  bool whole_algebra_closed = false;
  std::string caveat;
};

ExoticEnumeration enumerate_exotic_subalgebras();

/// Lambda^2 k^{2n+2} at p = 2 realized inside gl_{2n+2} by
/// (u ∧ v)(x) = b(v, x) u - b(u, x) v, where b pairs e_0 with e_{2n+1} and
/// e_i with e_{2n+1-i}. Basis element k is e_i ∧ e_j for pairs[k] = (i, j), i < j.
struct WedgeModel {
  int n = 0;
  int ambient = 0;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Matrix> matrices;
  LieAlgebra algebra;

  int index(int i, int j) const;
  /// Coordinates of u ∧ v.
  Vec wedge(const Vec& u, const Vec& v) const;
  /// e_0 + e_{2n+1}.
  Vec v0() const;
  int form(int i, int j) const;
};

WedgeModel orthogonal_wedge_model(int n);

/// span{v0 ∧ e_j : 1 <= j <= 2n}.
Subspace wedge_lie_N(const WedgeModel& W);
/// Stabilizer of the vector v0, the so_{2n+1} inside the model.
Subspace wedge_stabilizer(const WedgeModel& W);

/// Stab(v0) acting on v0^perp in the basis (v0, e_1, ..., e_{2n}).
LinearAction odd_orthogonal_action(int n);

/// sp_{2n} (matrices A with JA symmetric, J the antidiagonal) acting on
/// Lambda^2 k^{2n} at p = 2, basis e_i ∧ e_j with i < j in lexicographic order.
LinearAction symplectic_wedge_action(int n);

}  // namespace flagaut
