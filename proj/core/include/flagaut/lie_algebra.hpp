#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flagaut/field.hpp"

namespace flagaut {

/// Sparse vector: (basis index, nonzero coefficient) pairs sorted by index.
using SparseVec = std::vector<std::pair<int, int>>;

/// Finite-dimensional restricted Lie algebra over F_p given by structure
/// constants on a basis and the p-th power of each basis element.
/// The constructor checks alternation and the Jacobi identity on all basis
/// triples and throws "not-a-lie-algebra" on failure.
class LieAlgebra {
 public:
  LieAlgebra(int p, std::vector<std::string> labels, std::vector<SparseVec> brackets, std::vector<Vec> p_table);

  int p() const { return field_.p(); }
  const PrimeField& field() const { return field_; }
  int dim() const { return dim_; }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  const SparseVec& bracket_basis(int i, int j) const { return brackets_[static_cast<size_t>(i) * dim_ + j]; }
  /// Bilinear extension of the table; "bad-dimension" on length mismatch.
  Vec bracket(const Vec& x, const Vec& y) const;
  /// x^[p] from the basis table via Jacobson's formula.
  Vec p_power(const Vec& x) const;
  const Vec& p_power_basis(int i) const { return p_table_.at(i); }
  /// Matrix of ad(x) in the given basis (column j = [x, b_j]).
  Matrix ad(const Vec& x) const;
  Vec basis_vector(int i) const { return unit_vector(dim_, i); }

  /// Sum of s_i(x, y) over 1 <= i < p, the Lie-polynomial correction term in
  /// (x + y)^[p] = x^[p] + y^[p] + sum_i s_i(x, y).
  Vec jacobson_correction(const Vec& x, const Vec& y) const;

 private:
  void check_dimension(const Vec& v) const;
  void verify_jacobi() const;

  PrimeField field_;
  int dim_;
  std::vector<std::string> labels_;
  std::vector<SparseVec> brackets_;
  std::vector<Vec> p_table_;
};

/// Restricted Lie subalgebra of gl_n spanned by the given matrices, which
/// must be linearly independent and closed under commutator and p-th power.
/// Throws "not-closed" otherwise.
LieAlgebra lie_algebra_from_matrices(int p, const std::vector<Matrix>& basis, std::vector<std::string> labels = {});

/// Coordinates of `m` in the span of `basis`; throws "not-closed" when absent.
Vec matrix_coordinates(const PrimeField& f, const std::vector<Matrix>& basis, const Matrix& m);

Matrix commutator(const PrimeField& f, const Matrix& a, const Matrix& b);

}  // namespace flagaut
