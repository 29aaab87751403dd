#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flagaut {

/// Dense vector over F_p; entries are kept reduced in [0, p).
using Vec = std::vector<int>;

bool is_prime(int n);

/// Arithmetic in F_p for a small prime p.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  int reduce(long long x) const {
    long long r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const { return reduce(a + b); }
  int sub(int a, int b) const { return reduce(a - b); }
  int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int inv(int a) const;
  int pow(int a, unsigned e) const;

 private:
  int p_;
};

/// Row-major dense matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  int at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  Vec column(int c) const;
  void set_column(int c, const Vec& v);
  Vec apply(const PrimeField& f, const Vec& v) const;
  Matrix mul(const PrimeField& f, const Matrix& other) const;
  Matrix sub(const PrimeField& f, const Matrix& other) const;
  Matrix power(const PrimeField& f, unsigned e) const;
  bool is_zero() const;

  bool operator==(const Matrix&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

/// Reduced row-echelon form of a list of row vectors.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<int> pivots;
};

Echelon echelonize(const PrimeField& f, std::vector<Vec> rows, int ncols);

/// Basis of {x : sum_j x_j * columns[j] = 0}, i.e. the kernel of the matrix
/// whose columns are given.  Each column has length `nrows`.
std::vector<Vec> kernel_of_columns(const PrimeField& f, const std::vector<Vec>& columns, int nrows);

/// Solves sum_j c_j * columns[j] = target; returns false when no solution.
bool solve_columns(const PrimeField& f, const std::vector<Vec>& columns, const Vec& target, Vec& out);

/// Subspace of F_p^n stored in reduced row-echelon form, which is canonical:
/// equal subspaces compare equal member-wise.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int p, int ambient_dim);

  static Subspace span(int p, int ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(int p, int ambient_dim);

  int p() const { return p_; }
  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// v minus its projection along the echelon basis; zero iff v lies in the span.
  Vec residue(const Vec& v) const;
  bool contains(const Vec& v) const;
  /// Adds v; returns true when the dimension grew.
  bool insert(const Vec& v);

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool is_subspace_of(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return p_ == other.p_ && ambient_ == other.ambient_ && rows_ == other.rows_;
  }

 private:
  int p_ = 2;
  int ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

Vec unit_vector(int n, int i);
Vec add_vec(const PrimeField& f, const Vec& a, const Vec& b);
Vec scale_vec(const PrimeField& f, int c, const Vec& a);
bool is_zero_vec(const Vec& v);

}  // namespace flagaut
