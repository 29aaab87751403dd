#include "flagaut/lie_algebra.hpp"

#include "flagaut/error.hpp"

namespace flagaut {

namespace {

void axpy_sparse(const PrimeField& f, int c, const SparseVec& s, Vec& acc) {
  for (const auto& [idx, val] : s) acc[idx] = f.add(acc[idx], f.mul(c, val));
}

}  // namespace

LieAlgebra::LieAlgebra(int p, std::vector<std::string> labels, std::vector<SparseVec> brackets, std::vector<Vec> p_table)
    : field_(p),
      dim_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      brackets_(std::move(brackets)),
      p_table_(std::move(p_table)) {
  if (static_cast<int>(brackets_.size()) != dim_ * dim_ || static_cast<int>(p_table_.size()) != dim_)
    throw DomainError("bad-dimension", "structure table size");
  for (SparseVec& s : brackets_)
    for (auto& [idx, val] : s) val = field_.reduce(val);
  for (SparseVec& s : brackets_) std::erase_if(s, [](const auto& e) { return e.second == 0; });
  verify_jacobi();
}

void LieAlgebra::check_dimension(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim_)
    throw DomainError("bad-dimension", "expected length " + std::to_string(dim_) + ", got " + std::to_string(v.size()));
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  check_dimension(x);
  check_dimension(y);
  Vec out(dim_, 0);
  std::vector<int> ys;
  for (int j = 0; j < dim_; ++j)
    if (y[j]) ys.push_back(j);
  for (int i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (int j : ys) axpy_sparse(field_, field_.mul(x[i], y[j]), bracket_basis(i, j), out);
  }
  return out;
}

Vec LieAlgebra::jacobson_correction(const Vec& x, const Vec& y) const {
  // i * s_i(x, y) is the coefficient of lambda^(i-1) in ad(lambda x + y)^(p-1)(x).
  const int p = field_.p();
  std::vector<Vec> poly{x};
  for (int step = 0; step < p - 1; ++step) {
    std::vector<Vec> next(poly.size() + 1, Vec(dim_, 0));
    for (size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] = add_vec(field_, next[d + 1], bracket(x, poly[d]));
      next[d] = add_vec(field_, next[d], bracket(y, poly[d]));
    }
    poly = std::move(next);
  }
  Vec acc(dim_, 0);
  for (int i = 1; i < p; ++i) acc = add_vec(field_, acc, scale_vec(field_, field_.inv(i), poly[i - 1]));
  return acc;
}

Vec LieAlgebra::p_power(const Vec& x) const {
  check_dimension(x);
  Vec sum(dim_, 0), power(dim_, 0);
  for (int i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    // (c b)^[p] = c^p b^[p] = c b^[p] over F_p.
    Vec y = scale_vec(field_, x[i], basis_vector(i));
    Vec yp = scale_vec(field_, x[i], p_table_[i]);
    power = add_vec(field_, add_vec(field_, power, yp), jacobson_correction(sum, y));
    sum = add_vec(field_, sum, y);
  }
  return power;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec col(dim_, 0);
    for (int i = 0; i < dim_; ++i)
      if (x[i]) axpy_sparse(field_, x[i], bracket_basis(i, j), col);
    m.set_column(j, col);
  }
  return m;
}

void LieAlgebra::verify_jacobi() const {
  for (int i = 0; i < dim_; ++i) {
    if (!bracket_basis(i, i).empty())
      throw DomainError("not-a-lie-algebra", "[b,b] != 0 for " + labels_[i]);
    for (int j = i + 1; j < dim_; ++j) {
      Vec s(dim_, 0);
      axpy_sparse(field_, 1, bracket_basis(i, j), s);
      axpy_sparse(field_, 1, bracket_basis(j, i), s);
      if (!is_zero_vec(s)) throw DomainError("not-a-lie-algebra", "antisymmetry fails at " + labels_[i] + "," + labels_[j]);
    }
  }
  // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0; alternating, so a < b < c suffices.
  Vec acc(dim_, 0);
  std::vector<int> touched;
  auto nested = [&](int a, int b, int c) {
    for (const auto& [k, v] : bracket_basis(b, c))
      for (const auto& [idx, w] : bracket_basis(a, k)) {
        acc[idx] = field_.add(acc[idx], field_.mul(v, w));
        touched.push_back(idx);
      }
  };
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b)
      for (int c = b + 1; c < dim_; ++c) {
        nested(a, b, c);
        nested(b, c, a);
        nested(c, a, b);
        bool ok = true;
        for (int idx : touched) {
          ok = ok && acc[idx] == 0;
          acc[idx] = 0;
        }
        touched.clear();
        if (!ok)
          throw DomainError("not-a-lie-algebra", "Jacobi fails at " + labels_[a] + "," + labels_[b] + "," + labels_[c]);
      }
}

Matrix commutator(const PrimeField& f, const Matrix& a, const Matrix& b) { return a.mul(f, b).sub(f, b.mul(f, a)); }

Vec matrix_coordinates(const PrimeField& f, const std::vector<Matrix>& basis, const Matrix& m) {
  std::vector<Vec> columns;
  columns.reserve(basis.size());
  auto flatten = [](const Matrix& x) {
    Vec v;
    v.reserve(static_cast<size_t>(x.rows()) * x.cols());
    for (int r = 0; r < x.rows(); ++r)
      for (int c = 0; c < x.cols(); ++c) v.push_back(x.at(r, c));
    return v;
  };
  for (const Matrix& b : basis) columns.push_back(flatten(b));
  Vec out;
  if (!solve_columns(f, columns, flatten(m), out)) throw DomainError("not-closed", "matrix outside the span");
  return out;
}

LieAlgebra lie_algebra_from_matrices(int p, const std::vector<Matrix>& basis, std::vector<std::string> labels) {
  PrimeField f(p);
  const int n = static_cast<int>(basis.size());
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  {
    std::vector<Vec> rows;
    for (const Matrix& b : basis) {
      Vec v;
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) v.push_back(b.at(r, c));
      rows.push_back(std::move(v));
    }
    const int ncols = n ? basis[0].rows() * basis[0].cols() : 0;
    if (static_cast<int>(echelonize(f, rows, ncols).rows.size()) != n)
      throw DomainError("not-closed", "matrix basis is linearly dependent");
  }
  std::vector<SparseVec> brackets(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec c = matrix_coordinates(f, basis, commutator(f, basis[i], basis[j]));
      for (int k = 0; k < n; ++k)
        if (c[k]) brackets[static_cast<size_t>(i) * n + j].emplace_back(k, c[k]);
    }
  std::vector<Vec> p_table;
  for (const Matrix& b : basis) p_table.push_back(matrix_coordinates(f, basis, b.power(f, static_cast<unsigned>(p))));
  return LieAlgebra(p, std::move(labels), std::move(brackets), std::move(p_table));
}

}  // namespace flagaut
