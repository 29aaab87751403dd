#include "flagaut/field.hpp"

#include <algorithm>

#include "flagaut/error.hpp"

namespace flagaut {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_prime(p) || p > 46340) throw DomainError("unsupported-prime", std::to_string(p));
}

int PrimeField::pow(int a, unsigned e) const {
  long long base = reduce(a), acc = 1;
  while (e) {
    if (e & 1U) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1U;
  }
  return static_cast<int>(acc);
}

int PrimeField::inv(int a) const {
  a = reduce(a);
  if (a == 0) throw DomainError("division-by-zero", "inverse of 0 in F_" + std::to_string(p_));
  return pow(a, static_cast<unsigned>(p_ - 2));
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vec Matrix::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_column(int c, const Vec& v) {
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Vec Matrix::apply(const PrimeField& f, const Vec& v) const {
  Vec out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    long long acc = 0;
    for (int c = 0; c < cols_; ++c) acc += static_cast<long long>(at(r, c)) * v[c];
    out[r] = f.reduce(acc);
  }
  return out;
}

Matrix Matrix::mul(const PrimeField& f, const Matrix& other) const {
  Matrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      int a = at(r, k);
      if (a == 0) continue;
      for (int c = 0; c < other.cols_; ++c)
        out.at(r, c) = f.reduce(out.at(r, c) + static_cast<long long>(a) * other.at(k, c));
    }
  return out;
}

Matrix Matrix::sub(const PrimeField& f, const Matrix& other) const {
  Matrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = f.sub(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::power(const PrimeField& f, unsigned e) const {
  Matrix acc = identity(rows_);
  Matrix base = *this;
  while (e) {
    if (e & 1U) acc = acc.mul(f, base);
    e >>= 1U;
    if (e) base = base.mul(f, base);
  }
  return acc;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](int x) { return x == 0; });
}

Echelon echelonize(const PrimeField& f, std::vector<Vec> rows, int ncols) {
  Echelon out;
  int r = 0;
  const int nrows = static_cast<int>(rows.size());
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int pr = -1;
    for (int i = r; i < nrows; ++i)
      if (rows[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[r], rows[pr]);
    const int iv = f.inv(rows[r][c]);
    for (int& x : rows[r]) x = f.mul(x, iv);
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const int factor = rows[i][c];
      for (int k = c; k < ncols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

namespace {

// Rows of the transpose of the column list, i.e. the matrix itself.
std::vector<Vec> rows_from_columns(const std::vector<Vec>& columns, int nrows) {
  std::vector<Vec> rows(nrows, Vec(columns.size(), 0));
  for (size_t j = 0; j < columns.size(); ++j)
    for (int i = 0; i < nrows; ++i) rows[i][j] = columns[j][i];
  return rows;
}

}  // namespace

std::vector<Vec> kernel_of_columns(const PrimeField& f, const std::vector<Vec>& columns, int nrows) {
  const int n = static_cast<int>(columns.size());
  Echelon e = echelonize(f, rows_from_columns(columns, nrows), n);
  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = f.neg(e.rows[i][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool solve_columns(const PrimeField& f, const std::vector<Vec>& columns, const Vec& target, Vec& out) {
  const int n = static_cast<int>(columns.size());
  const int nrows = static_cast<int>(target.size());
  std::vector<Vec> rows = rows_from_columns(columns, nrows);
  for (int i = 0; i < nrows; ++i) rows[i].push_back(target[i]);
  Echelon e = echelonize(f, std::move(rows), n + 1);
  if (!e.pivots.empty() && e.pivots.back() == n) return false;
  out.assign(n, 0);
  for (size_t i = 0; i < e.pivots.size(); ++i) out[e.pivots[i]] = e.rows[i][n];
  return true;
}

Subspace::Subspace(int p, int ambient_dim) : p_(p), ambient_(ambient_dim) { PrimeField check(p); }

Subspace Subspace::span(int p, int ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(p, ambient_dim);
  PrimeField f(p);
  std::vector<Vec> rows;
  rows.reserve(vectors.size());
  for (const Vec& v : vectors) {
    Vec r(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) r[i] = f.reduce(v.at(i));
    rows.push_back(std::move(r));
  }
  Echelon e = echelonize(f, std::move(rows), ambient_dim);
  s.rows_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(int p, int ambient_dim) {
  std::vector<Vec> id;
  for (int i = 0; i < ambient_dim; ++i) id.push_back(unit_vector(ambient_dim, i));
  return span(p, ambient_dim, id);
}

Vec Subspace::residue(const Vec& v) const {
  PrimeField f(p_);
  Vec w(ambient_);
  for (int i = 0; i < ambient_; ++i) w[i] = f.reduce(v.at(i));
  for (size_t k = 0; k < rows_.size(); ++k) {
    const int c = w[pivots_[k]];
    if (c == 0) continue;
    for (int i = 0; i < ambient_; ++i) w[i] = f.sub(w[i], f.mul(c, rows_[k][i]));
  }
  return w;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(residue(v)); }

bool Subspace::insert(const Vec& v) {
  Vec r = residue(v);
  if (is_zero_vec(r)) return false;
  std::vector<Vec> rows = rows_;
  rows.push_back(std::move(r));
  PrimeField f(p_);
  Echelon e = echelonize(f, std::move(rows), ambient_);
  rows_ = std::move(e.rows);
  pivots_ = std::move(e.pivots);
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> all = rows_;
  all.insert(all.end(), other.rows_.begin(), other.rows_.end());
  return span(p_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // x = sum c_k rows_k lies in other iff its residue modulo other vanishes;
  // the residue is linear in c.
  PrimeField f(p_);
  std::vector<Vec> columns;
  columns.reserve(rows_.size());
  for (const Vec& r : rows_) columns.push_back(other.residue(r));
  std::vector<Vec> coeffs = kernel_of_columns(f, columns, ambient_);
  std::vector<Vec> vectors;
  for (const Vec& c : coeffs) {
    Vec x(ambient_, 0);
    for (size_t k = 0; k < rows_.size(); ++k)
      if (c[k]) x = add_vec(f, x, scale_vec(f, c[k], rows_[k]));
    vectors.push_back(std::move(x));
  }
  return span(p_, ambient_, vectors);
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const Vec& r) { return other.contains(r); });
}

Vec unit_vector(int n, int i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

Vec add_vec(const PrimeField& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec scale_vec(const PrimeField& f, int c, const Vec& a) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

}  // namespace flagaut
