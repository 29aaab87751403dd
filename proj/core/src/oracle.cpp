#include "flagaut/oracle.hpp"

#include <algorithm>

#include "flagaut/chevalley.hpp"
#include "flagaut/error.hpp"
#include "flagaut/parabolic.hpp"

namespace flagaut {

Subspace p_closure(const LieAlgebra& L, const Subspace& S) {
  Subspace cur = S;
  for (;;) {
    const std::vector<Vec> basis = cur.basis();
    bool grew = false;
    for (size_t a = 0; a < basis.size(); ++a) {
      grew |= cur.insert(L.p_power(basis[a]));
      for (size_t b = a + 1; b < basis.size(); ++b) grew |= cur.insert(L.bracket(basis[a], basis[b]));
    }
    if (!grew) return cur;
  }
}

bool is_p_subalgebra(const LieAlgebra& L, const Subspace& S) {
  const auto& basis = S.basis();
  for (size_t a = 0; a < basis.size(); ++a) {
    if (!S.contains(L.p_power(basis[a]))) return false;
    for (size_t b = a + 1; b < basis.size(); ++b)
      if (!S.contains(L.bracket(basis[a], basis[b]))) return false;
  }
  return true;
}

namespace {

// Kernel of x -> (transform([x, s]))_s over the basis of S, as a subspace of L.
template <class Transform>
Subspace bracket_kernel(const LieAlgebra& L, const Subspace& S, Transform transform) {
  std::vector<Vec> columns;
  columns.reserve(L.dim());
  int rows = 0;
  for (int j = 0; j < L.dim(); ++j) {
    Vec col;
    const Vec bj = L.basis_vector(j);
    for (const Vec& s : S.basis()) {
      Vec r = transform(L.bracket(bj, s));
      col.insert(col.end(), r.begin(), r.end());
    }
    rows = static_cast<int>(col.size());
    columns.push_back(std::move(col));
  }
  if (rows == 0) return Subspace::full(L.p(), L.dim());
  return Subspace::span(L.p(), L.dim(), kernel_of_columns(L.field(), columns, rows));
}

}  // namespace

Subspace normalizer(const LieAlgebra& L, const Subspace& S) {
  return bracket_kernel(L, S, [&](const Vec& v) { return S.residue(v); });
}

Subspace centralizer(const LieAlgebra& L, const Subspace& S) {
  return bracket_kernel(L, S, [](const Vec& v) { return v; });
}

Subspace center(const LieAlgebra& L) { return centralizer(L, Subspace::full(L.p(), L.dim())); }

Subspace center(const LieAlgebra& L, const Subspace& S) { return S.intersect(centralizer(L, S)); }

LinearAction::LinearAction(LieAlgebra algebra, std::vector<Matrix> matrices)
    : algebra_(std::move(algebra)), matrices_(std::move(matrices)) {
  if (static_cast<int>(matrices_.size()) != algebra_.dim())
    throw DomainError("bad-dimension", "one action matrix per basis element is required");
  module_dim_ = matrices_.empty() ? 0 : matrices_.front().rows();
  for (const Matrix& m : matrices_)
    if (m.rows() != module_dim_ || m.cols() != module_dim_)
      throw DomainError("bad-dimension", "action matrices must be square of equal size");
  const PrimeField& f = algebra_.field();
  for (int a = 0; a < algebra_.dim(); ++a)
    for (int b = a + 1; b < algebra_.dim(); ++b) {
      Matrix expected(module_dim_, module_dim_);
      for (const auto& [k, c] : algebra_.bracket_basis(a, b))
        for (int r = 0; r < module_dim_; ++r)
          for (int s = 0; s < module_dim_; ++s)
            expected.at(r, s) = f.add(expected.at(r, s), f.mul(c, matrices_[k].at(r, s)));
      if (commutator(f, matrices_[a], matrices_[b]) != expected)
        throw DomainError("not-a-representation",
                          "bracket of " + algebra_.label(a) + " and " + algebra_.label(b) + " is not respected");
    }
}

LinearAction LinearAction::adjoint(const LieAlgebra& algebra) {
  std::vector<Matrix> mats;
  for (int i = 0; i < algebra.dim(); ++i) mats.push_back(algebra.ad(algebra.basis_vector(i)));
  return LinearAction(algebra, std::move(mats));
}

Subspace submodule_generated(const PrimeField& f, const std::vector<Matrix>& matrices, const Vec& v) {
  const int n = static_cast<int>(v.size());
  Subspace sub(f.p(), n);
  std::vector<Vec> queue;
  if (sub.insert(v)) queue.push_back(v);
  // Every new vector is pushed once; images of a spanning set suffice.
  while (!queue.empty()) {
    Vec w = std::move(queue.back());
    queue.pop_back();
    for (const Matrix& m : matrices) {
      Vec img = m.apply(f, w);
      if (sub.insert(img)) queue.push_back(std::move(img));
    }
  }
  return sub;
}

Subspace submodule_generated(const LinearAction& A, const Vec& v) {
  if (static_cast<int>(v.size()) != A.module_dim()) throw DomainError("bad-dimension", "vector outside the module");
  return submodule_generated(A.algebra().field(), A.matrices(), v);
}

ExoticEnumeration enumerate_exotic_subalgebras() {
  const ChevalleyAlgebra L(DynkinType::make(Family::G, 2), 2);
  const RootSystem& rs = L.roots();
  const ParabolicSpec pa1{L.type(), 2, {Factor{0, KernelSpec::trivial(), std::nullopt}}};
  const Subspace base = lie_of_parabolic(L, pa1);

  std::vector<Root> outside;
  for (const Root& g : rs.positive_roots())
    if (g[0] != 0) outside.push_back(negate(g));

  ExoticEnumeration out;
  const unsigned count = 1u << outside.size();
  for (unsigned mask = 0; mask < count; ++mask) {
    ++out.candidates;
    // mask 0 is Lie P^{alpha_1} itself, not strictly above it.
    if (mask == 0) continue;
    Subspace cand = base;
    std::vector<Root> extra;
    for (size_t k = 0; k < outside.size(); ++k)
      if (mask & (1u << k)) {
        cand.insert(unit_vector(L.dim(), L.root_basis_index(outside[k])));
        extra.push_back(outside[k]);
      }
    if (!is_p_subalgebra(L.algebra(), cand)) continue;
    if (cand.dim() == L.dim()) {
      out.whole_algebra_closed = true;
      continue;
    }
    out.hits.push_back({std::move(cand), std::move(extra)});
  }
  out.caveat = "only T-stable candidates (sums of root lines over Lie P^a1) are enumerated";
  return out;
}

int WedgeModel::index(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k] == std::pair{i, j}) return static_cast<int>(k);
  throw DomainError("bad-dimension", "no wedge e" + std::to_string(i) + "^e" + std::to_string(j));
}

int WedgeModel::form(int i, int j) const { return i + j == ambient - 1 ? 1 : 0; }

Vec WedgeModel::wedge(const Vec& u, const Vec& v) const {
  const PrimeField f(2);
  Vec out(pairs.size(), 0);
  for (size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    out[k] = f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i]));
  }
  return out;
}

Vec WedgeModel::v0() const {
  Vec v(ambient, 0);
  v[0] = v[ambient - 1] = 1;
  return v;
}

WedgeModel orthogonal_wedge_model(int n) {
  if (n < 1) throw DomainError("bad-dimension", "wedge model needs n >= 1");
  const int N = 2 * n + 2;
  const PrimeField f(2);
  std::vector<std::pair<int, int>> pairs;
  std::vector<Matrix> mats;
  std::vector<std::string> labels;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      Matrix m(N, N);
      // (e_i ∧ e_j)(e_x) = b(e_j, e_x) e_i - b(e_i, e_x) e_j
      m.at(i, N - 1 - j) = f.add(m.at(i, N - 1 - j), 1);
      m.at(j, N - 1 - i) = f.sub(m.at(j, N - 1 - i), 1);
      pairs.emplace_back(i, j);
      mats.push_back(std::move(m));
      labels.push_back("e" + std::to_string(i) + "^e" + std::to_string(j));
    }
  LieAlgebra L = lie_algebra_from_matrices(2, mats, labels);
  return WedgeModel{n, N, std::move(pairs), std::move(mats), std::move(L)};
}

Subspace wedge_lie_N(const WedgeModel& W) {
  std::vector<Vec> gens;
  for (int j = 1; j + 1 < W.ambient; ++j) gens.push_back(W.wedge(W.v0(), unit_vector(W.ambient, j)));
  return Subspace::span(2, W.algebra.dim(), gens);
}

Subspace wedge_stabilizer(const WedgeModel& W) {
  const PrimeField f(2);
  std::vector<Vec> columns;
  for (const Matrix& m : W.matrices) columns.push_back(m.apply(f, W.v0()));
  return Subspace::span(2, W.algebra.dim(), kernel_of_columns(f, columns, W.ambient));
}

namespace {

Matrix combination(const PrimeField& f, const std::vector<Matrix>& mats, const Vec& coeffs) {
  Matrix out(mats.front().rows(), mats.front().cols());
  for (size_t k = 0; k < mats.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (int r = 0; r < out.rows(); ++r)
      for (int c = 0; c < out.cols(); ++c) out.at(r, c) = f.add(out.at(r, c), f.mul(coeffs[k], mats[k].at(r, c)));
  }
  return out;
}

}  // namespace

LinearAction odd_orthogonal_action(int n) {
  const WedgeModel W = orthogonal_wedge_model(n);
  const PrimeField f(2);
  const Subspace stab = wedge_stabilizer(W);
  std::vector<Matrix> full;
  for (const Vec& c : stab.basis()) full.push_back(combination(f, W.matrices, c));
  LieAlgebra S = lie_algebra_from_matrices(2, full);

  // Basis of v0^perp: v0, e_1, ..., e_{2n}.
  std::vector<Vec> perp{W.v0()};
  for (int j = 1; j + 1 < W.ambient; ++j) perp.push_back(unit_vector(W.ambient, j));
  const int d = static_cast<int>(perp.size());
  std::vector<Matrix> restricted;
  for (const Matrix& m : full) {
    Matrix r(d, d);
    for (int c = 0; c < d; ++c) {
      Vec coords;
      if (!solve_columns(f, perp, m.apply(f, perp[c]), coords))
        throw DomainError("not-closed", "stabilizer does not preserve v0^perp");
      r.set_column(c, coords);
    }
    restricted.push_back(std::move(r));
  }
  return LinearAction(std::move(S), std::move(restricted));
}

LinearAction symplectic_wedge_action(int n) {
  if (n < 1) throw DomainError("bad-dimension", "symplectic action needs n >= 1");
  const int N = 2 * n;
  const PrimeField f(2);
  std::vector<Matrix> sp;
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      // J S with S the symmetric unit matrix at (i, j); J is its own inverse.
      Matrix m(N, N);
      m.at(N - 1 - i, j) = 1;
      m.at(N - 1 - j, i) = 1;
      sp.push_back(std::move(m));
    }
  LieAlgebra L = lie_algebra_from_matrices(2, sp);

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) pairs.emplace_back(i, j);
  auto idx = [&](int a, int b) {
    return static_cast<int>(std::find(pairs.begin(), pairs.end(), std::pair{a, b}) - pairs.begin());
  };
  const int D = static_cast<int>(pairs.size());
  std::vector<Matrix> acts;
  for (const Matrix& A : sp) {
    Matrix M(D, D);
    for (int k = 0; k < D; ++k) {
      const auto [i, j] = pairs[k];
      // A(e_i ∧ e_j) = A e_i ∧ e_j + e_i ∧ A e_j
      for (int r = 0; r < N; ++r) {
        if (A.at(r, i) != 0 && r != j) {
          const int row = r < j ? idx(r, j) : idx(j, r);
          const int c = r < j ? A.at(r, i) : f.neg(A.at(r, i));
          M.at(row, k) = f.add(M.at(row, k), c);
        }
        if (A.at(r, j) != 0 && r != i) {
          const int row = i < r ? idx(i, r) : idx(r, i);
          const int c = i < r ? A.at(r, j) : f.neg(A.at(r, j));
          M.at(row, k) = f.add(M.at(row, k), c);
        }
      }
    }
    acts.push_back(std::move(M));
  }
  return LinearAction(std::move(L), std::move(acts));
}

}  // namespace flagaut
