#include "flagaut/chevalley.hpp"

#include <algorithm>

#include "flagaut/error.hpp"
#include "flagaut/parabolic.hpp"

namespace flagaut {

StructureConstants::StructureConstants(const RootSystem& rs) : rs_(&rs), roots_(rs.roots()) {
  const size_t n = roots_.size();
  memo_.assign(n * n, 0);
  known_.assign(n * n, false);
}

int StructureConstants::index(const Root& r) const {
  if (auto k = rs_->positive_index(r)) return *k;
  if (auto k = rs_->positive_index(negate(r))) return *k + rs_->num_positive();
  return -1;
}

int StructureConstants::operator()(const Root& a, const Root& b) const {
  const int ia = index(a), ib = index(b);
  if (ia < 0 || ib < 0) throw DomainError("not-a-root", rs_->label(ia < 0 ? a : b));
  return compute(ia, ib);
}

int StructureConstants::compute(int a, int b) const {
  const size_t n = roots_.size();
  const size_t key = static_cast<size_t>(a) * n + b;
  if (known_[key]) return memo_[key];
  const Root& x = roots_[a];
  const Root& y = roots_[b];
  const Root s = add_roots(x, y);
  int result = 0;
  const int npos = rs_->num_positive();
  auto neg = [&](int i) { return i < npos ? i + npos : i - npos; };
  if (index(s) >= 0) {
    const bool xp = a < npos, yp = b < npos;
    if (xp && yp) {
      if (lex_less(y, x)) {
        result = -compute(b, a);
      } else {
        // Extraspecial pair (u, v) of s: u lexicographically minimal.
        int u = -1, v = -1;
        for (int i = 0; i < npos; ++i) {
          const int j = index(add_roots(s, negate(roots_[i])));
          if (j >= 0 && j < npos && (u < 0 || lex_less(roots_[i], roots_[u]))) {
            u = i;
            v = j;
          }
        }
        int r = 0;
        for (Root probe = add_roots(roots_[v], negate(roots_[u])); index(probe) >= 0;
             probe = add_roots(probe, negate(roots_[u])))
          ++r;
        const int nuv = r + 1;
        if (a == u) {
          result = nuv;
        } else {
          // Four-root relation on (x, y, -v, -u), which sum to zero.
          auto term = [&](int i, int j, int k, int l, const Root& mid) {
            const int m = index(mid);
            if (m < 0) return std::pair<long long, long long>{0, 1};
            return std::pair<long long, long long>{static_cast<long long>(compute(i, j)) * compute(k, l),
                                                   rs_->norm(mid)};
          };
          auto [n1, d1] = term(b, neg(v), a, neg(u), add_roots(y, negate(roots_[v])));
          auto [n2, d2] = term(neg(v), a, b, neg(u), add_roots(x, negate(roots_[v])));
          const long long num = -static_cast<long long>(rs_->norm(s)) * (n1 * d2 + n2 * d1);
          const long long den = static_cast<long long>(nuv) * d1 * d2;
          if (num % den != 0) throw DomainError("internal", "non-integral structure constant");
          result = static_cast<int>(num / den);
        }
      }
    } else if (!xp && !yp) {
      result = -compute(neg(a), neg(b));
    } else if (xp) {
      // x + y + z = 0 gives N_{x,y}/|z|^2 = N_{y,z}/|x|^2 = N_{z,x}/|y|^2.
      const int z = index(negate(s));
      long long num = 0, den = 1;
      if (z < npos) {
        num = static_cast<long long>(rs_->norm(s)) * compute(z, a);
        den = rs_->norm(y);
      } else {
        num = static_cast<long long>(rs_->norm(s)) * compute(b, z);
        den = rs_->norm(x);
      }
      if (num % den != 0) throw DomainError("internal", "non-integral structure constant");
      result = static_cast<int>(num / den);
    } else {
      result = -compute(b, a);
    }
  }
  known_[key] = true;
  memo_[key] = result;
  return result;
}

namespace {

std::shared_ptr<const LieAlgebra> make_algebra(const RootSystem& rs, const StructureConstants& N, int p) {
  const int np = rs.num_positive();
  const int nr = rs.num_roots();
  const int n = rs.rank();
  const int dim = nr + n;
  const std::vector<Root> roots = rs.roots();
  std::vector<std::string> labels;
  for (const Root& r : roots) labels.push_back("e(" + rs.label(r) + ")");
  for (int i = 0; i < n; ++i) labels.push_back("h" + std::to_string(i + 1));

  auto idx = [&](const Root& r) -> int {
    if (auto k = rs.positive_index(r)) return *k;
    if (auto k = rs.positive_index(negate(r))) return *k + np;
    return -1;
  };
  std::vector<SparseVec> table(static_cast<size_t>(dim) * dim);
  auto put = [&](int i, int j, SparseVec v) { table[static_cast<size_t>(i) * dim + j] = std::move(v); };
  for (int a = 0; a < nr; ++a) {
    for (int b = 0; b < nr; ++b) {
      const Root s = add_roots(roots[a], roots[b]);
      if (std::all_of(s.begin(), s.end(), [](int c) { return c == 0; })) {
        // [e_g, e_-g] = h_g = sum_i c_i h_i with g^vee = sum c_i alpha_i^vee.
        const std::vector<int> c = rs.coroot(roots[a]);
        SparseVec h;
        for (int i = 0; i < n; ++i)
          if (c[i]) h.emplace_back(nr + i, c[i]);
        put(a, b, std::move(h));
        continue;
      }
      const int k = idx(s);
      if (k < 0) continue;
      const int c = N(roots[a], roots[b]);
      if (c) put(a, b, SparseVec{{k, c}});
    }
    for (int i = 0; i < n; ++i) {
      const int w = rs.pairing(roots[a], i);
      if (w) {
        put(nr + i, a, SparseVec{{a, w}});
        put(a, nr + i, SparseVec{{a, -w}});
      }
    }
  }
  std::vector<Vec> p_table(dim, Vec(dim, 0));
  for (int i = 0; i < n; ++i) p_table[nr + i][nr + i] = 1;
  return std::make_shared<const LieAlgebra>(p, std::move(labels), std::move(table), std::move(p_table));
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(DynkinType type, int p) : rs_(&root_system(type)), constants_(*rs_) {
  if (p != 2 && p != 3 && p != 5 && p != 7) throw DomainError("unsupported-prime", std::to_string(p));
  algebra_ = make_algebra(*rs_, constants_, p);
}

int ChevalleyAlgebra::root_basis_index(const Root& gamma) const {
  if (static_cast<int>(gamma.size()) == rs_->rank()) {
    if (auto k = rs_->positive_index(gamma)) return *k;
    if (auto k = rs_->positive_index(negate(gamma))) return *k + rs_->num_positive();
  }
  throw DomainError("not-a-root", "not a root of " + type().name());
}

Subspace ChevalleyAlgebra::root_space(const Root& gamma) const {
  return Subspace::span(p(), dim(), {unit_vector(dim(), root_basis_index(gamma))});
}

Subspace ChevalleyAlgebra::cartan() const {
  std::vector<Vec> hs;
  for (int i = 0; i < rs_->rank(); ++i) hs.push_back(unit_vector(dim(), cartan_basis_index(i)));
  return Subspace::span(p(), dim(), hs);
}

ChevalleyAlgebra build_lie_algebra(DynkinType type, int p) { return ChevalleyAlgebra(type, p); }

Subspace lie_of_parabolic(const ChevalleyAlgebra& L, const ParabolicSpec& spec) {
  if (spec.type != L.type()) throw DomainError("bad-dimension", "spec type differs from algebra type");
  const PhiFunction phi = phi_from_spec(spec);
  const RootSystem& rs = L.roots();
  std::vector<Vec> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(unit_vector(L.dim(), L.cartan_basis_index(i)));
  for (int k = 0; k < rs.num_positive(); ++k) {
    gens.push_back(unit_vector(L.dim(), k));
    if (phi.values[k] >= 1) gens.push_back(unit_vector(L.dim(), k + rs.num_positive()));
  }
  return Subspace::span(L.p(), L.dim(), gens);
}

Subspace parabolic_subalgebra(const ChevalleyAlgebra& L, const ParabolicSpec& spec) {
  const PhiFunction phi = phi_from_spec(spec);
  for (int v : phi.values)
    if (v != 0 && v != kInfinity) throw DomainError("not-reduced", "spec has a nontrivial infinitesimal part");
  return lie_of_parabolic(L, spec);
}

}  // namespace flagaut
