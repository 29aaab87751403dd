#include "doctest.h"

#include <set>

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "flagaut/chevalley.hpp"
#include "flagaut/error.hpp"
#include "flagaut/oracle.hpp"
#include "flagaut/parabolic.hpp"

using namespace flagaut;

namespace {

// Euclidean root set keyed by simple coordinates, for string lengths.
std::set<Root> root_set(const DynkinType& t) {
  const auto er = testing::euclidean_roots(t);
  std::set<Root> out;
  for (const auto& r : er.roots) out.insert(testing::simple_coordinates(er, r));
  return out;
}

Root sub(const Root& a, const Root& b) {
  Root out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

TEST_CASE("structure constants have absolute value r + 1") {
  for (const DynkinType& t : testing::types_rank_at_most(4)) {
    CAPTURE(t.name());
    const RootSystem& rs = root_system(t);
    const std::set<Root> roots = root_set(t);
    const StructureConstants N(rs);
    for (const Root& a : roots)
      for (const Root& b : roots) {
        const Root s = add_roots(a, b);
        if (!roots.count(s)) continue;
        int r = 0;
        for (Root c = sub(b, a); roots.count(c); c = sub(c, a)) ++r;
        CHECK(std::abs(N(a, b)) == r + 1);
        CHECK(N(a, b) == -N(b, a));
        CHECK(N(negate(a), negate(b)) == -N(a, b));
      }
  }
}

TEST_CASE("Cartan action and coroot brackets") {
  for (const char* name : {"B3", "C3", "G2", "F4", "D4"}) {
    const ChevalleyAlgebra L(DynkinType::parse(name), 7);
    const RootSystem& rs = L.roots();
    const PrimeField& f = L.algebra().field();
    for (const Root& g : rs.roots()) {
      const Vec e = L.algebra().basis_vector(L.root_basis_index(g));
      for (int i = 0; i < rs.rank(); ++i) {
        const Vec h = L.algebra().basis_vector(L.cartan_basis_index(i));
        CHECK(L.algebra().bracket(h, e) == scale_vec(f, f.reduce(rs.pairing(g, i)), e));
      }
      const Vec ef = L.algebra().bracket(e, L.algebra().basis_vector(L.root_basis_index(negate(g))));
      const std::vector<int> co = rs.coroot(g);
      for (int i = 0; i < rs.rank(); ++i) CHECK(ef[L.cartan_basis_index(i)] == f.reduce(co[i]));
    }
  }
}

TEST_CASE("restricted structure: e^[p] = 0, h^[p] = h") {
  const ChevalleyAlgebra L(DynkinType::parse("G2"), 3);
  for (int k = 0; k < L.roots().num_roots(); ++k) CHECK(is_zero_vec(L.algebra().p_power_basis(k)));
  for (int i = 0; i < 2; ++i) {
    const int b = L.cartan_basis_index(i);
    CHECK(L.algebra().p_power_basis(b) == L.algebra().basis_vector(b));
  }
}

TEST_CASE("centers of small Chevalley algebras") {
  CHECK(center(ChevalleyAlgebra(DynkinType::parse("G2"), 5).algebra()).dim() == 0);
  CHECK(center(ChevalleyAlgebra(DynkinType::parse("A1"), 2).algebra()).dim() == 1);
  // sl_3 at p = 3 has the scalar matrices in the span of the coroots.
  CHECK(center(ChevalleyAlgebra(DynkinType::parse("A2"), 3).algebra()).dim() == 1);
}

TEST_CASE("unsupported primes") {
  CHECK_THROWS_AS(ChevalleyAlgebra(DynkinType::parse("A2"), 11), DomainError);
  CHECK_THROWS_AS(ChevalleyAlgebra(DynkinType::parse("A2"), 4), DomainError);
}

TEST_CASE("parabolic subalgebras are p-subalgebras") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const ParabolicSpec s = testing::random_spec(rng, testing::types_rank_at_most(3), {2, 3}, 4);
    CAPTURE(s.type.name());
    const ChevalleyAlgebra L(s.type, s.p);
    const Subspace lie = lie_of_parabolic(L, s);
    CHECK(p_closure(L.algebra(), lie) == lie);
  }
  const ChevalleyAlgebra G2(DynkinType::parse("G2"), 2);
  const ParabolicSpec pa1{DynkinType::parse("G2"), 2, {Factor{0, KernelSpec::trivial(), std::nullopt}}};
  CHECK(parabolic_subalgebra(G2, pa1).dim() == 9);
  const ParabolicSpec nonred{DynkinType::parse("G2"), 2, {Factor{0, KernelSpec::frobenius(1), std::nullopt}}};
  CHECK_THROWS_AS(parabolic_subalgebra(G2, nonred), DomainError);
}

TEST_CASE("matrix algebras: gl_2 over F_3") {
  std::vector<Matrix> basis;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      Matrix m(2, 2);
      m.at(r, c) = 1;
      basis.push_back(m);
    }
  const LieAlgebra gl2 = lie_algebra_from_matrices(3, basis);
  CHECK(gl2.dim() == 4);
  CHECK(center(gl2).dim() == 1);
  // E_01 alone spans a p-subalgebra; a non-closed span is rejected.
  CHECK_THROWS_AS(lie_algebra_from_matrices(3, {basis[1], basis[2]}), DomainError);
}

TEST_CASE("Jacobson formula matches the matrix p-th power") {
  testing::Rng rng(3);
  for (int p : {2, 3, 5}) {
    std::vector<Matrix> basis;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        Matrix m(3, 3);
        m.at(r, c) = 1;
        basis.push_back(m);
      }
    const LieAlgebra gl3 = lie_algebra_from_matrices(p, basis);
    const PrimeField f(p);
    for (int k = 0; k < 20; ++k) {
      const Vec x = testing::random_vector(rng, p, 9);
      Matrix X(3, 3);
      for (int i = 0; i < 9; ++i) X.at(i / 3, i % 3) = x[i];
      const Matrix Xp = X.power(f, static_cast<unsigned>(p));
      CHECK(matrix_coordinates(f, basis, Xp) == gl3.p_power(x));
    }
  }
}
