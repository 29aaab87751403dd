#include "doctest.h"

#include "../support/generators.hpp"
#include "flagaut/autgroup.hpp"
#include "flagaut/error.hpp"
#include "flagaut/geometry.hpp"

using namespace flagaut;

namespace {

const DynkinType A3 = DynkinType::make(Family::A, 3);
const DynkinType B3 = DynkinType::make(Family::B, 3);
const DynkinType C3 = DynkinType::make(Family::C, 3);
const DynkinType G2 = DynkinType::make(Family::G, 2);

Factor plain(int root, KernelSpec k = KernelSpec::trivial()) { return Factor{root, k, std::nullopt}; }
Factor exotic(ExoticKind w, int m = 0) { return Factor{0, KernelSpec::trivial(), ExoticFactor{w, m}}; }

}  // namespace

TEST_CASE("Demazure exceptional pairs") {
  const auto c = demazure_aut(C3, 0);
  REQUIRE(c);
  CHECK(c->hat_type == DynkinType::make(Family::A, 5));
  CHECK(c->hat_name == "PGL_6");
  const auto b = demazure_aut(B3, 2);
  REQUIRE(b);
  CHECK(b->hat_type == DynkinType::make(Family::D, 4));
  const auto g = demazure_aut(G2, 0);
  REQUIRE(g);
  CHECK(g->hat_type == B3);
  CHECK_FALSE(demazure_aut(G2, 1));
  CHECK_FALSE(demazure_aut(C3, 1));
  CHECK_FALSE(demazure_aut(B3, 0));
  for (int n = 1; n <= 6; ++n)
    for (int a = 0; a < n; ++a) CHECK_FALSE(demazure_aut(DynkinType::make(Family::A, n), a));

  CHECK(demazure_dimension(C3, {0}) == 35);
  CHECK(demazure_dimension(C3, {0, 1}) == 21);
  CHECK(demazure_dimension(G2, {0}) == 21);
}

TEST_CASE("automorphism groups of the worked examples") {
  const AutDescriptor c = aut_group({C3, 3, {plain(0), plain(1, KernelSpec::frobenius(1))}});
  REQUIRE(c.infinitesimal);
  CHECK(*c.infinitesimal == InfinitesimalFactor{DynkinType::make(Family::A, 5), 1});
  CHECK(c.lie_dim == 35);
  CHECK_FALSE(c.is_reduced);
  CHECK(c.reduced_type == C3);

  const AutDescriptor q2 = aut_group({G2, 2, {exotic(ExoticKind::Q2)}});
  CHECK(q2.reduced_type == G2);
  CHECK(q2.lie_dim == 14);
  CHECK(q2.is_reduced);

  const AutDescriptor q1 = aut_group({G2, 2, {exotic(ExoticKind::Q1)}});
  CHECK(q1.reduced_type == DynkinType::make(Family::A, 5));
  CHECK(q1.lie_dim == 35);

  for (int m = 1; m <= 3; ++m) {
    const AutDescriptor y = aut_group({G2, 2, {exotic(ExoticKind::Q1), plain(1, KernelSpec::frobenius(m))}});
    REQUIRE(y.infinitesimal);
    CHECK(*y.infinitesimal == InfinitesimalFactor{DynkinType::make(Family::A, 5), m});
    CHECK(y.lie_dim == 35);
    const AutDescriptor z = aut_group({G2, 2, {exotic(ExoticKind::Q2), plain(1, KernelSpec::frobenius(m))}});
    CHECK(z.is_reduced);
    CHECK(z.lie_dim == 14);
  }

  const AutDescriptor b = aut_group({B3, 2, {plain(0, KernelSpec::very_special(1)), plain(2)}});
  REQUIRE(b.infinitesimal);
  CHECK(*b.infinitesimal == InfinitesimalFactor{DynkinType::make(Family::D, 4), 1});
  CHECK(b.lie_dim == 28);
}

TEST_CASE("Picard rank one") {
  CHECK(aut_group({C3, 5, {plain(0)}}).lie_dim == 35);
  const AutDescriptor twisted = aut_group({C3, 5, {plain(0, KernelSpec::frobenius(2))}});
  CHECK(twisted.frobenius_twist == 2);
  CHECK(twisted.lie_dim == 35);
  CHECK(twisted.is_reduced);
  // N P^{a1} of B3 is the preimage of the maximal parabolic at a1 of C3.
  const AutDescriptor dual = aut_group({B3, 2, {plain(0, KernelSpec::very_special(0))}});
  CHECK(dual.reduced_is_dual);
  CHECK(dual.acting_type == C3);
  CHECK(dual.lie_dim == 35);
}

TEST_CASE("relative tangent sections vanish") {
  CHECK(relative_tangent_sections_dim({C3, 3, {plain(0), plain(1, KernelSpec::frobenius(1))}}) == 0);
  CHECK(relative_tangent_sections_dim({A3, 2, {plain(0), plain(1, KernelSpec::frobenius(1))}}) == 0);
  CHECK(relative_tangent_sections_dim({B3, 2, {plain(0), plain(1, KernelSpec::frobenius(1))}}) == 0);
  CHECK_THROWS_WITH_AS(relative_tangent_sections_dim({B3, 2, {plain(0), plain(1, KernelSpec::very_special(0))}}),
                       doctest::Contains("kernel-too-small"), DomainError);
  CHECK_THROWS_WITH_AS(
      relative_tangent_sections_dim({G2, 2, {exotic(ExoticKind::Q1), plain(1, KernelSpec::frobenius(1))}}),
      doctest::Contains("exotic"), DomainError);
}

TEST_CASE("variety labels") {
  CHECK(picard_rank_one_variety_label({C3, 3, {plain(0)}}) == "P^5");
  CHECK(picard_rank_one_variety_label({G2, 2, {exotic(ExoticKind::Q1)}}) == "P^5");
  CHECK(picard_rank_one_variety_label({G2, 2, {exotic(ExoticKind::Q2)}}) ==
        "general hyperplane section of the Lagrangian Grassmannian");
  CHECK(picard_rank_one_variety_label({B3, 2, {plain(0)}}) == "smooth quadric in P^6");
}

TEST_CASE("property: aut group contains the acting group and ignores type-A kernels") {
  testing::Rng rng(7);
  const auto types = testing::types_rank_at_most(4);
  int checked = 0;
  for (int trial = 0; trial < 800; ++trial) {
    const ParabolicSpec s = testing::random_spec(rng, types, {2, 3, 5}, 5);
    AutDescriptor a;
    try {
      a = aut_group(s);
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("not-uniform") != std::string::npos);
      continue;
    }
    ++checked;
    CHECK(a.lie_dim >= root_system(a.acting_type).group_dimension());
    CHECK(a.is_reduced == !a.infinitesimal.has_value());
    if (a.infinitesimal) CHECK(a.lie_dim == root_system(a.infinitesimal->hat).group_dimension());
    if (s.type.family == Family::A) {
      CHECK(a.is_reduced);
      CHECK(a.lie_dim == root_system(s.type).group_dimension());
    }
    CHECK(aut_group(normalize(s)).lie_dim == a.lie_dim);
  }
  CHECK(checked > 500);
}

TEST_CASE("property: pulling back the whole spec only shifts the twist") {
  testing::Rng rng(11);
  const auto types = testing::types_rank_at_most(4);
  for (int trial = 0; trial < 300; ++trial) {
    const ParabolicSpec s = testing::random_spec(rng, types, {2, 3, 5}, 4);
    ParabolicSpec pulled = s;
    for (Factor& f : pulled.factors) {
      if (f.exotic) ++f.exotic->pullback;
      else f.kernel = KernelSpec::from_position(f.kernel.chain_position() + 2);
    }
    AutDescriptor a, b;
    try {
      a = aut_group(s);
      b = aut_group(pulled);
    } catch (const DomainError&) {
      continue;
    }
    CHECK(b.frobenius_twist == a.frobenius_twist + 1);
    CHECK(b.reduced_type == a.reduced_type);
    CHECK(b.lie_dim == a.lie_dim);
    CHECK(b.infinitesimal == a.infinitesimal);
  }
}
