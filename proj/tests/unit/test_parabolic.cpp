#include "doctest.h"

#include "../support/generators.hpp"
#include "flagaut/error.hpp"
#include "flagaut/parabolic.hpp"

using namespace flagaut;

namespace {

const DynkinType G2 = DynkinType::make(Family::G, 2);
const DynkinType C2 = DynkinType::make(Family::C, 2);
const DynkinType C3 = DynkinType::make(Family::C, 3);

Factor plain(int root, KernelSpec k = KernelSpec::trivial()) { return Factor{root, k, std::nullopt}; }
Factor exotic(ExoticKind w, int m = 0) { return Factor{0, KernelSpec::trivial(), ExoticFactor{w, m}}; }

int phi_at(const ParabolicSpec& s, const Root& g) {
  const RootSystem& rs = root_system(s.type);
  return phi_from_spec(s).values.at(*rs.positive_index(g));
}

}  // namespace

TEST_CASE("kernel chain positions") {
  CHECK(KernelSpec::trivial().chain_position() == 0);
  CHECK(KernelSpec::very_special(0).chain_position() == 1);
  CHECK(KernelSpec::frobenius(1).chain_position() == 2);
  CHECK(KernelSpec::very_special(1).chain_position() == 3);
  for (int pos = 0; pos < 12; ++pos) CHECK(KernelSpec::from_position(pos).chain_position() == pos);
  CHECK(KernelSpec::very_special(2).frobenius_floor() == 2);
  CHECK_THROWS_AS(KernelSpec::frobenius(0), DomainError);
}

TEST_CASE("phi of the exotic parabolics of G2") {
  const ParabolicSpec q1{G2, 2, {exotic(ExoticKind::Q1)}};
  CHECK(phi_at(q1, {2, 1}) == 1);
  for (const Root& g : std::vector<Root>{{1, 0}, {1, 1}, {3, 1}, {3, 2}}) CHECK(phi_at(q1, g) == 0);
  CHECK(phi_at(q1, {0, 1}) == kInfinity);

  // phi = (1,1,0,0,0) on (a1, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2) is Q2.
  const RootSystem& rs = root_system(G2);
  PhiFunction phi;
  phi.values.assign(rs.num_positive(), 0);
  phi.values[*rs.positive_index({0, 1})] = kInfinity;
  phi.values[*rs.positive_index({1, 0})] = 1;
  phi.values[*rs.positive_index({1, 1})] = 1;
  const ParabolicSpec s = spec_from_phi(G2, 2, phi);
  REQUIRE(s.factors.size() == 1);
  REQUIRE(s.factors[0].exotic);
  CHECK(s.factors[0].exotic->which == ExoticKind::Q2);
  CHECK(s.factors[0].exotic->pullback == 0);
}

TEST_CASE("Frobenius factor is m exactly on its support") {
  const ParabolicSpec s{C3, 5, {plain(0, KernelSpec::frobenius(1))}};
  const RootSystem& rs = root_system(C3);
  for (const Root& g : rs.positive_roots()) CHECK(phi_at(s, g) == (g[0] ? 1 : kInfinity));
  CHECK(normalize(s) == s);
}

TEST_CASE("very special kernel heights on C2") {
  const ParabolicSpec s{C2, 2, {plain(1, KernelSpec::very_special(0))}};
  CHECK(phi_at(s, {0, 1}) == 0);         // 2e2
  CHECK(phi_at(s, {2, 1}) == 0);         // 2e1
  CHECK(phi_at(s, {1, 1}) == 1);         // e1 + e2
  CHECK(phi_at(s, {1, 0}) == kInfinity);  // e1 - e2
}

TEST_CASE("validation errors") {
  CHECK_THROWS_WITH_AS(phi_from_spec({C3, 3, {plain(0, KernelSpec::very_special(0))}}),
                       doctest::Contains("no-very-special-isogeny"), DomainError);
  CHECK_THROWS_WITH_AS(phi_from_spec({C3, 2, {exotic(ExoticKind::Q1)}}), doctest::Contains("no-exotic"), DomainError);
  CHECK_THROWS_AS(phi_from_spec({C3, 2, {plain(0), plain(0)}}), DomainError);
}

TEST_CASE("spec_from_phi rejects functions no parabolic realizes") {
  const RootSystem& rs = root_system(C3);
  PhiFunction phi;
  phi.values.assign(rs.num_positive(), kInfinity);
  phi.values[0] = 1;  // only at a1, not on the rest of its support
  CHECK_THROWS_WITH_AS(spec_from_phi(C3, 5, phi), doctest::Contains("not-a-parabolic"), DomainError);
}

TEST_CASE("intersections") {
  const ParabolicSpec pa{C3, 3, {plain(0)}}, pb{C3, 3, {plain(2)}};
  const ParabolicSpec both = intersect(pa, pb);
  CHECK(both.factors == std::vector<Factor>{plain(0), plain(2)});

  // P^{a2} ∩ _1G P^{a1} = P^{a2} ∩ N P^{a1} for G2 at p = 3.
  const ParabolicSpec i = intersect({G2, 3, {plain(1)}}, {G2, 3, {plain(0, KernelSpec::frobenius(1))}});
  CHECK(i.factors == std::vector<Factor>{plain(0, KernelSpec::very_special(0)), plain(1)});
  const CanonicalForm cf = canonical_form(i);
  CHECK(cf.xi == KernelSpec::very_special(0));
  CHECK(cf.J == std::vector<int>{1});
}

TEST_CASE("canonical forms") {
  const CanonicalForm cf = canonical_form({C3, 3, {plain(0), plain(1, KernelSpec::frobenius(1))}});
  CHECK(cf.J == std::vector<int>{0});
  CHECK(cf.xi == KernelSpec::frobenius(1));
  CHECK(cf.J_prime == std::vector<int>{1});

  const CanonicalForm red = canonical_form({C3, 3, {plain(0), plain(2)}});
  CHECK(red.J == std::vector<int>{0, 2});
  CHECK(red.xi.is_trivial());
  CHECK(red.J_prime.empty());

  CHECK(canonical_form({G2, 2, {exotic(ExoticKind::Q1), plain(1, KernelSpec::frobenius(1))}}).exotic);

  CHECK_THROWS_WITH_AS(canonical_form({C3, 3, {plain(0), plain(1, KernelSpec::frobenius(1)), plain(2, KernelSpec::frobenius(2))}}),
                       doctest::Contains("not-uniform"), DomainError);
  CHECK_THROWS_WITH_AS(canonical_form({C3, 3, {plain(0, KernelSpec::frobenius(1))}}), doctest::Contains("contains-kernel"),
                       DomainError);
}

TEST_CASE("up-minus profiles") {
  CHECK(up_minus_profile({C3, 2, {plain(0), plain(1)}}).total == 0);
  const UpMinusProfile q1 = up_minus_profile({G2, 2, {exotic(ExoticKind::Q1)}});
  CHECK(q1.entries.size() == 5);
  CHECK(q1.total == 1);
  // Five positive roots of C3 contain a1 in their support.
  const UpMinusProfile f2 = up_minus_profile({C3, 2, {plain(0, KernelSpec::frobenius(2))}});
  CHECK(f2.entries.size() == 5);
  for (const auto& [g, m] : f2.entries) CHECK(m == 2);
}

TEST_CASE("property: phi round trip and infinity on the Levi") {
  testing::Rng rng(2024);
  const auto types = testing::types_rank_at_most(4);
  for (int trial = 0; trial < 600; ++trial) {
    const ParabolicSpec s = testing::random_spec(rng, types, {2, 3, 5}, 4);
    const ParabolicSpec n = normalize(s);
    CHECK(phi_from_spec(n) == phi_from_spec(s));
    CHECK(normalize(n) == n);
    const RootSystem& rs = root_system(s.type);
    const PhiFunction phi = phi_from_spec(s);
    for (int k = 0; k < rs.num_positive(); ++k) {
      bool meets_factor = false;
      for (const Factor& f : s.factors) meets_factor |= rs.positive_root(k)[f.root] != 0;
      CHECK((phi.values[k] == kInfinity) == !meets_factor);
    }
  }
}

TEST_CASE("property: intersect is idempotent, commutative and associative") {
  testing::Rng rng(99);
  const auto types = testing::types_rank_at_most(3);
  for (int trial = 0; trial < 300; ++trial) {
    const ParabolicSpec a = testing::random_spec(rng, types, {2, 3}, 4);
    ParabolicSpec b = testing::random_spec(rng, {a.type}, {a.p}, 4);
    ParabolicSpec c = testing::random_spec(rng, {a.type}, {a.p}, 4);
    CHECK(intersect(a, a) == normalize(a));
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
    CHECK(contains(a, intersect(a, b)));
  }
}
