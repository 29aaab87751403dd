// Cross-module invariants over random specs. Seeds are fixed; a failure
// message includes the formatted spec so it can be replayed through the CLI.

#include "doctest.h"

#include "../support/generators.hpp"
#include "flagaut/autgroup.hpp"
#include "flagaut/chevalley.hpp"
#include "flagaut/error.hpp"
#include "flagaut/geometry.hpp"
#include "flagaut/isogeny.hpp"
#include "flagaut/oracle.hpp"
#include "spec_grammar.hpp"

using namespace flagaut;

namespace {

std::vector<ParabolicSpec> draw(std::uint64_t seed, int count, int max_rank, std::vector<int> primes, int max_pos) {
  testing::Rng rng(seed);
  const auto types = testing::types_rank_at_most(max_rank);
  std::vector<ParabolicSpec> out;
  for (int k = 0; k < count; ++k) out.push_back(testing::random_spec(rng, types, primes, max_pos));
  return out;
}

}  // namespace

TEST_CASE("phi determines the spec") {
  for (const ParabolicSpec& s : draw(1, 600, 4, {2, 3, 5}, 5)) {
    INFO(cli::format_spec(s));
    const ParabolicSpec n = normalize(s);
    CHECK(spec_from_phi(s.type, s.p, phi_from_spec(s)) == n);
    CHECK(contains(s, n));
    CHECK(contains(n, s));
    CHECK(picard_rank(n) == picard_rank(s));
  }
}

TEST_CASE("intersections are meets for containment") {
  testing::Rng rng(3);
  const auto types = testing::types_rank_at_most(3);
  for (int k = 0; k < 500; ++k) {
    const ParabolicSpec a = testing::random_spec(rng, types, {2, 3}, 5);
    const ParabolicSpec b = testing::random_spec(rng, {a.type}, {a.p}, 5);
    const ParabolicSpec c = intersect(a, b);
    INFO(cli::format_spec(a), " ^ ", cli::format_spec(b));
    CHECK(contains(a, c));
    CHECK(contains(b, c));
    CHECK((contains(a, b) == (c == normalize(b))));
  }
}

TEST_CASE("contraction targets contain the spec and are single factors") {
  for (const ParabolicSpec& s : draw(4, 500, 4, {2, 3, 5}, 5)) {
    if (s.factors.front().exotic) continue;
    INFO(cli::format_spec(s));
    for (const Factor& f : s.factors) {
      const ParabolicSpec q = contraction_target(s, f.root);
      CHECK(q.factors.size() == 1);
      CHECK(contains(q, s));
    }
  }
}

TEST_CASE("canonical form reproduces the spec and preserves aut") {
  int checked = 0;
  for (const ParabolicSpec& s : draw(5, 700, 4, {2, 3, 5}, 5)) {
    INFO(cli::format_spec(s));
    CanonicalForm cf;
    try {
      cf = canonical_form(s);
    } catch (const DomainError&) {
      continue;
    }
    if (cf.exotic) continue;
    ++checked;
    ParabolicSpec rebuilt{s.type, s.p, {}};
    for (int r : cf.J) rebuilt.factors.push_back(Factor{r, {}, std::nullopt});
    for (int r : cf.J_prime) rebuilt.factors.push_back(Factor{r, cf.xi, std::nullopt});
    std::sort(rebuilt.factors.begin(), rebuilt.factors.end(),
              [](const Factor& x, const Factor& y) { return x.root < y.root; });
    CHECK(normalize(rebuilt) == cf.normalized);
    CHECK(aut_group(cf.normalized).lie_dim == aut_group(s).lie_dim);
  }
  CHECK(checked > 100);
}

TEST_CASE("chain order is total and monotone") {
  for (const DynkinType& t : testing::types_rank_at_most(4))
    for (int p : {2, 3}) {
      const bool vs = has_very_special_isogeny(t, p);
      for (int a = 0; a < 9; ++a) {
        if (a % 2 && !vs) continue;
        const KernelSpec ka = KernelSpec::from_position(a);
        CHECK(ka.frobenius_floor() == a / 2);
        for (int b = 0; b < 9; ++b) {
          if (b % 2 && !vs) continue;
          CHECK(chain_compare(t, p, ka, KernelSpec::from_position(b)) == (a <=> b));
        }
      }
    }
}

TEST_CASE("Lie of a parabolic is a restricted subalgebra") {
  testing::Rng rng(8);
  const auto types = testing::types_rank_at_most(3);
  for (int k = 0; k < 60; ++k) {
    const ParabolicSpec s = testing::random_spec(rng, types, {2, 3}, 3);
    INFO(cli::format_spec(s));
    const ChevalleyAlgebra L = build_lie_algebra(s.type, s.p);
    const Subspace lie = lie_of_parabolic(L, s);
    CHECK(is_p_subalgebra(L.algebra(), lie));
  }
}
