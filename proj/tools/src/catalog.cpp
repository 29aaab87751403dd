#include "catalog.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "flagaut/flagaut.hpp"
#include "spec_grammar.hpp"

namespace flagaut::cli {

namespace {

using Clock = std::chrono::steady_clock;

template <class Body>
CriterionResult timed(int id, std::string name, double limit, Body body) {
  CriterionResult r{id, std::move(name), false, 0.0, limit, {}};
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.exact = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

DynkinType T(const char* name) { return DynkinType::parse(name); }

Factor plain(int root, KernelSpec k = KernelSpec::trivial()) { return Factor{root, k, std::nullopt}; }
Factor exotic(ExoticKind which, int pullback = 0) { return Factor{0, KernelSpec::trivial(), ExoticFactor{which, pullback}}; }

std::vector<DynkinType> types_up_to(int max_rank) {
  std::vector<DynkinType> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back(DynkinType::make(Family::A, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(DynkinType::make(Family::B, r));
  for (int r = 2; r <= max_rank; ++r) out.push_back(DynkinType::make(Family::C, r));
  for (int r = 3; r <= max_rank; ++r) out.push_back(DynkinType::make(Family::D, r));
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.push_back(DynkinType::make(Family::E, r));
  if (max_rank >= 4) out.push_back(DynkinType::make(Family::F, 4));
  if (max_rank >= 2) out.push_back(DynkinType::make(Family::G, 2));
  return out;
}

bool jacobi_on_basis(const LieAlgebra& L) {
  const PrimeField& f = L.field();
  const int n = L.dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const Vec x = L.basis_vector(a), y = L.basis_vector(b), z = L.basis_vector(c);
        Vec s = L.bracket(x, L.bracket(y, z));
        s = add_vec(f, s, L.bracket(y, L.bracket(z, x)));
        s = add_vec(f, s, L.bracket(z, L.bracket(x, y)));
        if (!is_zero_vec(s)) return false;
      }
  return true;
}

Vec random_vec(std::mt19937& rng, int p, int n) {
  std::uniform_int_distribution<int> d(0, p - 1);
  Vec v(n);
  for (int& x : v) x = d(rng);
  return v;
}

}  // namespace

std::vector<DynkinType> small_types() { return types_up_to(4); }

std::vector<ParabolicSpec> generated_catalog(const std::vector<DynkinType>& types, const std::vector<int>& primes,
                                             int max_position) {
  std::vector<ParabolicSpec> out;
  for (const DynkinType& t : types)
    for (int p : primes) {
      const bool vs = has_very_special_isogeny(t, p);
      std::vector<int> positions;
      for (int pos = 0; pos <= max_position; ++pos)
        if (pos % 2 == 0 || vs) positions.push_back(pos);
      const int np = static_cast<int>(positions.size());
      for (unsigned mask = 1; mask < (1u << t.rank); ++mask) {
        std::vector<int> roots;
        for (int i = 0; i < t.rank; ++i)
          if (mask & (1u << i)) roots.push_back(i);
        // Odometer over kernel choices per factor.
        std::vector<int> digit(roots.size(), 0);
        for (;;) {
          ParabolicSpec s{t, p, {}};
          for (size_t k = 0; k < roots.size(); ++k)
            s.factors.push_back(plain(roots[k], KernelSpec::from_position(positions[digit[k]])));
          out.push_back(std::move(s));
          size_t k = 0;
          while (k < digit.size() && ++digit[k] == np) digit[k++] = 0;
          if (k == digit.size()) break;
        }
      }
      if (has_exotic_parabolics(t, p))
        for (ExoticKind q : {ExoticKind::Q1, ExoticKind::Q2})
          for (int pb = 0; pb <= max_position / 2; ++pb) {
            out.push_back(ParabolicSpec{t, p, {exotic(q, pb)}});
            for (int pos = 0; pos <= max_position; pos += 2)
              out.push_back(ParabolicSpec{t, p, {exotic(q, pb), plain(1, KernelSpec::from_position(pos))}});
          }
    }
  return out;
}

CriterionResult criterion_demazure_table() {
  return timed(1, "Demazure exceptional pairs, rank <= 6", 1.0, [](CriterionResult& r) {
    int exceptional = 0, mismatches = 0;
    for (const DynkinType& t : types_up_to(6))
      for (int a = 0; a < t.rank; ++a) {
        const auto info = demazure_aut(t, a);
        std::optional<DynkinType> want;
        if (t.family == Family::C && a == 0) want = DynkinType::make(Family::A, 2 * t.rank - 1);
        if (t.family == Family::B && a == t.rank - 1) want = DynkinType::make(Family::D, t.rank + 1);
        if (t.family == Family::G && a == 0) want = DynkinType::make(Family::B, 3);
        const bool ok = info ? (want && info->hat_type == *want) : !want;
        if (info) ++exceptional;
        if (!ok) ++mismatches;
      }
    r.exact = mismatches == 0;
    r.detail = std::to_string(exceptional) + " exceptional pairs, " + std::to_string(mismatches) + " mismatches";
  });
}

CriterionResult criterion_main_catalog() {
  return timed(2, "automorphism catalog", 1.0, [](CriterionResult& r) {
    std::vector<std::string> failures;
    auto expect = [&](const std::string& label, const ParabolicSpec& s, std::optional<InfinitesimalFactor> inf,
                      int lie_dim) {
      const AutDescriptor a = aut_group(s);
      if (a.infinitesimal != inf || a.lie_dim != lie_dim || a.is_reduced == inf.has_value()) failures.push_back(label);
    };
    const DynkinType A5 = T("A5");
    expect("C3 p3 P^a1 ∩ _1G P^a2", {T("C3"), 3, {plain(0), plain(1, KernelSpec::frobenius(1))}},
           InfinitesimalFactor{A5, 1}, 35);
    expect("G2 p2 Q2", {T("G2"), 2, {exotic(ExoticKind::Q2)}}, std::nullopt, 14);
    for (int m : {1, 2}) {
      expect("G2 p2 Q1 ∩ _mG P^a2, m=" + std::to_string(m),
             {T("G2"), 2, {exotic(ExoticKind::Q1), plain(1, KernelSpec::frobenius(m))}}, InfinitesimalFactor{A5, m}, 35);
      expect("G2 p2 Q2 ∩ _mG P^a2, m=" + std::to_string(m),
             {T("G2"), 2, {exotic(ExoticKind::Q2), plain(1, KernelSpec::frobenius(m))}}, std::nullopt, 14);
    }
    expect("B3 p2 P^a3 ∩ ^1N P^a1", {T("B3"), 2, {plain(2), plain(0, KernelSpec::very_special(1))}},
           InfinitesimalFactor{T("D4"), 1}, 28);

    int type_a = 0;
    std::vector<DynkinType> as;
    for (int n = 1; n <= 4; ++n) as.push_back(DynkinType::make(Family::A, n));
    for (const ParabolicSpec& s : generated_catalog(as, {2, 3, 5}, 4)) {
      ++type_a;
      const AutDescriptor a = aut_group(s);
      if (!a.is_reduced || a.reduced_type != s.type || a.lie_dim != root_system(s.type).group_dimension()) {
        failures.push_back("type A " + format_spec(s));
        break;
      }
    }
    r.exact = failures.empty();
    r.detail = "6 named cases + " + std::to_string(type_a) + " type-A specs";
    for (const std::string& f : failures) r.detail += "; FAILED " + f;
  });
}

CriterionResult criterion_exotic_enumeration() {
  return timed(3, "exotic p-subalgebras of G2 at p = 2", 10.0, [](CriterionResult& r) {
    const ExoticEnumeration e = enumerate_exotic_subalgebras();
    const RootSystem& rs = root_system(T("G2"));
    std::set<std::vector<Root>> got;
    std::string dims;
    for (const auto& h : e.hits) {
      std::vector<Root> extra = h.extra_roots;
      std::sort(extra.begin(), extra.end());
      got.insert(extra);
      dims += (dims.empty() ? "" : ",") + std::to_string(h.algebra.dim());
    }
    std::vector<Root> q1{negate(Root{2, 1})};
    std::vector<Root> q2{negate(Root{1, 0}), negate(Root{1, 1})};
    std::sort(q2.begin(), q2.end());
    const bool dims_ok = e.hits.size() == 2 && std::all_of(e.hits.begin(), e.hits.end(), [&](const auto& h) {
                           return h.algebra.dim() == 9 + static_cast<int>(h.extra_roots.size());
                         });
    r.exact = dims_ok && got == std::set<std::vector<Root>>{q1, q2};
    r.detail = std::to_string(e.candidates) + " candidates, " + std::to_string(e.hits.size()) + " hits, dims " + dims +
               " (" + rs.type().name() + ", " + e.caveat + ")";
  });
}

CriterionResult criterion_rank_one_exotic_arithmetic() {
  return timed(4, "rank-one exotic dimension arithmetic", 1.0, [](CriterionResult& r) {
    const RootSystem& g2 = root_system(T("G2"));
    const RootSystem& c3 = root_system(T("C3"));
    const std::uint64_t v = weyl_dim(g2, fundamental_weight(2, 0));
    // Weights of (Lie Sp6 / Lie P^beta) ⊗ k_{-beta}: -gamma - beta for gamma
    // positive with beta in its support, beta the long simple root a3.
    const Root beta = c3.simple_root(2);
    int total = 0, dominant = 0;
    std::string bad;
    for (const Root& g : c3.positive_roots()) {
      if (g[2] == 0) continue;
      ++total;
      const Root w = add_roots(negate(g), negate(beta));
      if (is_dominant(c3, c3.weight_of(w), Dominance::OppositeBorel)) ++dominant;
      else bad += (bad.empty() ? "" : " ") + c3.label(w);
    }
    const AutDescriptor a = aut_group({T("G2"), 2, {exotic(ExoticKind::Q2)}});
    const int lie_sp6 = c3.group_dimension();
    const bool arith = v == 7 && lie_sp6 - static_cast<int>(v) == 14 && a.lie_dim == 14;
    r.exact = arith && dominant == total;
    r.detail = "weyl_dim(G2, w1) = " + std::to_string(v) + "; " + std::to_string(lie_sp6) + " - " + std::to_string(v) +
               " = " + std::to_string(lie_sp6 - static_cast<int>(v)) + "; aut lie_dim " + std::to_string(a.lie_dim) +
               "; B^- dominant shifted weights " + std::to_string(dominant) + "/" + std::to_string(total);
    if (!bad.empty()) r.detail += " (not dominant: " + bad + ")";
  });
}

CriterionResult criterion_mu_incidence() {
  return timed(5, "mu-incidence non-preservation", 5.0, [](CriterionResult& r) {
    bool ok = true;
    for (ScenarioCase c : {ScenarioCase::BnFrobenius, ScenarioCase::G2So7, ScenarioCase::BnVerySpecial}) {
      WitnessScenario w{c, 2, 1, 1, false};
      const bool moved = mu_incidence_check(w);
      w.identity = true;
      const bool base = mu_incidence_check(w);
      ok &= !moved && base;
      r.detail += (r.detail.empty() ? "" : "; ") + to_string(c) + ": preserved=" + (moved ? "true" : "false") +
                  ", at t=1 " + (base ? "true" : "false");
    }
    r.exact = ok;
  });
}

CriterionResult criterion_lie_N_normalizer() {
  return timed(6, "Lie N and its normalizer in Lambda^2 k^8", 5.0, [](CriterionResult& r) {
    const WedgeModel W = orthogonal_wedge_model(3);
    const Subspace N = wedge_lie_N(W);
    const Subspace norm = normalizer(W.algebra, N);
    const Subspace so7 = wedge_stabilizer(W);
    r.exact = N.dim() == 6 && norm.dim() == 21;
    r.detail = "dim Lie N = " + std::to_string(N.dim()) + ", dim normalizer = " + std::to_string(norm.dim()) +
               ", dim Stab(v0) = " + std::to_string(so7.dim()) + ", Stab(v0) + center = " +
               std::to_string(so7.sum(center(W.algebra)).dim()) +
               (so7.sum(center(W.algebra)) == norm ? " (equals the normalizer)" : "");
  });
}

CriterionResult criterion_property_suites() {
  return timed(7, "property suites", 60.0, [](CriterionResult& r) {
    std::mt19937 rng(20240611);
    std::vector<std::string> failures;

    // phi round trip.
    const std::vector<ParabolicSpec> specs = generated_catalog(small_types(), {2, 3, 5}, 4);
    int round_trips = 0;
    for (const ParabolicSpec& s : specs) {
      const ParabolicSpec n = normalize(s);
      if (phi_from_spec(n) != phi_from_spec(s) || normalize(n) != n || parse_spec(format_spec(n)) != n) {
        failures.push_back("round trip " + format_spec(s));
        break;
      }
      ++round_trips;
    }

    // Jacobi and ad(x^[p]) = ad(x)^p.
    int algebras = 0;
    auto check_algebra = [&](const LieAlgebra& L, const std::string& name) {
      ++algebras;
      if (!jacobi_on_basis(L)) failures.push_back("jacobi " + name);
      for (int k = 0; k < 100; ++k) {
        const Vec x = random_vec(rng, L.p(), L.dim());
        if (L.ad(L.p_power(x)) != L.ad(x).power(L.field(), static_cast<unsigned>(L.p()))) {
          failures.push_back("ad(x^[p]) " + name);
          break;
        }
      }
    };
    for (const DynkinType& t : small_types())
      for (int p : {2, 3, 5}) check_algebra(ChevalleyAlgebra(t, p).algebra(), t.name() + "/p" + std::to_string(p));
    check_algebra(orthogonal_wedge_model(2).algebra, "wedge k^6");
    check_algebra(orthogonal_wedge_model(3).algebra, "wedge k^8");
    check_algebra(odd_orthogonal_action(3).algebra(), "so7");
    check_algebra(symplectic_wedge_action(3).algebra(), "sp6");

    // intersect laws on random pairs of specs over the same group.
    std::map<std::pair<DynkinType, int>, std::vector<size_t>> groups;
    for (size_t k = 0; k < specs.size(); ++k) groups[{specs[k].type, specs[k].p}].push_back(k);
    std::uniform_int_distribution<size_t> pick(0, specs.size() - 1);
    int intersections = 0;
    for (; intersections < 500; ++intersections) {
      const ParabolicSpec& a = specs[pick(rng)];
      const auto& same = groups[{a.type, a.p}];
      const ParabolicSpec& b = specs[same[std::uniform_int_distribution<size_t>(0, same.size() - 1)(rng)]];
      if (intersect(a, a) != normalize(a) || intersect(a, b) != intersect(b, a)) {
        failures.push_back("intersect " + format_spec(a) + " / " + format_spec(b));
        break;
      }
    }

    // p_closure is extensive, monotone and idempotent.
    int closures = 0;
    for (const char* name : {"G2", "B3", "C3"})
      for (int p : {2, 3}) {
        const ChevalleyAlgebra L(T(name), p);
        for (int k = 0; k < 20; ++k) {
          Subspace s(p, L.dim());
          std::uniform_int_distribution<int> nb(1, 3);
          for (int g = nb(rng); g > 0; --g) s.insert(random_vec(rng, p, L.dim()));
          Subspace t = s;
          t.insert(L.algebra().basis_vector(std::uniform_int_distribution<int>(0, L.dim() - 1)(rng)));
          const Subspace cs = p_closure(L.algebra(), s), ct = p_closure(L.algebra(), t);
          ++closures;
          if (!s.is_subspace_of(cs) || !cs.is_subspace_of(ct) || p_closure(L.algebra(), cs) != cs)
            failures.push_back(std::string("p_closure ") + name);
        }
      }

    // Pairing matrix is the identity.
    int pairings = 0;
    for (const ParabolicSpec& s : specs) {
      const auto m = pairing_matrix(s);
      ++pairings;
      for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
          if (m[i][j] != (i == j ? 1 : 0)) failures.push_back("pairing " + format_spec(s));
    }

    r.exact = failures.empty() && round_trips >= 500;
    std::ostringstream d;
    d << round_trips << " round trips, " << algebras << " algebras (Jacobi + 100 random ad checks), " << intersections
      << " intersections, " << closures << " closures, " << pairings << " pairing matrices";
    for (const std::string& f : failures) d << "; FAILED " << f;
    r.detail = d.str();
  });
}

CriterionResult criterion_relative_tangent() {
  return timed(8, "relative tangent sections vanish", 60.0, [](CriterionResult& r) {
    int checked = 0, skipped = 0;
    std::vector<std::string> failures;
    for (const ParabolicSpec& s : generated_catalog(small_types(), {2, 3, 5}, 4)) {
      int v = 0;
      try {
        v = relative_tangent_sections_dim(s);
      } catch (const DomainError&) {
        ++skipped;
        continue;
      }
      ++checked;
      if (v != 0) failures.push_back(format_spec(s) + " -> " + std::to_string(v));
    }
    r.exact = failures.empty() && checked > 0;
    r.detail = std::to_string(checked) + " specs satisfy the precondition, " + std::to_string(skipped) + " skipped";
    for (size_t k = 0; k < std::min<size_t>(failures.size(), 5); ++k) r.detail += "; FAILED " + failures[k];
  });
}

std::vector<std::function<CriterionResult()>> all_criteria() {
  return {criterion_demazure_table,         criterion_main_catalog,  criterion_exotic_enumeration,
          criterion_rank_one_exotic_arithmetic, criterion_mu_incidence, criterion_lie_N_normalizer,
          criterion_property_suites,        criterion_relative_tangent};
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.3f s < %g s", r.seconds, r.time_limit);
  return std::string(r.pass() ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + " (" + timing +
         "): " + r.detail;
}

}  // namespace flagaut::cli
