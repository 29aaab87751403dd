#include "flagaut/scenarios.hpp"

#include "flagaut/error.hpp"

namespace flagaut {

namespace {

Vec ones_at(int n, std::initializer_list<int> coords) {
  Vec v(n, 0);
  for (int c : coords) v[c] = 1;
  return v;
}

RVec constant(const Vec& v) {
  RVec out(v.size());
  for (size_t c = 0; c < v.size(); ++c) out[c] = static_cast<TruncatedRing::Elem>(v[c] & 1);
  return out;
}

}  // namespace

ScenarioData scenario_data(const WitnessScenario& w) {
  if (w.m < 1 || w.m > 5) throw DomainError("bad-scenario", "m must lie in 1..5");
  ScenarioData d;
  switch (w.which) {
    case ScenarioCase::BnFrobenius: {
      if (w.n < 2 || w.i < 1 || w.i >= w.n) throw DomainError("bad-scenario", "needs n >= 2 and 1 <= i < n");
      // v0^perp with coordinates (x_0, ..., x_{2n}); t scales x_0 alone.
      const int N = 2 * w.n + 1;
      d.ambient = N;
      d.weights.assign(N, 0);
      d.weights[0] = 1;
      d.moving.push_back(ones_at(N, {0, 1, 2 * w.n}));
      for (int c = 2; c <= w.n; ++c) d.moving.push_back(ones_at(N, {c}));
      d.fixed.push_back(ones_at(N, {0, 1, 2 * w.n}));
      for (int c = 2; c <= w.i; ++c) d.fixed.push_back(ones_at(N, {c}));
      d.fixed_inside_moved = true;
      d.relation = "E0 in F^m(t.W0)";
      break;
    }
    case ScenarioCase::G2So7: {
      // Torus exponents of the central cocharacter through beta_3.
      d.ambient = 7;
      d.weights = {0, -1, 1, 0, -1, 1, 0};
      d.moving.push_back(ones_at(7, {2, 3, 4}));
      d.fixed.push_back(ones_at(7, {2, 3, 4}));
      d.fixed.push_back(ones_at(7, {0, 1, 5, 6}));
      d.fixed_inside_moved = false;
      d.relation = "F^m(t.l0) in E0";
      break;
    }
    case ScenarioCase::BnVerySpecial: {
      if (w.n < 2 || w.i < 1 || w.i >= w.n) throw DomainError("bad-scenario", "needs n >= 2 and 1 <= i < n");
      // k^{2n+2}; t scales e_0 by t and e_{2n+1} by t^{-1}. The second factor
      // lives in v0^perp / k v0, so containment is tested modulo k v0.
      const int N = 2 * w.n + 2;
      d.ambient = N;
      d.weights.assign(N, 0);
      d.weights[0] = 1;
      d.weights[N - 1] = -1;
      for (int c = 1; c <= w.n + 1; ++c) d.moving.push_back(ones_at(N, {c}));
      const Vec v0 = ones_at(N, {0, N - 1});
      d.fixed.push_back(v0);
      for (int c = 1; c <= w.i; ++c) d.fixed.push_back(ones_at(N, {c}));
      d.extra.push_back(v0);
      d.fixed_inside_moved = true;
      d.relation = "E0 in F^m(t.W0) + k v0";
      break;
    }
  }
  return d;
}

IncidenceReport mu_incidence_report(const WitnessScenario& w) {
  const ScenarioData d = scenario_data(w);
  const TruncatedRing R(w.m);
  IncidenceReport rep;
  rep.relation = d.relation;
  for (const Vec& g : d.moving) {
    RVec v(d.ambient, 0);
    for (int c = 0; c < d.ambient; ++c) {
      if (g[c] == 0) continue;
      const TruncatedRing::Elem scale = w.identity ? R.one() : R.t_power(d.weights[c]);
      v[c] = R.frobenius(scale, w.m);
    }
    rep.moved.push_back(std::move(v));
  }
  std::vector<RVec> fixed;
  for (const Vec& g : d.fixed) fixed.push_back(constant(g));
  std::vector<RVec> extra;
  for (const Vec& g : d.extra) extra.push_back(constant(g));

  if (d.fixed_inside_moved) {
    std::vector<RVec> outer = rep.moved;
    outer.insert(outer.end(), extra.begin(), extra.end());
    rep.preserved = r_span_contains(R, outer, fixed);
  } else {
    std::vector<RVec> outer = fixed;
    outer.insert(outer.end(), extra.begin(), extra.end());
    rep.preserved = r_span_contains(R, outer, rep.moved);
  }
  return rep;
}

bool mu_incidence_check(const WitnessScenario& w) { return mu_incidence_report(w).preserved; }

std::string to_string(ScenarioCase c) {
  switch (c) {
    case ScenarioCase::BnFrobenius:
      return "bn-frob";
    case ScenarioCase::G2So7:
      return "g2-so7";
    case ScenarioCase::BnVerySpecial:
      return "bn-vs";
  }
  return "?";
}

ScenarioCase parse_scenario_case(const std::string& text) {
  if (text == "bn-frob" || text == "bn-frobenius") return ScenarioCase::BnFrobenius;
  if (text == "g2-so7") return ScenarioCase::G2So7;
  if (text == "bn-vs" || text == "bn-veryspecial") return ScenarioCase::BnVerySpecial;
  throw DomainError("bad-scenario", "unknown scenario '" + text + "'");
}

}  // namespace flagaut
