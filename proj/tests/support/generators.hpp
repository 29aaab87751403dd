#pragma once

// Hand-rolled generators for property tests. Deterministic: every generator
// draws from an explicitly seeded engine so failures reproduce.

#include <random>
#include <vector>

#include "flagaut/parabolic.hpp"

namespace flagaut::testing {

using Rng = std::mt19937_64;

inline std::vector<DynkinType> types_rank_at_most(int r) {
  std::vector<DynkinType> out;
  for (int n = 1; n <= r; ++n) out.push_back(DynkinType::make(Family::A, n));
  for (int n = 2; n <= r; ++n) out.push_back(DynkinType::make(Family::B, n));
  for (int n = 2; n <= r; ++n) out.push_back(DynkinType::make(Family::C, n));
  for (int n = 3; n <= r; ++n) out.push_back(DynkinType::make(Family::D, n));
  if (r >= 4) out.push_back(DynkinType::make(Family::F, 4));
  if (r >= 2) out.push_back(DynkinType::make(Family::G, 2));
  return out;
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// A random valid kernel for (type, p) with chain position <= max_position.
inline KernelSpec random_kernel(Rng& rng, const DynkinType& t, int p, int max_position) {
  for (;;) {
    const int pos = uniform(rng, 0, max_position);
    if (pos % 2 == 1 && !has_very_special_isogeny(t, p)) continue;
    return KernelSpec::from_position(pos);
  }
}

/// Random spec: nonempty factor subset, independent kernels, and for G2 at
/// p = 2 sometimes an exotic factor at a1.
inline ParabolicSpec random_spec(Rng& rng, const std::vector<DynkinType>& types, const std::vector<int>& primes,
                                 int max_position) {
  const DynkinType t = types[uniform(rng, 0, static_cast<int>(types.size()) - 1)];
  const int p = primes[uniform(rng, 0, static_cast<int>(primes.size()) - 1)];
  ParabolicSpec s{t, p, {}};
  while (s.factors.empty())
    for (int i = 0; i < t.rank; ++i)
      if (uniform(rng, 0, 1)) s.factors.push_back(Factor{i, random_kernel(rng, t, p, max_position), std::nullopt});
  if (has_exotic_parabolics(t, p) && s.factors.front().root == 0 && uniform(rng, 0, 2) == 0)
    s.factors.front() = Factor{0, KernelSpec::trivial(),
                               ExoticFactor{uniform(rng, 0, 1) ? ExoticKind::Q1 : ExoticKind::Q2, uniform(rng, 0, 2)}};
  return s;
}

inline std::vector<int> random_vector(Rng& rng, int p, int n) {
  std::vector<int> v(n);
  for (int& x : v) x = uniform(rng, 0, p - 1);
  return v;
}

}  // namespace flagaut::testing
