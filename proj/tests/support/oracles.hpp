#pragma once

// Independent reference computations. None of these call into the library's
// root-string or echelon code; they work in Euclidean coordinates or by
// exhaustive enumeration.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "flagaut/rootsys.hpp"
#include "flagaut/truncated_ring.hpp"

namespace flagaut::testing {

/// Roots in doubled epsilon coordinates (all entries integral).
struct EuclideanRoots {
  std::vector<std::vector<int>> simple;
  std::vector<std::vector<int>> roots;
};

inline EuclideanRoots euclidean_roots(const DynkinType& t) {
  const int n = t.rank;
  EuclideanRoots out;
  auto e = [&](int dim, std::initializer_list<std::pair<int, int>> entries) {
    std::vector<int> v(dim, 0);
    for (auto [i, c] : entries) v[i] += 2 * c;
    return v;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          if (i != j) out.roots.push_back(e(n + 1, {{i, 1}, {j, -1}}));
      for (int i = 0; i < n; ++i) out.simple.push_back(e(n + 1, {{i, 1}, {i + 1, -1}}));
      break;
    case Family::B:
    case Family::C:
    case Family::D: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) out.roots.push_back(e(n, {{i, si}, {j, sj}}));
      for (int i = 0; i < n; ++i)
        for (int s : {1, -1}) {
          if (t.family == Family::B) out.roots.push_back(e(n, {{i, s}}));
          if (t.family == Family::C) out.roots.push_back(e(n, {{i, 2 * s}}));
        }
      for (int i = 0; i + 1 < n; ++i) out.simple.push_back(e(n, {{i, 1}, {i + 1, -1}}));
      if (t.family == Family::B) out.simple.push_back(e(n, {{n - 1, 1}}));
      if (t.family == Family::C) out.simple.push_back(e(n, {{n - 1, 2}}));
      if (t.family == Family::D) out.simple.push_back(e(n, {{n - 2, 1}, {n - 1, 1}}));
      break;
    }
    case Family::G: {
      // Sum-zero plane in R^3: short roots e_i - e_j, long roots +-(2e_i - e_j - e_k).
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) out.roots.push_back(e(3, {{i, 1}, {j, -1}}));
      for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
          std::vector<int> v(3, -s * 2);
          v[i] = 4 * s;
          out.roots.push_back(v);
        }
      out.simple.push_back(e(3, {{0, 1}, {1, -1}}));
      out.simple.push_back({-2, 4, -2});
      break;
    }
    case Family::F: {
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) out.roots.push_back(e(4, {{i, si}, {j, sj}}));
      for (int i = 0; i < 4; ++i)
        for (int s : {1, -1}) out.roots.push_back(e(4, {{i, s}}));
      for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        out.roots.push_back(v);
      }
      out.simple = {e(4, {{1, 1}, {2, -1}}), e(4, {{2, 1}, {3, -1}}), e(4, {{3, 1}}), {1, -1, -1, -1}};
      break;
    }
    case Family::E:
      break;
  }
  return out;
}

inline int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Simple-root coordinates of a Euclidean root by solving the Gram system with
/// doubles; every value is an integer for a valid input.
inline std::vector<int> simple_coordinates(const EuclideanRoots& er, const std::vector<int>& v) {
  const size_t n = er.simple.size();
  std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = dot(er.simple[i], er.simple[j]);
    a[i][n] = dot(er.simple[i], v);
  }
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<int> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = static_cast<int>(std::lround(a[i][n] / a[i][i]));
  return out;
}

/// Weyl dimension formula evaluated over Euclidean roots in long double.
inline long double euclidean_weyl_dim(const DynkinType& t, const std::vector<int>& lambda_fund) {
  const EuclideanRoots er = euclidean_roots(t);
  // Fundamental weights are not needed: <lambda + rho, a^vee> = sum_i (l_i + 1) <w_i, a^vee>,
  // and <w_i, a^vee> is the i-th coefficient of a^vee in simple coroots.
  long double num = 1, den = 1;
  for (const auto& r : er.roots) {
    const std::vector<int> c = simple_coordinates(er, r);
    if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; })) continue;
    long double a = 0, b = 0;
    for (size_t i = 0; i < c.size(); ++i) {
      // Coroot coefficient of a^vee on alpha_i^vee.
      const long double k = static_cast<long double>(c[i]) * dot(er.simple[i], er.simple[i]) / dot(r, r);
      a += k * (lambda_fund[i] + 1);
      b += k;
    }
    num *= a;
    den *= b;
  }
  return num / den;
}

/// Whether v lies in the R-span of gens, by enumerating all coefficient tuples.
inline bool brute_force_in_r_span(const TruncatedRing& R, const std::vector<RVec>& gens, const RVec& v) {
  const std::uint64_t size = std::uint64_t{1} << R.exponent();
  std::vector<std::uint64_t> coeff(gens.size(), 0);
  for (;;) {
    RVec acc(v.size(), 0);
    for (size_t g = 0; g < gens.size(); ++g)
      for (size_t c = 0; c < v.size(); ++c) acc[c] = R.add(acc[c], R.mul(coeff[g], gens[g][c]));
    if (acc == v) return true;
    size_t k = 0;
    while (k < coeff.size() && ++coeff[k] == size) coeff[k++] = 0;
    if (k == coeff.size()) return false;
  }
}

}  // namespace flagaut::testing
