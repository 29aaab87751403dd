#include "flagaut/geometry.hpp"

#include <algorithm>

#include "flagaut/error.hpp"

namespace flagaut {

namespace {

const Factor& factor_at(const ParabolicSpec& normalized, int alpha) {
  for (const Factor& f : normalized.factors)
    if (f.root == alpha) return f;
  throw DomainError("not-a-factor", "a" + std::to_string(alpha + 1) + " is in the Levi of P");
}

}  // namespace

int picard_rank(const ParabolicSpec& spec) { return static_cast<int>(normalize(spec).factors.size()); }

int pairing(const ParabolicSpec& spec, int alpha, int beta) {
  const ParabolicSpec n = normalize(spec);
  factor_at(n, alpha);
  factor_at(n, beta);
  return alpha == beta ? 1 : 0;
}

int pairing(const DivisorClass& d, const CurveClass& c) {
  int acc = 0;
  for (const auto& [root, a] : d.coeffs) {
    auto it = c.coeffs.find(root);
    if (it != c.coeffs.end()) acc += a * it->second;
  }
  return acc;
}

std::vector<std::vector<int>> pairing_matrix(const ParabolicSpec& spec) {
  const ParabolicSpec n = normalize(spec);
  std::vector<std::vector<int>> m;
  for (const Factor& a : n.factors) {
    std::vector<int> row;
    for (const Factor& b : n.factors) {
      DivisorClass d{{{a.root, 1}}};
      CurveClass c{{{b.root, 1}}};
      row.push_back(pairing(d, c));
    }
    m.push_back(std::move(row));
  }
  return m;
}

bool is_nef(const DivisorClass& d) {
  return std::all_of(d.coeffs.begin(), d.coeffs.end(), [](const auto& kv) { return kv.second >= 0; });
}

ParabolicSpec contraction_target(const ParabolicSpec& spec, int alpha) {
  const ParabolicSpec n = normalize(spec);
  return ParabolicSpec{n.type, n.p, {factor_at(n, alpha)}};
}

std::vector<int> smooth_target(const ParabolicSpec& spec) {
  const ParabolicSpec n = normalize(spec);
  std::vector<int> J;
  for (const Factor& f : n.factors) {
    if (f.exotic) throw DomainError("exotic", "no smooth target for specs with an exotic factor");
    if (f.kernel.is_trivial()) J.push_back(f.root);
  }
  return J;
}

}  // namespace flagaut
