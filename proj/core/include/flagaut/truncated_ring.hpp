#pragma once

#include <cstdint>
#include <vector>

namespace flagaut {

/// R = F_2[t]/(t^e - 1) with e = 2^{m+1}, the coordinate ring of mu_{2^{m+1}}.
/// An element is a bitmask: bit i is the coefficient of t^i. Supports m <= 5.
class TruncatedRing {
 public:
  using Elem = std::uint64_t;

  explicit TruncatedRing(int m);

  int m() const { return m_; }
  int exponent() const { return e_; }
  Elem mask() const { return mask_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// t^k for any integer k; t is a unit with t^e = 1.
  Elem t_power(long long k) const;
  /// s = t^{2^m}: s^2 = 1 and s != 1.
  Elem s() const { return t_power(1LL << m_); }

  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const;
  /// The absolute Frobenius x -> x^2 applied `times` times.
  Elem frobenius(Elem a, int times = 1) const;

 private:
  int m_;
  int e_;
  Elem mask_;
};

/// Element of the free module R^n.
using RVec = std::vector<TruncatedRing::Elem>;

/// Whether v lies in the R-submodule generated by gens. Decided over F_2 on
/// the e*n coordinates, where the submodule is spanned by all t^j g.
bool in_r_span(const TruncatedRing& R, const std::vector<RVec>& gens, const RVec& v);

/// R-submodule containment of spans.
bool r_span_contains(const TruncatedRing& R, const std::vector<RVec>& outer, const std::vector<RVec>& inner);

}  // namespace flagaut
