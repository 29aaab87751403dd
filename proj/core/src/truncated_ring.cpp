#include "flagaut/truncated_ring.hpp"

#include "flagaut/error.hpp"
#include "flagaut/field.hpp"

namespace flagaut {

TruncatedRing::TruncatedRing(int m) : m_(m), e_(0), mask_(0) {
  if (m < 0 || m > 5) throw DomainError("bad-scenario", "truncated ring supports 0 <= m <= 5");
  e_ = 1 << (m + 1);
  mask_ = e_ == 64 ? ~Elem{0} : (Elem{1} << e_) - 1;
}

TruncatedRing::Elem TruncatedRing::t_power(long long k) const {
  long long r = k % e_;
  if (r < 0) r += e_;
  return Elem{1} << r;
}

TruncatedRing::Elem TruncatedRing::mul(Elem a, Elem b) const {
  Elem out = 0;
  for (int i = 0; i < e_; ++i) {
    if (!((a >> i) & 1)) continue;
    // Cyclic rotation of b by i.
    const Elem rot = i == 0 ? b : ((b << i) | (b >> (e_ - i))) & mask_;
    out ^= rot;
  }
  return out & mask_;
}

TruncatedRing::Elem TruncatedRing::frobenius(Elem a, int times) const {
  for (int k = 0; k < times; ++k) {
    // Over F_2, (sum a_i t^i)^2 = sum a_i t^{2i}.
    Elem out = 0;
    for (int i = 0; i < e_; ++i)
      if ((a >> i) & 1) out ^= Elem{1} << ((2 * i) % e_);
    a = out;
  }
  return a;
}

namespace {

Vec linearize(const TruncatedRing& R, const RVec& v) {
  const int e = R.exponent();
  Vec out(v.size() * e, 0);
  for (size_t c = 0; c < v.size(); ++c)
    for (int j = 0; j < e; ++j) out[c * e + j] = static_cast<int>((v[c] >> j) & 1);
  return out;
}

Subspace linear_span(const TruncatedRing& R, const std::vector<RVec>& gens, int n) {
  Subspace span(2, n * R.exponent());
  for (const RVec& g : gens) {
    if (static_cast<int>(g.size()) != n) throw DomainError("bad-dimension", "generators of unequal length");
    for (int j = 0; j < R.exponent(); ++j) {
      RVec shifted(g.size());
      for (size_t c = 0; c < g.size(); ++c) shifted[c] = R.mul(R.t_power(j), g[c]);
      span.insert(linearize(R, shifted));
    }
  }
  return span;
}

}  // namespace

bool in_r_span(const TruncatedRing& R, const std::vector<RVec>& gens, const RVec& v) {
  return linear_span(R, gens, static_cast<int>(v.size())).contains(linearize(R, v));
}

bool r_span_contains(const TruncatedRing& R, const std::vector<RVec>& outer, const std::vector<RVec>& inner) {
  if (inner.empty()) return true;
  const int n = static_cast<int>(inner.front().size());
  const Subspace span = linear_span(R, outer, n);
  for (const RVec& v : inner)
    if (!span.contains(linearize(R, v))) return false;
  return true;
}

}  // namespace flagaut
