#include "flagaut/parabolic.hpp"

#include <algorithm>
#include <set>

#include "flagaut/error.hpp"
#include "flagaut/field.hpp"

namespace flagaut {

KernelSpec KernelSpec::frobenius(int m) {
  if (m < 1) throw DomainError("bad-kernel", "Frobenius kernel needs m >= 1");
  return {Kind::Frobenius, m};
}

KernelSpec KernelSpec::very_special(int m) {
  if (m < 0) throw DomainError("bad-kernel", "very special kernel needs m >= 0");
  return {Kind::VerySpecial, m};
}

KernelSpec KernelSpec::from_position(int position) {
  if (position < 0) throw DomainError("bad-kernel", "negative chain position");
  if (position == 0) return trivial();
  if (position % 2 == 0) return frobenius(position / 2);
  return very_special(position / 2);
}

int KernelSpec::chain_position() const {
  switch (kind) {
    case Kind::Trivial: return 0;
    case Kind::Frobenius: return 2 * m;
    case Kind::VerySpecial: return 2 * m + 1;
  }
  return 0;
}

int KernelSpec::height(bool long_root) const {
  switch (kind) {
    case Kind::Trivial: return 0;
    case Kind::Frobenius: return m;
    case Kind::VerySpecial: return long_root ? m : m + 1;
  }
  return 0;
}

std::string KernelSpec::to_string() const {
  switch (kind) {
    case Kind::Trivial: return "T";
    case Kind::Frobenius: return "G" + std::to_string(m);
    case Kind::VerySpecial: return "N" + std::to_string(m);
  }
  return "?";
}

bool has_very_special_isogeny(const DynkinType& type, int p) {
  switch (type.family) {
    case Family::B:
    case Family::C:
    case Family::F: return p == 2;
    case Family::G: return p == 3;
    default: return false;
  }
}

bool has_exotic_parabolics(const DynkinType& type, int p) { return type.family == Family::G && p == 2; }

std::string describe_factor(const Factor& f) {
  if (f.exotic) {
    std::string s = f.exotic->which == ExoticKind::Q1 ? "Q1" : "Q2";
    if (f.exotic->pullback > 0) s += "*F" + std::to_string(f.exotic->pullback);
    return s;
  }
  return "a" + std::to_string(f.root + 1) + ":" + f.kernel.to_string();
}

void validate(const ParabolicSpec& spec) {
  const DynkinType t = DynkinType::make(spec.type.family, spec.type.rank);
  if (!is_prime(spec.p)) throw DomainError("unsupported-prime", std::to_string(spec.p));
  if (spec.factors.empty()) throw DomainError("not-a-parabolic", "no factors: the whole group is not a proper parabolic");
  std::set<int> seen;
  for (const Factor& f : spec.factors) {
    if (f.root < 0 || f.root >= t.rank) throw DomainError("not-a-factor", "simple root index out of range");
    if (!seen.insert(f.root).second) throw DomainError("not-a-factor", "repeated simple root a" + std::to_string(f.root + 1));
    if (f.exotic) {
      if (!has_exotic_parabolics(t, spec.p)) throw DomainError("no-exotic", "exotic factors exist only for G2 at p = 2");
      if (f.root != 0) throw DomainError("no-exotic", "exotic factors sit at a1");
      if (f.exotic->pullback < 0) throw DomainError("bad-kernel", "negative Frobenius pullback");
      continue;
    }
    switch (f.kernel.kind) {
      case KernelSpec::Kind::Trivial: break;
      case KernelSpec::Kind::Frobenius:
        if (f.kernel.m < 1) throw DomainError("bad-kernel", "Frobenius kernel needs m >= 1");
        break;
      case KernelSpec::Kind::VerySpecial:
        if (f.kernel.m < 0) throw DomainError("bad-kernel", "very special kernel needs m >= 0");
        if (!has_very_special_isogeny(t, spec.p))
          throw DomainError("no-very-special-isogeny", t.name() + " at p = " + std::to_string(spec.p));
        break;
    }
  }
}

int kernel_height(const RootSystem& rs, const KernelSpec& k, const Root& gamma) { return k.height(rs.is_long(gamma)); }

PhiFunction factor_phi(const RootSystem& rs, int /*p*/, const Factor& f) {
  PhiFunction phi;
  phi.values.assign(rs.num_positive(), kInfinity);
  for (int k = 0; k < rs.num_positive(); ++k) {
    const Root& g = rs.positive_root(k);
    if (g[f.root] == 0) continue;
    if (f.exotic) {
      // Q1 adds height one at 2a1+a2; Q2 at a1 and a1+a2.
      int bump = 0;
      if (f.exotic->which == ExoticKind::Q1) bump = (g == Root{2, 1}) ? 1 : 0;
      else bump = (g == Root{1, 0} || g == Root{1, 1}) ? 1 : 0;
      phi.values[k] = f.exotic->pullback + bump;
    } else {
      phi.values[k] = kernel_height(rs, f.kernel, g);
    }
  }
  return phi;
}

namespace {

PhiFunction pointwise_min(const PhiFunction& a, const PhiFunction& b) {
  PhiFunction out = a;
  for (size_t k = 0; k < out.values.size(); ++k) out.values[k] = std::min(a.values[k], b.values[k]);
  return out;
}

// Does the single factor dominate phi on every root supported at its simple root?
bool dominates(const RootSystem& rs, const PhiFunction& single, const PhiFunction& phi, int root) {
  for (int k = 0; k < rs.num_positive(); ++k)
    if (rs.positive_root(k)[root] != 0 && single.values[k] < phi.values[k]) return false;
  return true;
}

}  // namespace

PhiFunction phi_from_spec(const ParabolicSpec& spec) {
  validate(spec);
  const RootSystem& rs = root_system(spec.type);
  PhiFunction phi;
  phi.values.assign(rs.num_positive(), kInfinity);
  for (const Factor& f : spec.factors) phi = pointwise_min(phi, factor_phi(rs, spec.p, f));
  return phi;
}

ParabolicSpec spec_from_phi(const DynkinType& type, int p, const PhiFunction& phi) {
  const RootSystem& rs = root_system(type);
  if (static_cast<int>(phi.values.size()) != rs.num_positive())
    throw DomainError("bad-dimension", "phi must have one value per positive root");
  if (!is_prime(p)) throw DomainError("unsupported-prime", std::to_string(p));
  for (int v : phi.values)
    if (v < 0) throw DomainError("not-a-parabolic", "negative phi value");

  ParabolicSpec spec{type, p, {}};
  for (int i = 0; i < rs.rank(); ++i)
    if (phi.values[i] != kInfinity) spec.factors.push_back(Factor{i, KernelSpec::trivial(), std::nullopt});
  if (spec.factors.empty()) throw DomainError("not-a-parabolic", "phi is infinite on every simple root");

  const bool vs = has_very_special_isogeny(type, p);
  const bool exotic_ok = has_exotic_parabolics(type, p);
  int top = 0;
  for (int v : phi.values)
    if (v != kInfinity) top = std::max(top, v);

  for (Factor& f : spec.factors) {
    bool found = false;
    for (int pos = 0; pos <= 2 * top + 2 && !found; ++pos) {
      if (pos % 2 == 1 && !vs) continue;
      Factor cand{f.root, KernelSpec::from_position(pos), std::nullopt};
      if (dominates(rs, factor_phi(rs, p, cand), phi, f.root)) {
        f = cand;
        found = true;
        break;
      }
      // Between _mG and _{m+1}G sit the two incomparable pulled-back Q_i.
      if (exotic_ok && f.root == 0 && pos % 2 == 0) {
        for (ExoticKind which : {ExoticKind::Q1, ExoticKind::Q2}) {
          Factor q{0, KernelSpec::trivial(), ExoticFactor{which, pos / 2}};
          if (dominates(rs, factor_phi(rs, p, q), phi, 0)) {
            f = q;
            found = true;
            break;
          }
        }
      }
    }
    if (!found) {
      for (int k = 0; k < rs.num_positive(); ++k)
        if (rs.positive_root(k)[f.root] != 0 && phi.values[k] == kInfinity)
          throw DomainError("not-a-parabolic", "phi(" + rs.label(rs.positive_root(k)) + ") is infinite although a" +
                                                   std::to_string(f.root + 1) + " is a factor");
      throw DomainError("not-a-parabolic", "no kernel fits factor a" + std::to_string(f.root + 1));
    }
  }

  PhiFunction recon;
  recon.values.assign(rs.num_positive(), kInfinity);
  for (const Factor& f : spec.factors) recon = pointwise_min(recon, factor_phi(rs, p, f));
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (recon.values[k] == phi.values[k]) continue;
    const Root& g = rs.positive_root(k);
    const auto show = [](int v) { return v == kInfinity ? std::string("inf") : std::to_string(v); };
    throw DomainError("not-a-parabolic", "phi(" + rs.label(g) + ") = " + show(phi.values[k]) +
                                             " but the factors forced by the simple roots give " + show(recon.values[k]));
  }
  return spec;
}

ParabolicSpec normalize(const ParabolicSpec& spec) { return spec_from_phi(spec.type, spec.p, phi_from_spec(spec)); }

bool contains(const ParabolicSpec& outer, const ParabolicSpec& inner) {
  if (outer.type != inner.type || outer.p != inner.p) throw DomainError("bad-dimension", "specs over different groups");
  const PhiFunction a = phi_from_spec(outer), b = phi_from_spec(inner);
  for (size_t k = 0; k < a.values.size(); ++k)
    if (b.values[k] > a.values[k]) return false;
  return true;
}

ParabolicSpec intersect(const ParabolicSpec& a, const ParabolicSpec& b) {
  if (a.type != b.type || a.p != b.p) throw DomainError("bad-dimension", "specs over different groups");
  return spec_from_phi(a.type, a.p, pointwise_min(phi_from_spec(a), phi_from_spec(b)));
}

bool contains_isogeny_kernel(const ParabolicSpec& spec) {
  const PhiFunction phi = phi_from_spec(spec);
  const RootSystem& rs = root_system(spec.type);
  const bool vs = has_very_special_isogeny(spec.type, spec.p);
  for (int k = 0; k < rs.num_positive(); ++k) {
    const int need = vs ? (rs.is_long(rs.positive_root(k)) ? 0 : 1) : 1;
    if (phi.values[k] < need) return false;
  }
  return true;
}

CanonicalForm canonical_form(const ParabolicSpec& spec) {
  CanonicalForm out;
  out.normalized = normalize(spec);
  const ParabolicSpec& n = out.normalized;
  if (std::any_of(n.factors.begin(), n.factors.end(), [](const Factor& f) { return f.exotic.has_value(); })) {
    out.exotic = true;
    return out;
  }
  if (contains_isogeny_kernel(n))
    throw DomainError("contains-kernel", "P contains a non-central isogeny kernel; strip it first");
  int top = 0;
  for (const Factor& f : n.factors) {
    if (f.kernel.is_trivial()) {
      out.J.push_back(f.root);
    } else {
      out.J_prime.push_back(f.root);
      top = std::max(top, f.kernel.chain_position());
    }
  }
  if (out.J_prime.empty()) return out;
  const PhiFunction target = phi_from_spec(n);
  const bool vs = has_very_special_isogeny(n.type, n.p);
  for (int pos = 1; pos <= top; ++pos) {
    if (pos % 2 == 1 && !vs) continue;
    ParabolicSpec trial = n;
    for (Factor& f : trial.factors)
      if (!f.kernel.is_trivial()) f.kernel = KernelSpec::from_position(pos);
    if (phi_from_spec(trial) == target) {
      out.xi = KernelSpec::from_position(pos);
      return out;
    }
  }
  std::string detail = "per-factor kernels:";
  for (const Factor& f : n.factors)
    if (!f.kernel.is_trivial()) detail += " " + describe_factor(f);
  throw DomainError("not-uniform", detail);
}

UpMinusProfile up_minus_profile(const ParabolicSpec& spec) {
  const PhiFunction phi = phi_from_spec(spec);
  const RootSystem& rs = root_system(spec.type);
  UpMinusProfile out;
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (phi.values[k] == kInfinity) continue;
    out.entries.emplace_back(rs.positive_root(k), phi.values[k]);
    out.total += phi.values[k];
  }
  return out;
}

}  // namespace flagaut
