#include "flagaut/autgroup.hpp"

#include <algorithm>

#include "flagaut/error.hpp"
#include "flagaut/isogeny.hpp"

namespace flagaut {

std::optional<ExceptionalPairInfo> demazure_aut(const DynkinType& type, int alpha) {
  if (alpha < 0 || alpha >= type.rank) throw DomainError("not-a-factor", "simple root index out of range");
  const int n = type.rank;
  if (type.family == Family::C && alpha == 0)
    return ExceptionalPairInfo{type, alpha, DynkinType::make(Family::A, 2 * n - 1), "PGL_" + std::to_string(2 * n)};
  if (type.family == Family::B && alpha == n - 1)
    return ExceptionalPairInfo{type, alpha, DynkinType::make(Family::D, n + 1), "PSO_" + std::to_string(2 * n + 2)};
  if (type.family == Family::G && alpha == 0)
    return ExceptionalPairInfo{type, alpha, DynkinType::make(Family::B, 3), "SO_7"};
  return std::nullopt;
}

int demazure_dimension(const DynkinType& type, const std::vector<int>& J) {
  if (J.size() == 1)
    if (auto info = demazure_aut(type, J.front())) return root_system(info->hat_type).group_dimension();
  return root_system(type).group_dimension();
}

ReducedSpec strip_isogeny_kernels(const ParabolicSpec& spec) {
  const ParabolicSpec n = normalize(spec);
  PhiFunction phi = phi_from_spec(n);
  int m0 = kInfinity;
  for (int v : phi.values) m0 = std::min(m0, v);
  // spec_from_phi guarantees a factor, hence a finite value.
  for (int& v : phi.values)
    if (v != kInfinity) v -= m0;

  ReducedSpec out{spec_from_phi(n.type, n.p, phi), m0, false};
  if (!has_very_special_isogeny(n.type, n.p) || !contains_isogeny_kernel(out.spec)) return out;

  // P contains N: pass to P / N inside the dual group, where U_{-gamma}
  // loses height one exactly on short gamma.
  const VerySpecialDual d = very_special_dual(n.type, n.p);
  const RootSystem& src = root_system(d.source);
  PhiFunction bar;
  bar.values.assign(src.num_positive(), kInfinity);
  for (int k = 0; k < src.num_positive(); ++k) {
    const int v = phi.values[k];
    bar.values[d.root_map[k]] = v == kInfinity ? v : v - (src.is_short(src.positive_root(k)) ? 1 : 0);
  }
  out.spec = spec_from_phi(d.target, n.p, bar);
  out.dual = true;
  return out;
}

namespace {

AutDescriptor reduced_descriptor(const DynkinType& acting, const ReducedSpec& r) {
  AutDescriptor a;
  a.reduced_type = acting;
  a.acting_type = acting;
  a.frobenius_twist = r.twist;
  a.reduced_is_dual = r.dual;
  a.lie_dim = root_system(acting).group_dimension();
  return a;
}

AutDescriptor exotic_descriptor(const ReducedSpec& r) {
  const ParabolicSpec& s = r.spec;
  const Factor* q = nullptr;
  const Factor* other = nullptr;
  for (const Factor& f : s.factors) (f.exotic ? q : other) = &f;
  AutDescriptor a = reduced_descriptor(s.type, r);

  if (!other) {
    if (q->exotic->which == ExoticKind::Q1) {
      // G/Q1 is the homogeneous space P^5 of PGL_6.
      a.reduced_type = DynkinType::make(Family::A, 5);
      a.lie_dim = root_system(a.reduced_type).group_dimension();
      a.notes.push_back("G/Q1 is P^5 with automorphism group PGL_6");
    }
    return a;
  }
  if (q->exotic->which == ExoticKind::Q1 && q->exotic->pullback == 0 &&
      other->kernel.kind == KernelSpec::Kind::Frobenius && other->kernel.m >= 1) {
    const DynkinType hat = DynkinType::make(Family::A, 5);
    a.infinitesimal = InfinitesimalFactor{hat, other->kernel.m};
    a.lie_dim = root_system(hat).group_dimension();
    a.is_reduced = false;
  }
  return a;
}

}  // namespace

AutDescriptor aut_group(const ParabolicSpec& spec) {
  const ReducedSpec r = strip_isogeny_kernels(spec);
  const ParabolicSpec& s = r.spec;
  const bool exotic = std::any_of(s.factors.begin(), s.factors.end(), [](const Factor& f) { return f.exotic.has_value(); });
  if (exotic) return exotic_descriptor(r);

  AutDescriptor a = reduced_descriptor(s.type, r);
  if (s.factors.size() == 1) {
    // After stripping, a single factor is reduced.
    if (!s.factors.front().kernel.is_trivial())
      throw DomainError("unsupported", "single factor kept a kernel after stripping: " + describe_factor(s.factors.front()));
    if (auto info = demazure_aut(s.type, s.factors.front().root)) {
      a.reduced_type = info->hat_type;
      a.lie_dim = root_system(info->hat_type).group_dimension();
      a.notes.push_back("Demazure exceptional pair; Aut^0 = " + info->hat_name);
    }
    return a;
  }

  std::vector<int> J;
  for (const Factor& f : s.factors)
    if (f.kernel.is_trivial()) J.push_back(f.root);
  std::optional<ExceptionalPairInfo> info;
  if (J.size() == 1) info = demazure_aut(s.type, J.front());
  if (!info) return a;

  // Exceptional smooth target: the twist of the infinitesimal part is the
  // largest m with _mG inside ker xi.
  const CanonicalForm cf = canonical_form(s);
  const int m = cf.xi.frobenius_floor();
  if (m >= 1) {
    a.infinitesimal = InfinitesimalFactor{info->hat_type, m};
    a.lie_dim = root_system(info->hat_type).group_dimension();
    a.is_reduced = false;
  } else {
    a.notes.push_back("xi = " + cf.xi.to_string() + " contains no Frobenius kernel");
  }
  return a;
}

int relative_tangent_sections_dim(const ParabolicSpec& spec) {
  const CanonicalForm cf = canonical_form(spec);
  if (cf.exotic) throw DomainError("exotic", "no smooth target for specs with an exotic factor");
  if (cf.xi.chain_position() < KernelSpec::frobenius(1).chain_position())
    throw DomainError("kernel-too-small", "ker xi = " + cf.xi.to_string() + " does not contain _1G");
  return aut_group(spec).lie_dim - demazure_dimension(spec.type, cf.J);
}

std::string picard_rank_one_variety_label(const ParabolicSpec& spec) {
  const ReducedSpec r = strip_isogeny_kernels(spec);
  if (r.spec.factors.size() != 1) throw DomainError("not-picard-rank-one", "spec has several factors");
  const Factor& f = r.spec.factors.front();
  if (f.exotic)
    return f.exotic->which == ExoticKind::Q1 ? "P^5" : "general hyperplane section of the Lagrangian Grassmannian";
  const int n = r.spec.type.rank;
  const int k = f.root + 1;
  const auto s = [](int v) { return std::to_string(v); };
  switch (r.spec.type.family) {
    case Family::A:
      if (k == 1 || k == n) return "P^" + s(n);
      return "Gr(" + s(k) + ", " + s(n + 1) + ")";
    case Family::B:
      if (k == 1) return "smooth quadric in P^" + s(2 * n);
      return "isotropic Grassmannian OG(" + s(k) + ", " + s(2 * n + 1) + ")";
    case Family::C:
      if (k == 1) return "P^" + s(2 * n - 1);
      if (k == n) return "Lagrangian Grassmannian LG(" + s(n) + ", " + s(2 * n) + ")";
      return "isotropic Grassmannian IG(" + s(k) + ", " + s(2 * n) + ")";
    case Family::D:
      if (k == 1) return "smooth quadric in P^" + s(2 * n - 1);
      if (k >= n - 1) return "spinor variety OG(" + s(n) + ", " + s(2 * n) + ")";
      return "isotropic Grassmannian OG(" + s(k) + ", " + s(2 * n) + ")";
    case Family::G:
      if (k == 1) return "smooth quadric in P^6";
      break;
    default:
      break;
  }
  return r.spec.type.name() + "/P^a" + s(k);
}

}  // namespace flagaut
