#include "flagaut/isogeny.hpp"

#include "flagaut/chevalley.hpp"
#include "flagaut/error.hpp"
#include "flagaut/oracle.hpp"

namespace flagaut {

namespace {

void require_kernel(const DynkinType& type, int p, const KernelSpec& k) {
  if (k.kind == KernelSpec::Kind::VerySpecial && !has_very_special_isogeny(type, p))
    throw DomainError("no-very-special-isogeny", type.name() + " at p = " + std::to_string(p));
}

void require_very_special(const DynkinType& type, int p) {
  if (!has_very_special_isogeny(type, p))
    throw DomainError("no-very-special-isogeny", type.name() + " at p = " + std::to_string(p));
}

DynkinType dual_type(const DynkinType& t) {
  switch (t.family) {
    case Family::B: return DynkinType::make(Family::C, t.rank);
    case Family::C: return DynkinType::make(Family::B, t.rank);
    default: return t;
  }
}

std::vector<int> dual_simple_map(const DynkinType& t) {
  std::vector<int> m(t.rank);
  for (int i = 0; i < t.rank; ++i) m[i] = i;
  if (t.family == Family::F || t.family == Family::G)
    for (int i = 0; i < t.rank; ++i) m[i] = t.rank - 1 - i;
  return m;
}

}  // namespace

IsogenyDescriptor describe_isogeny(const DynkinType& type, int p, const KernelSpec& kernel) {
  require_kernel(type, p, kernel);
  IsogenyDescriptor d{type, type, kernel, 0};
  if (kernel.kind == KernelSpec::Kind::Frobenius) d.twist = kernel.m;
  if (kernel.kind == KernelSpec::Kind::VerySpecial) {
    d.target = dual_type(type);
    d.twist = kernel.m;
  }
  return d;
}

std::strong_ordering chain_compare(const DynkinType& type, int p, const KernelSpec& a, const KernelSpec& b) {
  require_kernel(type, p, a);
  require_kernel(type, p, b);
  return a.chain_position() <=> b.chain_position();
}

VerySpecialDual very_special_dual(const DynkinType& type, int p) {
  require_very_special(type, p);
  VerySpecialDual d{type, dual_type(type), dual_simple_map(type), {}};
  const RootSystem& src = root_system(d.source);
  const RootSystem& dst = root_system(d.target);
  // The coroot Cartan matrix is the transpose; check the chosen relabelling.
  for (int i = 0; i < type.rank; ++i)
    for (int j = 0; j < type.rank; ++j)
      if (dst.cartan()[d.simple_map[i]][d.simple_map[j]] != src.cartan()[j][i])
        throw DomainError("internal", "dual relabelling mismatch");
  for (const Root& g : src.positive_roots()) {
    const Root img = dual_root(d, g);
    auto k = dst.positive_index(img);
    if (!k) throw DomainError("internal", "coroot image is not a root");
    d.root_map.push_back(*k);
  }
  return d;
}

Root dual_root(const VerySpecialDual& d, const Root& gamma) {
  const std::vector<int> c = root_system(d.source).coroot(gamma);
  Root img(c.size(), 0);
  for (size_t i = 0; i < c.size(); ++i) img[d.simple_map[i]] = c[i];
  return img;
}

std::vector<CompositionRow> compose_very_special(const DynkinType& type, int p) {
  const VerySpecialDual d = very_special_dual(type, p);
  const RootSystem& src = root_system(d.source);
  const RootSystem& dst = root_system(d.target);
  const KernelSpec n0 = KernelSpec::very_special(0);
  std::vector<CompositionRow> rows;
  for (const Root& g : src.roots()) {
    const Root img = dual_root(d, g);
    rows.push_back(CompositionRow{g, kernel_height(src, n0, g), kernel_height(dst, n0, img)});
  }
  return rows;
}

int lie_N_dimension(const DynkinType& type, int p) {
  require_very_special(type, p);
  const ChevalleyAlgebra L(type, p);
  const RootSystem& rs = L.roots();
  std::vector<Vec> gens;
  for (const Root& g : rs.roots())
    if (rs.is_short(g)) gens.push_back(unit_vector(L.dim(), L.root_basis_index(g)));
  return p_closure(L.algebra(), Subspace::span(p, L.dim(), gens)).dim();
}

}  // namespace flagaut
