#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "flagaut/error.hpp"
#include "flagaut/geometry.hpp"
#include "spec_grammar.hpp"

namespace flagaut::cli {

namespace {

Json phi_json(const ParabolicSpec& spec) {
  const RootSystem& rs = root_system(spec.type);
  const PhiFunction phi = phi_from_spec(spec);
  Json out = Json::array();
  for (int k = 0; k < rs.num_positive(); ++k) {
    const int v = phi.values[k];
    out.push_back({{"root", rs.label(rs.positive_root(k))}, {"value", v == kInfinity ? Json(nullptr) : Json(v)}});
  }
  return out;
}

Json roots_json(const std::vector<int>& roots) {
  Json out = Json::array();
  for (int r : roots) out.push_back("a" + std::to_string(r + 1));
  return out;
}

}  // namespace

Json aut_json(const AutDescriptor& a) {
  Json inf = nullptr;
  if (a.infinitesimal) inf = {{"hat", a.infinitesimal->hat.name()}, {"m", a.infinitesimal->m}};
  return {{"reduced_type", a.reduced_type.name()},
          {"twist", a.frobenius_twist},
          {"infinitesimal", inf},
          {"lie_dim", a.lie_dim},
          {"is_reduced", a.is_reduced},
          {"reduced_is_dual", a.reduced_is_dual},
          {"acting_type", a.acting_type.name()}};
}

Json spec_report(const std::string& input) {
  const ParabolicSpec spec = parse_spec(input);
  const ParabolicSpec n = normalize(spec);
  const AutDescriptor a = aut_group(n);
  Json notes = Json::array();
  for (const std::string& s : a.notes) notes.push_back(s);
  if (std::any_of(n.factors.begin(), n.factors.end(), [](const Factor& f) { return f.exotic.has_value(); }))
    notes.push_back("exotic parabolic of G2 at p = 2");
  return {{"schema", kSchemaVersion},
          {"input", input},
          {"normal_form", format_spec(n)},
          {"phi", phi_json(n)},
          {"picard_rank", picard_rank(n)},
          {"aut", aut_json(a)},
          {"notes", notes}};
}

Json classify_report(const std::string& input) {
  Json j = spec_report(input);
  const ParabolicSpec n = normalize(parse_spec(input));
  Json c;
  try {
    const CanonicalForm cf = canonical_form(n);
    if (cf.exotic) {
      c["canonical"] = "exotic";
    } else {
      c["canonical"] = {{"J", roots_json(cf.J)}, {"xi", cf.xi.to_string()}, {"J_prime", roots_json(cf.J_prime)}};
      c["smooth_target"] = roots_json(smooth_target(n));
    }
  } catch (const DomainError& e) {
    c["canonical"] = {{"error", e.name()}};
  }
  Json contractions = Json::array();
  for (const Factor& f : n.factors)
    contractions.push_back({{"root", "a" + std::to_string(f.root + 1)}, {"target", format_spec(contraction_target(n, f.root))}});
  c["contractions"] = contractions;
  if (n.factors.size() == 1) c["variety"] = picard_rank_one_variety_label(n);
  c["up_minus_total"] = up_minus_profile(n).total;
  j["classification"] = c;
  return j;
}

Json phi_report(const std::string& input) {
  const ParabolicSpec n = normalize(parse_spec(input));
  return {{"schema", kSchemaVersion}, {"input", input}, {"normal_form", format_spec(n)}, {"phi", phi_json(n)}};
}

Json contract_report(const std::string& input, int root) {
  const ParabolicSpec n = normalize(parse_spec(input));
  const ParabolicSpec t = contraction_target(n, root - 1);
  return {{"schema", kSchemaVersion},
          {"input", input},
          {"normal_form", format_spec(n)},
          {"root", "a" + std::to_string(root)},
          {"target", format_spec(t)},
          {"target_reduced", !t.factors.front().exotic && t.factors.front().kernel.is_trivial()}};
}

Json error_json(const std::string& input, const std::string& name, const std::string& detail) {
  return {{"schema", kSchemaVersion}, {"input", input}, {"error", {{"name", name}, {"detail", detail}}}};
}

namespace {

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render(out, v, indent + 2);
    } else if (it.key() == "phi") {
      out << pad << "phi:";
      for (const Json& e : v) {
        out << ' ' << e["root"].get<std::string>() << '=';
        if (e["value"].is_null()) out << "inf";
        else out << e["value"].get<int>();
      }
      out << '\n';
    } else if (v.is_string()) {
      out << pad << it.key() << ": " << v.get<std::string>() << '\n';
    } else {
      out << pad << it.key() << ": " << v.dump() << '\n';
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(out, j, 0);
  return out.str();
}

}  // namespace flagaut::cli
