#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "catalog.hpp"
#include "flagaut/flagaut.hpp"
#include "report.hpp"
#include "spec_grammar.hpp"

namespace {

using flagaut::cli::Json;

enum Exit { kOk = 0, kParse = 1, kDomain = 2 };

struct Output {
  bool json = false;
  std::string path;

  void emit(const Json& j) const {
    const std::string text = json ? j.dump(2) + "\n" : flagaut::cli::render_text(j);
    if (path.empty()) {
      std::cout << text;
    } else {
      std::ofstream(path) << text;
    }
  }
};

// Runs one subcommand body and maps failures onto the exit-code partition.
template <class Body>
int guarded(const Output& out, const std::string& input, Body body) {
  try {
    out.emit(body());
    return kOk;
  } catch (const flagaut::cli::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const flagaut::DomainError& e) {
    out.emit(flagaut::cli::error_json(input, e.name(), e.what()));
    return kDomain;
  }
}

Json chain_report(const std::string& type_text, int p, int depth) {
  const flagaut::DynkinType type = flagaut::cli::parse_type(type_text);
  if (!flagaut::is_prime(p)) throw flagaut::DomainError("unsupported-prime", std::to_string(p));
  const bool vs = flagaut::has_very_special_isogeny(type, p);
  Json chain = Json::array();
  for (int pos = 0; pos <= depth; ++pos) {
    if (pos % 2 == 1 && !vs) continue;
    const flagaut::KernelSpec k = flagaut::KernelSpec::from_position(pos);
    const flagaut::IsogenyDescriptor d = flagaut::describe_isogeny(type, p, k);
    chain.push_back({{"kernel", k.to_string()}, {"position", pos}, {"target", d.target.name()}, {"twist", d.twist}});
  }
  Json j{{"schema", flagaut::cli::kSchemaVersion}, {"type", type.name()}, {"p", p}, {"very_special", vs}, {"chain", chain}};
  if (vs) {
    const flagaut::VerySpecialDual d = flagaut::very_special_dual(type, p);
    const flagaut::RootSystem& src = flagaut::root_system(d.source);
    const flagaut::RootSystem& dst = flagaut::root_system(d.target);
    Json map = Json::object();
    for (int k = 0; k < src.num_positive(); ++k)
      map[src.label(src.positive_root(k))] = dst.label(dst.positive_root(d.root_map[k]));
    j["dual"] = {{"type", d.target.name()}, {"root_map", map},
                 {"lie_N_dim", flagaut::lie_N_dimension(type, p)}};
  }
  return j;
}

Json mu_report(const std::string& which, int n, int m, int i, bool identity) {
  flagaut::WitnessScenario w{flagaut::parse_scenario_case(which), n, m, i, identity};
  const flagaut::IncidenceReport r = flagaut::mu_incidence_report(w);
  const flagaut::TruncatedRing R(m);
  Json moved = Json::array();
  for (const auto& v : r.moved) {
    Json row = Json::array();
    for (auto e : v) {
      std::string poly;
      for (int b = 0; b < R.exponent(); ++b)
        if ((e >> b) & 1) poly += (poly.empty() ? "" : "+") + (b == 0 ? std::string("1") : "t^" + std::to_string(b));
      row.push_back(poly.empty() ? "0" : poly);
    }
    moved.push_back(row);
  }
  return {{"schema", flagaut::cli::kSchemaVersion},
          {"case", flagaut::to_string(w.which)},
          {"n", n},
          {"m", m},
          {"relation", r.relation},
          {"moved", moved},
          {"preserved", r.preserved}};
}

Json exotic_report() {
  const flagaut::ExoticEnumeration e = flagaut::enumerate_exotic_subalgebras();
  const flagaut::RootSystem& rs = flagaut::root_system(flagaut::DynkinType::parse("G2"));
  Json hits = Json::array();
  for (const auto& h : e.hits) {
    Json extra = Json::array();
    for (const auto& r : h.extra_roots) extra.push_back(rs.label(r));
    hits.push_back({{"dim", h.algebra.dim()}, {"extra_roots", extra}});
  }
  return {{"schema", flagaut::cli::kSchemaVersion},
          {"candidates", e.candidates},
          {"subalgebras", hits},
          {"whole_algebra_closed", e.whole_algebra_closed},
          {"notes", Json::array({e.caveat})}};
}

Json normalizer_report(int n) {
  const flagaut::WedgeModel W = flagaut::orthogonal_wedge_model(n);
  const flagaut::Subspace N = flagaut::wedge_lie_N(W);
  return {{"schema", flagaut::cli::kSchemaVersion},
          {"model", "Lambda^2 k^" + std::to_string(W.ambient)},
          {"lie_N_dim", N.dim()},
          {"normalizer_dim", flagaut::normalizer(W.algebra, N).dim()},
          {"stabilizer_dim", flagaut::wedge_stabilizer(W).dim()},
          {"center_dim", flagaut::center(W.algebra).dim()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagaut: automorphism groups of flag varieties with non-reduced stabilizers"};
  app.require_subcommand(1);
  Output out;
  app.add_flag("--json", out.json, "Emit JSON instead of text");
  app.add_option("-o,--output", out.path, "Write the report to a file");

  std::string spec_text;
  int code = kOk;

  auto* classify = app.add_subcommand("classify", "Normal form, canonical form, contractions and Aut");
  classify->add_option("spec", spec_text, "Parabolic spec, e.g. C3:p3:a1:T,a2:G1")->required();
  classify->callback([&] { code = guarded(out, spec_text, [&] { return flagaut::cli::classify_report(spec_text); }); });

  auto* phi = app.add_subcommand("phi", "Values of the associated function on positive roots");
  phi->add_option("spec", spec_text)->required();
  phi->callback([&] { code = guarded(out, spec_text, [&] { return flagaut::cli::phi_report(spec_text); }); });

  auto* aut = app.add_subcommand("aut", "Neutral component of the automorphism group");
  aut->add_option("spec", spec_text)->required();
  aut->callback([&] { code = guarded(out, spec_text, [&] { return flagaut::cli::spec_report(spec_text); }); });

  int root = 1;
  auto* contract = app.add_subcommand("contract", "Target of the contraction of the Schubert curve C_alpha");
  contract->add_option("spec", spec_text)->required();
  contract->add_option("--root", root, "1-based simple root index")->required();
  contract->callback(
      [&] { code = guarded(out, spec_text, [&] { return flagaut::cli::contract_report(spec_text, root); }); });

  std::string type_text;
  int p = 2, depth = 4;
  auto* chain = app.add_subcommand("chain", "Chain of non-central isogeny kernels");
  chain->add_option("type", type_text)->required();
  chain->add_option("--p", p, "Characteristic")->required();
  chain->add_option("--depth", depth, "Largest chain position to list")->check(CLI::NonNegativeNumber);
  chain->callback([&] { code = guarded(out, type_text, [&] { return chain_report(type_text, p, depth); }); });

  auto* verify = app.add_subcommand("verify", "Run an oracle check");
  verify->require_subcommand(1);
  std::string which = "bn-frob";
  int n = 2, m = 1, i = 1;
  bool identity = false;
  auto* mu = verify->add_subcommand("mu-incidence", "Action of mu_{2^{m+1}} on an incidence base point");
  mu->add_option("--case", which, "bn-frob | g2-so7 | bn-vs");
  mu->add_option("--n", n);
  mu->add_option("--m", m);
  mu->add_option("--i", i);
  mu->add_flag("--identity", identity, "Act by t = 1");
  mu->callback([&] {
    code = guarded(out, which, [&] { return mu_report(which, n, m, i, identity); });
  });
  auto* ex = verify->add_subcommand("exotic", "Enumerate p-subalgebras above Lie P^a1 for G2, p = 2");
  ex->callback([&] { code = guarded(out, "exotic", exotic_report); });
  auto* norm = verify->add_subcommand("normalizer", "Lie N and its normalizer in the Lambda^2 model");
  norm->add_option("--n", n);
  norm->callback([&] { code = guarded(out, "normalizer", [&] { return normalizer_report(n); }); });

  auto* catalog = app.add_subcommand("catalog", "Reproduce the result table and print a pass/fail matrix");
  catalog->callback([&] {
    Json rows = Json::array();
    for (const auto& run : flagaut::cli::all_criteria()) {
      const auto r = run();
      if (!out.json) std::cout << flagaut::cli::format_result(r) << "\n";
      rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass()}, {"seconds", r.seconds}, {"detail", r.detail}});
    }
    if (out.json) out.emit({{"schema", flagaut::cli::kSchemaVersion}, {"criteria", rows}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  return code;
}
