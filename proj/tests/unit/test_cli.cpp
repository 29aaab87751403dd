#include "doctest.h"

#include "catalog.hpp"
#include "flagaut/error.hpp"
#include "report.hpp"
#include "spec_grammar.hpp"

using namespace flagaut;
using namespace flagaut::cli;

TEST_CASE("spec grammar") {
  const ParabolicSpec s = parse_spec("C3:p3:a1:T,a2:G1");
  CHECK(s.type == DynkinType::make(Family::C, 3));
  CHECK(s.p == 3);
  REQUIRE(s.factors.size() == 2);
  CHECK(s.factors[1].kernel == KernelSpec::frobenius(1));
  CHECK(format_spec(s) == "C3:p3:a1:T,a2:G1");

  const ParabolicSpec q = parse_spec("G2:p2:Q1*F2,a2:N0");
  REQUIRE(q.factors[0].exotic);
  CHECK(q.factors[0].exotic->pullback == 2);
  CHECK(parse_kernel("G0").is_trivial());
  CHECK(parse_kernel("N3") == KernelSpec::very_special(3));

  CHECK_THROWS_AS(parse_spec("C3:p3:a1:X"), ParseError);
  CHECK_THROWS_AS(parse_spec("C3"), ParseError);
  CHECK_THROWS_AS(parse_spec("Z3:p3:a1:T"), ParseError);
  CHECK_THROWS_AS(parse_type("E9"), DomainError);
}

TEST_CASE("reports") {
  const Json j = spec_report("C3:p3:a1:T,a2:G1");
  CHECK(j["schema"] == kSchemaVersion);
  CHECK(j["picard_rank"] == 2);
  CHECK(j["aut"]["infinitesimal"]["hat"] == "A5");
  CHECK(j["aut"]["infinitesimal"]["m"] == 1);
  CHECK(j["aut"]["lie_dim"] == 35);
  CHECK(j["normal_form"] == "C3:p3:a1:T,a2:G1");

  const Json c = classify_report("C3:p3:a1:T,a2:G1");
  CHECK(c.contains("classification"));
  CHECK_THROWS_AS(spec_report("C3:p3:a4:T"), DomainError);
  CHECK(!render_text(j).empty());
}

TEST_CASE("property: grammar and JSON round trip") {
  int seen = 0;
  for (const ParabolicSpec& s : generated_catalog(small_types(), {2, 3}, 2)) {
    if (++seen % 7) continue;
    const std::string text = format_spec(s);
    CHECK(parse_spec(text) == s);
    Json a;
    try {
      a = spec_report(text);
    } catch (const DomainError&) {
      continue;
    }
    Json b = spec_report(a["normal_form"].get<std::string>());
    a.erase("input");
    b.erase("input");
    CHECK(Json::parse(a.dump()) == b);
  }
  CHECK(seen > 500);
}
