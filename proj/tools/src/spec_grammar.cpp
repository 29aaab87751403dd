#include "spec_grammar.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace flagaut::cli {

namespace {

bool parse_uint(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && out >= 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Factor parse_factor(const std::string& token) {
  if (token.rfind("Q", 0) == 0) {
    const std::string head = token.substr(0, 2);
    Factor f{0, KernelSpec::trivial(), ExoticFactor{}};
    if (head == "Q1") f.exotic->which = ExoticKind::Q1;
    else if (head == "Q2") f.exotic->which = ExoticKind::Q2;
    else throw ParseError(token, "exotic factors are Q1 or Q2");
    const std::string rest = token.substr(2);
    if (rest.empty()) return f;
    int m = 0;
    if (rest.rfind("*F", 0) != 0 || !parse_uint(std::string_view(rest).substr(2), m))
      throw ParseError(token, "expected Q1*Fm with m a nonnegative integer");
    f.exotic->pullback = m;
    return f;
  }
  const auto colon = token.find(':');
  if (token.empty() || token[0] != 'a' || colon == std::string::npos)
    throw ParseError(token, "expected aK:KERNEL, Q1 or Q2");
  int k = 0;
  if (!parse_uint(std::string_view(token).substr(1, colon - 1), k) || k < 1)
    throw ParseError(token, "simple root index must be a positive integer");
  return Factor{k - 1, parse_kernel(token.substr(colon + 1)), std::nullopt};
}

}  // namespace

KernelSpec parse_kernel(const std::string& token) {
  if (token == "T") return KernelSpec::trivial();
  int m = 0;
  if (token.size() >= 2 && parse_uint(std::string_view(token).substr(1), m)) {
    if (token[0] == 'G') {
      if (m == 0) return KernelSpec::trivial();
      return KernelSpec::frobenius(m);
    }
    if (token[0] == 'N') return KernelSpec::very_special(m);
  }
  throw ParseError(token, "kernels are T, Gm or Nm");
}

DynkinType parse_type(const std::string& token) {
  int rank = 0;
  if (token.size() < 2 || token[0] < 'A' || token[0] > 'G' || !parse_uint(std::string_view(token).substr(1), rank))
    throw ParseError(token, "expected a Dynkin type such as C3");
  return DynkinType::parse(token);
}

ParabolicSpec parse_spec(const std::string& text) {
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) throw ParseError(text, "expected TYPE:pP:factors");
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw ParseError(text.substr(c1 + 1), "expected pP:factors");

  ParabolicSpec spec;
  spec.type = parse_type(text.substr(0, c1));
  const std::string ptok = text.substr(c1 + 1, c2 - c1 - 1);
  if (ptok.size() < 2 || ptok[0] != 'p' || !parse_uint(std::string_view(ptok).substr(1), spec.p))
    throw ParseError(ptok, "expected pP with P a prime");
  for (const std::string& tok : split(text.substr(c2 + 1), ',')) {
    if (tok.empty()) throw ParseError(text.substr(c2 + 1), "empty factor");
    spec.factors.push_back(parse_factor(tok));
  }
  if (spec.factors.empty()) throw ParseError(text, "no factors");
  return spec;
}

std::string format_spec(const ParabolicSpec& spec) {
  std::string out = spec.type.name() + ":p" + std::to_string(spec.p) + ":";
  for (size_t i = 0; i < spec.factors.size(); ++i) {
    const Factor& f = spec.factors[i];
    if (i) out += ',';
    if (f.exotic) {
      out += f.exotic->which == ExoticKind::Q1 ? "Q1" : "Q2";
      if (f.exotic->pullback > 0) out += "*F" + std::to_string(f.exotic->pullback);
    } else {
      out += "a" + std::to_string(f.root + 1) + ":" + f.kernel.to_string();
    }
  }
  return out;
}

}  // namespace flagaut::cli
