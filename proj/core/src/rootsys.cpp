#include "flagaut/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <numeric>

#include "flagaut/error.hpp"

namespace flagaut {

DynkinType DynkinType::make(Family family, int rank) {
  bool ok = rank >= 1 && rank <= 16;
  switch (family) {
    case Family::A: break;
    case Family::B:
    case Family::C: ok = ok && rank >= 2; break;
    case Family::D: ok = ok && rank >= 3; break;
    case Family::E: ok = ok && rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw DomainError("unsupported-type", std::string(1, static_cast<char>(family)) + std::to_string(rank));
  return DynkinType{family, rank};
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw DomainError("unsupported-type", std::string(text));
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (c < 'A' || c > 'G') throw DomainError("unsupported-type", std::string(text));
  int rank = 0;
  for (char d : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(d)) || rank > 100)
      throw DomainError("unsupported-type", std::string(text));
    rank = rank * 10 + (d - '0');
  }
  return make(static_cast<Family>(c), rank);
}

std::string DynkinType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

bool DynkinType::simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E;
}

namespace {

// Gram matrix (alpha_i, alpha_j) in Bourbaki numbering, scaled to integers.
std::vector<std::vector<int>> gram_matrix(const DynkinType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto edge = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 1;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, -1);
      edge(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      edge(0, 2, -1);
      edge(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      edge(0, 1, -2);
      edge(1, 2, -2);
      edge(2, 3, -1);
      break;
    case Family::G:
      g[0][0] = 2;
      g[1][1] = 6;
      edge(0, 1, -3);
      break;
  }
  return g;
}

}  // namespace

RootSystem::RootSystem(DynkinType type) : type_(DynkinType::make(type.family, type.rank)) {
  const int n = type_.rank;
  gram_ = gram_matrix(type_);
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[i][i];

  // Root strings: beta + alpha_i is a root iff q > 0 where
  // p - q = <beta, alpha_i^vee> and p counts the steps down the string.
  std::vector<Root> layer;
  for (int i = 0; i < n; ++i) layer.push_back(simple_root(i));
  std::map<Root, int> seen;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), [](const Root& a, const Root& b) { return b < a; });
    for (const Root& r : layer) {
      seen.emplace(r, 0);
      positive_.push_back(r);
    }
    std::vector<Root> next;
    for (const Root& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int down = 0;
        Root probe = beta;
        while (true) {
          probe[i] -= 1;
          if (!seen.count(probe)) break;
          ++down;
        }
        const int up = down - pairing(beta, i);
        if (up <= 0) continue;
        Root cand = beta;
        cand[i] += 1;
        if (!seen.count(cand) && std::find(next.begin(), next.end(), cand) == next.end()) next.push_back(cand);
      }
    }
    layer = std::move(next);
  }
  for (int k = 0; k < num_positive(); ++k) index_.emplace(positive_[k], k);
  for (const Root& r : positive_) max_norm_ = std::max(max_norm_, norm(r));
}

std::vector<Root> RootSystem::roots() const {
  std::vector<Root> all = positive_;
  for (const Root& r : positive_) all.push_back(negate(r));
  return all;
}

Root RootSystem::simple_root(int i) const {
  Root r(rank(), 0);
  r.at(i) = 1;
  return r;
}

std::optional<int> RootSystem::positive_index(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_positive(const Root& r) const { return positive_index(r).has_value(); }

bool RootSystem::is_root(const Root& r) const {
  if (static_cast<int>(r.size()) != rank()) return false;
  return is_positive(r) || is_positive(negate(r));
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) acc += a[i] * gram_[i][j] * b[j];
  }
  return acc;
}

bool RootSystem::is_long(const Root& r) const { return norm(r) == max_norm_; }

int RootSystem::pairing(const Root& beta, int i) const {
  int acc = 0;
  for (int j = 0; j < rank(); ++j) acc += beta[j] * cartan_[i][j];
  return acc;
}

std::vector<int> RootSystem::coroot(const Root& gamma) const {
  const int ng = norm(gamma);
  std::vector<int> c(rank());
  for (int i = 0; i < rank(); ++i) c[i] = gamma[i] * gram_[i][i] / ng;
  return c;
}

Weight RootSystem::weight_of(const Root& r) const {
  Weight w(rank());
  for (int i = 0; i < rank(); ++i) w[i] = pairing(r, i);
  return w;
}

std::vector<int> RootSystem::support(const Root& r) const {
  std::vector<int> s;
  for (int i = 0; i < rank(); ++i)
    if (r[i] != 0) s.push_back(i);
  return s;
}

int RootSystem::height(const Root& r) const { return std::accumulate(r.begin(), r.end(), 0); }

std::optional<int> RootSystem::multiplicity_edge() const {
  switch (type_.family) {
    case Family::B:
    case Family::C:
    case Family::F: return 2;
    case Family::G: return 3;
    default: return std::nullopt;
  }
}

std::string RootSystem::label(const Root& r) const {
  std::string out;
  for (int i = 0; i < rank(); ++i) {
    int c = r[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    if (c != 1) out += std::to_string(c);
    out += 'a' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

const RootSystem& root_system(const DynkinType& type) {
  static std::mutex mu;
  static std::map<DynkinType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, std::make_unique<RootSystem>(type)).first;
  return *it->second;
}

Weight fundamental_weight(int rank, int i) {
  Weight w(rank, 0);
  w.at(i) = 1;
  return w;
}

bool is_dominant(const RootSystem& rs, const Weight& lambda, Dominance convention) {
  if (static_cast<int>(lambda.size()) != rs.rank()) throw DomainError("bad-dimension", "weight length");
  const int sign = convention == Dominance::Borel ? 1 : -1;
  return std::all_of(lambda.begin(), lambda.end(), [&](int x) { return sign * x >= 0; });
}

std::uint64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda)) throw DomainError("not-dominant", "weyl_dim needs a dominant weight");
  // prod over gamma > 0 of <lambda + rho, gamma^vee> / <rho, gamma^vee>, both
  // sides integers once gamma^vee is expanded in simple coroots.
  std::uint64_t num = 1, den = 1;
  for (const Root& g : rs.positive_roots()) {
    const std::vector<int> c = rs.coroot(g);
    std::uint64_t a = 0, b = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      a += static_cast<std::uint64_t>(c[i]) * static_cast<std::uint64_t>(lambda[i] + 1);
      b += static_cast<std::uint64_t>(c[i]);
    }
    std::uint64_t g1 = std::gcd(a, den);
    a /= g1;
    den /= g1;
    std::uint64_t g2 = std::gcd(b, num);
    b /= g2;
    num /= g2;
    if (__builtin_mul_overflow(num, a, &num) || __builtin_mul_overflow(den, b, &den))
      throw DomainError("overflow", "weyl_dim exceeds 64 bits");
    const std::uint64_t g3 = std::gcd(num, den);
    num /= g3;
    den /= g3;
  }
  if (den != 1) throw DomainError("internal", "weyl_dim produced a non-integer");
  return num;
}

Root negate(const Root& r) {
  Root out(r.size());
  for (size_t i = 0; i < r.size(); ++i) out[i] = -r[i];
  return out;
}

Root add_roots(const Root& a, const Root& b) {
  Root out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool lex_less(const Root& a, const Root& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); }

}  // namespace flagaut
