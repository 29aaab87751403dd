#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flagaut {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Simple Dynkin type. Construct through make() or parse(), which enforce
/// the classical bounds (B, C rank >= 2; D >= 3; E 6..8; F 4; G 2) and the
/// supported range (rank <= 16).
struct DynkinType {
  Family family = Family::A;
  int rank = 1;

  static DynkinType make(Family family, int rank);
  static DynkinType parse(std::string_view text);

  std::string name() const;
  bool simply_laced() const;

  auto operator<=>(const DynkinType&) const = default;
};

/// Coefficients in the simple-root basis (Bourbaki numbering, 0-based here).
using Root = std::vector<int>;
/// Coordinates in the fundamental-weight basis.
using Weight = std::vector<int>;

enum class Dominance { Borel, OppositeBorel };

/// Root system of a simple type. Positive roots are ordered by height, then by
/// descending coefficient vector, so index i < rank is the simple root alpha_{i+1}.
class RootSystem {
 public:
  explicit RootSystem(DynkinType type);

  const DynkinType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  int num_roots() const { return 2 * num_positive(); }
  /// dim of the adjoint group: |Phi| + rank.
  int group_dimension() const { return num_roots() + rank(); }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& positive_root(int k) const { return positive_.at(k); }
  /// All roots: positives in order, then their negatives in the same order.
  std::vector<Root> roots() const;
  Root simple_root(int i) const;

  std::optional<int> positive_index(const Root& r) const;
  bool is_root(const Root& r) const;
  bool is_positive(const Root& r) const;

  /// A_ij = <alpha_j, alpha_i^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  /// Invariant symmetric form scaled so that every value is an integer.
  int inner(const Root& a, const Root& b) const;
  int norm(const Root& r) const { return inner(r, r); }
  int simple_norm(int i) const { return gram_[i][i]; }
  bool is_long(const Root& r) const;
  bool is_short(const Root& r) const { return !is_long(r); }
  /// <beta, alpha_i^vee>.
  int pairing(const Root& beta, int i) const;
  /// Coordinates of gamma^vee in the simple-coroot basis.
  std::vector<int> coroot(const Root& gamma) const;
  Weight weight_of(const Root& r) const;
  /// Indices of simple roots with nonzero coefficient.
  std::vector<int> support(const Root& r) const;
  bool in_support(const Root& r, int i) const { return r.at(i) != 0; }
  int height(const Root& r) const;
  /// Multiplicity of the multiple edge (2 or 3), if any.
  std::optional<int> multiplicity_edge() const;
  Root highest_root() const { return positive_.back(); }

  /// Human-readable label such as "2a1+a2" or "-a3".
  std::string label(const Root& r) const;

 private:
  DynkinType type_;
  std::vector<std::vector<int>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
  std::map<Root, int> index_;
  int max_norm_ = 0;
};

/// Shared immutable root systems; construction is cached per type.
const RootSystem& root_system(const DynkinType& type);

Weight fundamental_weight(int rank, int i);

/// B: <lambda, alpha_i^vee> >= 0 for all i; OppositeBorel flips the sign.
bool is_dominant(const RootSystem& rs, const Weight& lambda, Dominance convention = Dominance::Borel);

/// Dimension of the characteristic-zero Weyl module V(lambda).
/// Throws "not-dominant" for non-dominant input and "overflow" past 2^63.
std::uint64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

Root negate(const Root& r);
Root add_roots(const Root& a, const Root& b);
bool lex_less(const Root& a, const Root& b);

}  // namespace flagaut
