#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flagvar/error.hpp"

namespace flagvar {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Series series_from_char(char c);

/// One simple factor of a (semi)simple type, e.g. B3 or E8.
struct RootSystemType {
  Series series;
  int rank;

  /// Throws Error(InvalidType) outside the classification:
  /// A: rank >= 1, B: >= 2, C: >= 2, D: >= 3, E: 6..8, F: 4, G: 2.
  void validate() const;
  std::string name() const;  // "B3"

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

/// A root in simple-root coordinates, interned in its system.
/// Positive roots carry dense indices 0..positive_count-1 in the system's
/// ordering; the negative of positive k carries index positive_count + k.
struct Root {
  std::vector<int> coeffs;
  int index = -1;

  int height() const;  // signed coefficient sum

  friend bool operator==(const Root&, const Root&) = default;
};

class RootSystem;
using SystemPtr = std::shared_ptr<const RootSystem>;

struct CoeffVectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// The finite root set of a semisimple type in exact simple-root coordinates.
/// Multi-factor systems embed each factor block-diagonally. Immutable after
/// construction and freely shareable between threads.
class RootSystem {
 public:
  static SystemPtr build(const RootSystemType& type);
  static SystemPtr build_product(const std::vector<RootSystemType>& factors);

  const std::vector<RootSystemType>& factors() const { return factors_; }
  bool irreducible() const { return factors_.size() == 1; }
  int rank() const { return rank_; }
  int positive_count() const { return static_cast<int>(positive_.size()); }
  int root_count() const { return 2 * positive_count(); }
  std::string name() const;  // "B3", "G2xA2"

  /// Positive roots in the canonical order: by height, then by coefficient
  /// vector with earlier nodes more significant (so A before B in G2).
  const Root& positive(int i) const { return positive_[i]; }
  const Root& simple(int node1) const;  // node1 is 1-based
  Root root(int index) const;           // any root index, negatives included

  bool is_root(std::span<const int> coeffs) const;
  std::optional<int> index_of(std::span<const int> coeffs) const;
  std::optional<Root> add_roots(const Root& a, const Root& b) const;
  std::optional<int> sum_index(int a, int b) const;

  /// Unique maximal root in the dominance order. Irreducible systems only.
  Root highest_root() const;

  /// cartan()[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), 0-based,
  /// i.e. the pairing of alpha_j against the coroot of alpha_i.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  /// Pairing <gamma, alpha_i^v> for 0-based node i. Always an exact integer.
  int pairing(std::span<const int> coeffs, int node0) const;

  int factor_count() const { return static_cast<int>(factors_.size()); }
  int factor_offset(int f) const { return offsets_[f]; }  // first 0-based node
  int factor_rank(int f) const { return factors_[f].rank; }
  int factor_of_node(int node1) const;

 private:
  RootSystem() = default;

  void check_member(const Root& r) const;

  std::vector<RootSystemType> factors_;
  std::vector<int> offsets_;  // size factors+1, offsets_.back() == rank
  int rank_ = 0;
  std::vector<std::vector<long long>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
  std::unordered_map<std::vector<int>, int, CoeffVectorHash> index_;  // all roots
};

/// One independent root system per factor, paired with the factor's position.
std::vector<std::pair<int, SystemPtr>> diagram_components(const std::vector<RootSystemType>& types);

}  // namespace flagvar
