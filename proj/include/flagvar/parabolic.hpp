#pragma once

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "flagvar/bitset128.hpp"
#include "flagvar/rootsys.hpp"

namespace flagvar {

/// Integer weight vector in simple-root coordinates.
struct Weight {
  std::vector<long long> coeffs;

  static Weight zero(int rank) { return Weight{std::vector<long long>(rank, 0)}; }

  Weight& add(std::span<const int> rootCoeffs) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += rootCoeffs[i];
    return *this;
  }

  bool componentwise_le(const Weight& o) const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] > o.coeffs[i]) return false;
    return true;
  }

  bool is_zero() const {
    for (long long c : coeffs)
      if (c) return false;
    return true;
  }

  std::string str() const {  // "10,5"
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coeffs[i]);
    }
    return s;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
};

class ParabolicFlag;
using FlagPtr = std::shared_ptr<const ParabolicFlag>;

/// A generalized flag variety G/P: a root system with a set of crossed
/// Dynkin nodes, and the induced compact / noncompact-positive root split.
/// Noncompact positive roots get dense local indices 0..dimension-1 (system
/// order) so root sets are Bitset128 masks. Immutable after construction.
class ParabolicFlag {
 public:
  /// Crossed nodes are 1-based over the concatenated factor ranks; the set
  /// must be nonempty (the empty crossing is G itself, not a flag variety).
  static FlagPtr make(SystemPtr system, const std::set<int>& crossed);

  /// Stabilizer of the highest root line: crosses every node whose coroot
  /// pairs nonzero with the highest root. Irreducible systems only.
  static FlagPtr adjoint(SystemPtr system);

  /// The degenerate "flag" with nothing crossed, i.e. G itself viewed as a
  /// point target. Only drop bookkeeping creates these.
  static FlagPtr whole_group(SystemPtr system);

  const RootSystem& system() const { return *system_; }
  const SystemPtr& system_ptr() const { return system_; }
  const std::set<int>& crossed() const { return crossed_; }
  bool is_borel() const { return static_cast<int>(crossed_.size()) == system_->rank(); }
  bool is_point() const { return crossed_.empty(); }
  std::string name() const;  // "B3{3}", "G2{1}xC3{2}"

  int dimension() const { return static_cast<int>(noncompact_.size()); }
  const Weight& omega() const { return omega_; }

  /// Noncompact positive roots as system positive indices, in system order.
  const std::vector<int>& noncompact() const { return noncompact_; }
  /// Compact positive roots as system positive indices; the compact root set
  /// is these together with their negatives.
  const std::vector<int>& compact_positive() const { return compact_; }

  int local_index(int positiveIndex) const { return local_of_[positiveIndex]; }
  const Root& noncompact_root(int local) const { return system_->positive(noncompact_[local]); }

  int level(int local) const { return levels_[local]; }
  const std::vector<int>& level_grading() const { return levels_; }
  std::map<int, int> level_histogram() const;

  Bitset128 all_mask() const { return Bitset128::first_n(dimension()); }
  /// Mask of roots reachable from local root a in one step a -> a+beta, for
  /// beta compact (either sign) or noncompact positive.
  const Bitset128& step_mask(int local) const { return step_[local]; }
  /// Reflexive-transitive closure of step_mask.
  const Bitset128& reach_mask(int local) const { return reach_[local]; }

  int factor_count() const { return system_->factor_count(); }
  std::set<int> crossed_in_factor(int f) const;  // 1-based local node numbers
  /// The factor's own flag (whole_group when the factor has no crossing).
  FlagPtr factor_flag(int f) const;

  Weight weight_of(const Bitset128& members) const;
  /// Local mask for explicitly listed roots; rejects anything that is not a
  /// noncompact positive root of this flag.
  Bitset128 mask_of_roots(const std::vector<std::vector<int>>& coeffLists) const;
  Bitset128 level_mask(int level) const;

 private:
  ParabolicFlag() = default;
  static FlagPtr construct(SystemPtr system, const std::set<int>& crossed);

  SystemPtr system_;
  std::set<int> crossed_;
  std::vector<int> compact_;
  std::vector<int> noncompact_;
  std::vector<int> local_of_;  // positive index -> local index or -1
  std::vector<int> levels_;
  Weight omega_;
  std::vector<Bitset128> step_;
  std::vector<Bitset128> reach_;
};

/// Descriptor form of a flag: factor types plus per-factor crossed node
/// lists (1-based within each factor). The external JSON/CLI shape.
struct FlagDescriptor {
  std::vector<RootSystemType> factors;
  std::vector<std::vector<int>> crossed;

  FlagPtr build() const;
  static FlagDescriptor of(const ParabolicFlag& flag);
  std::string str() const;  // "B3{3}", "G2{1}xC3{2}"

  friend bool operator==(const FlagDescriptor&, const FlagDescriptor&) = default;
};

}  // namespace flagvar
