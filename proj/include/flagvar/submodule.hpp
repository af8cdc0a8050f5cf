#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagvar/parabolic.hpp"
#include "flagvar/rational.hpp"

namespace flagvar {

/// A set S of noncompact positive roots of a flag, with its cached weight.
/// The P-submodules are exactly the sets closed under adding compact roots
/// (either sign) and noncompact positive roots whenever the sum is a root.
/// Construction does not force closedness — classification predicates are
/// well defined on arbitrary sets and is_submodule checks closure — but all
/// enumeration results are closed.
class SubmoduleRootSet {
 public:
  SubmoduleRootSet(FlagPtr flag, const Bitset128& members);

  const ParabolicFlag& flag() const { return *flag_; }
  const FlagPtr& flag_ptr() const { return flag_; }
  const Bitset128& members() const { return members_; }
  int size() const { return members_.count(); }
  const Weight& weight() const { return weight_; }
  bool is_empty() const { return members_.none(); }
  bool is_full() const { return members_ == flag_->all_mask(); }
  std::vector<int> member_list() const;

 private:
  FlagPtr flag_;
  Bitset128 members_;
  Weight weight_;
};

bool is_submodule(const ParabolicFlag& flag, const Bitset128& candidate);

/// Smallest submodule containing the seeds.
SubmoduleRootSet saturate(const FlagPtr& flag, const Bitset128& seeds);

/// Enumeration cap; FLAGVAR_GUARD in the environment overrides the default
/// of 10^7. Exceeding it raises Error(GuardExceeded), never truncates.
std::uint64_t default_enumeration_guard();

/// All distinct submodules, ordered by (size, numeric mask). Works as an
/// up-set enumeration over the reachability preorder generated by
/// alpha -> alpha+beta, after collapsing mutually reachable roots, which is
/// exponentially better than filtering all subsets.
std::vector<SubmoduleRootSet> enumerate_submodules(const FlagPtr& flag,
                                                   std::uint64_t guard = default_enumeration_guard());

inline const Weight& det_weight(const SubmoduleRootSet& s) { return s.weight(); }

/// Present with the reduced t = p/q exactly when weight(S) = t * omega as an
/// exact rational identity; absent otherwise.
std::optional<Ratio> semicanonical_ratio(const SubmoduleRootSet& s);

bool is_nontrivial(const SubmoduleRootSet& s);

/// True when no member of S splits as beta + gamma with both noncompact
/// positive summands outside S. Models bracket-closure of the annihilated
/// plane field; equal summands are allowed but never occur in a reduced
/// system (2*beta is not a root).
bool is_frobenius(const SubmoduleRootSet& s);

/// True for singletons S = {theta} whose complement pairs perfectly under
/// beta -> theta - beta; the combinatorial nondegeneracy of d(theta).
bool is_contact(const SubmoduleRootSet& s);

/// Number of unordered pairs {beta, gamma} of noncompact positive roots
/// outside S with beta + gamma equal to the given member of S.
int decomposition_count(const SubmoduleRootSet& s, int localRoot);

struct GrowthVector {
  std::vector<int> sizes;
  std::string str() const;
  friend bool operator==(const GrowthVector&, const GrowthVector&) = default;
};

/// Sizes of F_1 = V, F_{k+1} = F_k + [F_k, V] inside the noncompact
/// positives, until stable.
GrowthVector growth_vector(const ParabolicFlag& flag, const Bitset128& field);

/// True when the complement C of S has |C| = k with dim = k(k+1)/2 and the
/// pair-sum map {beta_i, beta_j} -> beta_i + beta_j (i < j) lands in S,
/// is injective, and is onto S.
bool is_first_order_nondegenerate(const ParabolicFlag& flag, const SubmoduleRootSet& s);

/// Restriction of a product-flag submodule to one factor, as a submodule of
/// that factor's own flag.
SubmoduleRootSet project_to_factor(const SubmoduleRootSet& s, int factor);

}  // namespace flagvar
