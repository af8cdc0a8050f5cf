#pragma once

#include <set>
#include <vector>

#include "flagvar/parabolic.hpp"
#include "flagvar/submodule.hpp"

namespace flagvar {

/// A parabolic containing the source flag's parabolic: the candidate model
/// of a drop. Uncrossing nodes enlarges the subgroup; the uncrossed nodes
/// describe the fiber of the drop.
struct DropTarget {
  FlagPtr target;              // crossed set a subset of the source's
  std::set<int> fiberCrossed;  // the removed nodes
  /// Canonical form of the crossed set under the diagram symmetry of each
  /// factor (A reversal, D tail swap, E6 reversal). Targets with the same
  /// canonical set name the same model up to outer automorphism; they stay
  /// separate nodes here.
  std::set<int> equivalenceClass;
};

/// All flags with crossed' contained in crossed(flag), including the flag
/// itself and the empty crossing (G, a point target), ordered by |crossed'|
/// descending then lexicographically.
std::vector<DropTarget> parabolics_containing(const FlagPtr& flag);

/// |crossed| == 1. Irreducible systems only; query products per factor.
bool is_maximal(const ParabolicFlag& flag);

/// Crossed set image under the canonical diagram involution of each factor.
std::set<int> diagram_involution_image(const RootSystem& sys, const std::set<int>& crossed);

struct CircleDrop {
  FlagPtr q;
  /// The geometry drops to a model with the given crossing exactly when that
  /// crossing is contained in crossed(q).
  bool allows_drop_to(const std::set<int>& targetCrossed) const;
};

/// Borel-model bookkeeping: uncross every node whose circles are rational.
/// The input flag must have every node crossed.
CircleDrop circle_drop(const FlagPtr& borel, const std::set<int>& rationalNodes);

struct FactorRigidity {
  int factor = 0;
  bool isSubmodule = false;
  bool nontrivial = false;
  bool semicanonical = false;
  bool nonFrobenius = false;
  bool ok() const { return isSubmodule && nontrivial && semicanonical && nonFrobenius; }
};

struct RigidityVerdict {
  bool rigid = false;
  std::vector<FactorRigidity> factors;
};

/// The product criterion: with every factor crossing maximal, the geometry is
/// rigid when each supplied per-factor root set is a nontrivial semicanonical
/// non-Frobenius submodule of its factor. Root sets are given in factor-local
/// coordinates. Rejects flags with a non-maximal factor crossing.
RigidityVerdict product_rigidity_check(const FlagPtr& flag,
                                       const std::vector<std::vector<std::vector<int>>>& perFactorRootSets);

}  // namespace flagvar
