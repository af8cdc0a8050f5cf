#include "flagvar/drops.hpp"

#include <algorithm>

namespace flagvar {

std::set<int> diagram_involution_image(const RootSystem& sys, const std::set<int>& crossed) {
  std::set<int> image;
  for (int node : crossed) {
    int f = sys.factor_of_node(node);
    int off = sys.factor_offset(f);
    int r = sys.factor_rank(f);
    int local = node - off;
    int mapped = local;
    switch (sys.factors()[f].series) {
      case Series::A: mapped = r + 1 - local; break;
      case Series::D:
        if (local == r - 1) mapped = r;
        else if (local == r) mapped = r - 1;
        break;
      case Series::E:
        if (r == 6) {
          if (local == 1) mapped = 6;
          else if (local == 6) mapped = 1;
          else if (local == 3) mapped = 5;
          else if (local == 5) mapped = 3;
        }
        break;
      default: break;
    }
    image.insert(off + mapped);
  }
  return image;
}

std::vector<DropTarget> parabolics_containing(const FlagPtr& flag) {
  std::vector<int> crossed(flag->crossed().begin(), flag->crossed().end());
  const int k = static_cast<int>(crossed.size());
  if (k > 20) raise(Errc::GuardExceeded, "crossing of size " + std::to_string(k) + " has too many subsets to list");

  std::vector<DropTarget> out;
  for (std::uint64_t bits = 0; bits < (1ull << k); ++bits) {
    std::set<int> keep, removed;
    for (int i = 0; i < k; ++i) ((bits >> i) & 1 ? keep : removed).insert(crossed[i]);
    DropTarget t;
    t.target = keep.empty() ? ParabolicFlag::whole_group(flag->system_ptr())
                            : ParabolicFlag::make(flag->system_ptr(), keep);
    t.fiberCrossed = removed;
    std::set<int> mirror = diagram_involution_image(flag->system(), keep);
    t.equivalenceClass = std::min(keep, mirror);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const DropTarget& a, const DropTarget& b) {
    if (a.target->crossed().size() != b.target->crossed().size())
      return a.target->crossed().size() > b.target->crossed().size();
    return a.target->crossed() < b.target->crossed();
  });
  return out;
}

bool is_maximal(const ParabolicFlag& flag) {
  if (!flag.system().irreducible())
    raise(Errc::ReducibleSystem, flag.name() + " has several factors; query each component");
  return flag.crossed().size() == 1;
}

bool CircleDrop::allows_drop_to(const std::set<int>& targetCrossed) const {
  return std::includes(q->crossed().begin(), q->crossed().end(), targetCrossed.begin(), targetCrossed.end());
}

CircleDrop circle_drop(const FlagPtr& borel, const std::set<int>& rationalNodes) {
  if (!borel->is_borel()) raise(Errc::NotBorel, borel->name() + " is not a Borel-model flag (cross every node first)");
  for (int node : rationalNodes)
    if (node < 1 || node > borel->system().rank())
      raise(Errc::InvalidNode, "node " + std::to_string(node) + " outside 1.." + std::to_string(borel->system().rank()));
  std::set<int> keep;
  for (int node : borel->crossed())
    if (!rationalNodes.count(node)) keep.insert(node);
  CircleDrop cd;
  cd.q = keep.empty() ? ParabolicFlag::whole_group(borel->system_ptr())
                      : ParabolicFlag::make(borel->system_ptr(), keep);
  return cd;
}

RigidityVerdict product_rigidity_check(const FlagPtr& flag,
                                       const std::vector<std::vector<std::vector<int>>>& perFactorRootSets) {
  const int nf = flag->factor_count();
  for (int f = 0; f < nf; ++f)
    if (flag->crossed_in_factor(f).size() != 1)
      raise(Errc::NotMaximal, "factor " + flag->system().factors()[f].name() + " does not carry a single cross");
  if (static_cast<int>(perFactorRootSets.size()) != nf)
    raise(Errc::BadDescriptor, "need one root set per factor, got " + std::to_string(perFactorRootSets.size()));

  RigidityVerdict verdict;
  verdict.rigid = true;
  for (int f = 0; f < nf; ++f) {
    FlagPtr factorFlag = flag->factor_flag(f);
    FactorRigidity r;
    r.factor = f;
    SubmoduleRootSet sub(factorFlag, factorFlag->mask_of_roots(perFactorRootSets[f]));
    r.isSubmodule = is_submodule(*factorFlag, sub.members());
    r.nontrivial = is_nontrivial(sub);
    r.semicanonical = semicanonical_ratio(sub).has_value();
    r.nonFrobenius = !is_frobenius(sub);
    if (!r.ok()) verdict.rigid = false;
    verdict.factors.push_back(r);
  }
  return verdict;
}

}  // namespace flagvar
