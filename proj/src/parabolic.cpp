#include "flagvar/parabolic.hpp"

#include <algorithm>

namespace flagvar {

FlagPtr ParabolicFlag::make(SystemPtr system, const std::set<int>& crossed) {
  if (crossed.empty()) raise(Errc::EmptyCrossing, "no crossed nodes: that is G itself, not a flag variety");
  return construct(std::move(system), crossed);
}

FlagPtr ParabolicFlag::adjoint(SystemPtr system) {
  Root theta = system->highest_root();  // rejects reducible systems
  std::set<int> crossed;
  for (int i = 0; i < system->rank(); ++i)
    if (system->pairing(theta.coeffs, i) != 0) crossed.insert(i + 1);
  return construct(std::move(system), crossed);
}

FlagPtr ParabolicFlag::whole_group(SystemPtr system) { return construct(std::move(system), {}); }

FlagPtr ParabolicFlag::construct(SystemPtr system, const std::set<int>& crossed) {
  for (int node : crossed)
    if (node < 1 || node > system->rank())
      raise(Errc::InvalidNode, "crossed node " + std::to_string(node) + " outside 1.." + std::to_string(system->rank()));

  auto flag = std::shared_ptr<ParabolicFlag>(new ParabolicFlag());
  flag->system_ = std::move(system);
  flag->crossed_ = crossed;

  const RootSystem& sys = *flag->system_;
  const int m = sys.positive_count();
  flag->local_of_.assign(m, -1);
  for (int k = 0; k < m; ++k) {
    const auto& c = sys.positive(k).coeffs;
    bool compact = true;
    for (int node : crossed)
      if (c[node - 1] != 0) {
        compact = false;
        break;
      }
    if (compact) {
      flag->compact_.push_back(k);
    } else {
      flag->local_of_[k] = static_cast<int>(flag->noncompact_.size());
      flag->noncompact_.push_back(k);
    }
  }

  const int d = static_cast<int>(flag->noncompact_.size());
  if (d > Bitset128::kCapacity)
    raise(Errc::CapacityExceeded, std::to_string(d) + " noncompact positive roots exceed the " + std::to_string(Bitset128::kCapacity) + "-bit set capacity");

  flag->omega_ = Weight::zero(sys.rank());
  flag->levels_.resize(d);
  for (int a = 0; a < d; ++a) {
    const auto& c = sys.positive(flag->noncompact_[a]).coeffs;
    flag->omega_.add(c);
    int lvl = 0;
    for (int node : crossed) lvl += c[node - 1];
    flag->levels_[a] = lvl;
  }

  // One-step closure targets: adding a compact root of either sign or a
  // noncompact positive root lands in the noncompact positives whenever the
  // sum is a root at all.
  std::vector<int> adders;
  for (int k : flag->compact_) {
    adders.push_back(k);
    adders.push_back(m + k);
  }
  for (int k : flag->noncompact_) adders.push_back(k);

  flag->step_.assign(d, Bitset128{});
  for (int a = 0; a < d; ++a) {
    for (int adder : adders) {
      auto s = sys.sum_index(flag->noncompact_[a], adder);
      if (s && *s < m && flag->local_of_[*s] >= 0) flag->step_[a].set(flag->local_of_[*s]);
    }
  }

  flag->reach_.assign(d, Bitset128{});
  for (int a = 0; a < d; ++a) {
    flag->reach_[a].set(a);
    flag->reach_[a] |= flag->step_[a];
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < d; ++a) {
      Bitset128 r = flag->reach_[a];
      flag->step_[a].for_each([&](int b) { r |= flag->reach_[b]; });
      if (!(r == flag->reach_[a])) {
        flag->reach_[a] = r;
        changed = true;
      }
    }
  }
  return flag;
}

std::string ParabolicFlag::name() const { return FlagDescriptor::of(*this).str(); }

std::map<int, int> ParabolicFlag::level_histogram() const {
  std::map<int, int> h;
  for (int lvl : levels_) ++h[lvl];
  return h;
}

std::set<int> ParabolicFlag::crossed_in_factor(int f) const {
  std::set<int> local;
  int off = system_->factor_offset(f);
  int r = system_->factor_rank(f);
  for (int node : crossed_)
    if (node > off && node <= off + r) local.insert(node - off);
  return local;
}

FlagPtr ParabolicFlag::factor_flag(int f) const {
  SystemPtr sub = RootSystem::build(system_->factors()[f]);
  std::set<int> local = crossed_in_factor(f);
  if (local.empty()) return whole_group(sub);
  return make(sub, local);
}

Weight ParabolicFlag::weight_of(const Bitset128& members) const {
  Weight w = Weight::zero(system_->rank());
  members.for_each([&](int a) { w.add(noncompact_root(a).coeffs); });
  return w;
}

Bitset128 ParabolicFlag::mask_of_roots(const std::vector<std::vector<int>>& coeffLists) const {
  Bitset128 mask;
  for (const auto& c : coeffLists) {
    auto idx = system_->index_of(c);
    if (!idx || *idx >= system_->positive_count() || local_of_[*idx] < 0) {
      std::string s;
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
      raise(Errc::NotInSet, "(" + s + ") is not a noncompact positive root of " + name());
    }
    mask.set(local_of_[*idx]);
  }
  return mask;
}

Bitset128 ParabolicFlag::level_mask(int level) const {
  Bitset128 mask;
  for (int a = 0; a < dimension(); ++a)
    if (levels_[a] == level) mask.set(a);
  return mask;
}

FlagPtr FlagDescriptor::build() const {
  if (factors.size() != crossed.size())
    raise(Errc::BadDescriptor, "need one crossed list per factor");
  SystemPtr sys = RootSystem::build_product(factors);
  std::set<int> global;
  for (std::size_t f = 0; f < crossed.size(); ++f) {
    int off = sys->factor_offset(static_cast<int>(f));
    for (int node : crossed[f]) {
      if (node < 1 || node > factors[f].rank)
        raise(Errc::InvalidNode, "crossed node " + std::to_string(node) + " outside 1.." + std::to_string(factors[f].rank) + " in factor " + factors[f].name());
      global.insert(off + node);
    }
  }
  return ParabolicFlag::make(std::move(sys), global);
}

FlagDescriptor FlagDescriptor::of(const ParabolicFlag& flag) {
  FlagDescriptor d;
  d.factors = flag.system().factors();
  for (int f = 0; f < flag.factor_count(); ++f) {
    auto local = flag.crossed_in_factor(f);
    d.crossed.emplace_back(local.begin(), local.end());
  }
  return d;
}

std::string FlagDescriptor::str() const {
  std::string s;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    if (f) s += "x";
    s += factors[f].name() + "{";
    for (std::size_t i = 0; i < crossed[f].size(); ++i) s += (i ? "," : "") + std::to_string(crossed[f][i]);
    s += "}";
  }
  return s;
}

}  // namespace flagvar
