#include "flagvar/submodule.hpp"

#include <algorithm>
#include <cstdlib>

namespace flagvar {

SubmoduleRootSet::SubmoduleRootSet(FlagPtr flag, const Bitset128& members)
    : flag_(std::move(flag)), members_(members) {
  if (!members.is_subset_of(flag_->all_mask()))
    raise(Errc::NotInSet, "set contains bits outside the noncompact positive range");
  weight_ = flag_->weight_of(members_);
}

std::vector<int> SubmoduleRootSet::member_list() const {
  std::vector<int> v;
  members_.for_each([&](int a) { v.push_back(a); });
  return v;
}

bool is_submodule(const ParabolicFlag& flag, const Bitset128& candidate) {
  bool ok = true;
  candidate.for_each([&](int a) {
    if (!flag.step_mask(a).is_subset_of(candidate)) ok = false;
  });
  return ok;
}

SubmoduleRootSet saturate(const FlagPtr& flag, const Bitset128& seeds) {
  Bitset128 closure;
  seeds.for_each([&](int a) { closure |= flag->reach_mask(a); });
  return SubmoduleRootSet(flag, closure);
}

std::uint64_t default_enumeration_guard() {
  if (const char* env = std::getenv("FLAGVAR_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000ull;
}

std::vector<SubmoduleRootSet> enumerate_submodules(const FlagPtr& flag, std::uint64_t guard) {
  const int d = flag->dimension();

  // Collapse mutually reachable roots: they lie in a common Levi orbit and
  // enter or leave a submodule together.
  std::vector<int> comp(d, -1);
  std::vector<Bitset128> compMembers;
  for (int a = 0; a < d; ++a) {
    if (comp[a] >= 0) continue;
    int id = static_cast<int>(compMembers.size());
    Bitset128 members;
    for (int b = a; b < d; ++b)
      if (comp[b] < 0 && flag->reach_mask(a).test(b) && flag->reach_mask(b).test(a)) {
        comp[b] = id;
        members.set(b);
      }
    compMembers.push_back(members);
  }
  const int nc = static_cast<int>(compMembers.size());

  // Strict successors at component level.
  std::vector<Bitset128> succ(nc);
  for (int c = 0; c < nc; ++c) {
    int rep = compMembers[c].find_first();
    flag->reach_mask(rep).for_each([&](int b) {
      if (comp[b] != c) succ[c].set(comp[b]);
    });
  }

  // Process successors before their predecessors, so a component may be
  // included exactly when everything it forces is already in.
  std::vector<int> order;
  {
    std::vector<bool> done(nc, false);
    Bitset128 doneMask;
    while (static_cast<int>(order.size()) < nc) {
      for (int c = 0; c < nc; ++c) {
        if (!done[c] && succ[c].is_subset_of(doneMask)) {
          done[c] = true;
          doneMask.set(c);
          order.push_back(c);
        }
      }
    }
  }

  std::vector<SubmoduleRootSet> out;
  std::uint64_t count = 0;
  Bitset128 includedComps, rootMask;

  // Every leaf of this branching is a valid up-set, so the walk does no
  // wasted work: total cost is proportional to the number of submodules.
  auto walk = [&](auto&& self, int pos) -> void {
    if (pos == nc) {
      if (++count > guard)
        raise(Errc::GuardExceeded, "more than " + std::to_string(guard) + " submodules in " + flag->name() +
                                       " (set FLAGVAR_GUARD to raise the cap)");
      out.emplace_back(flag, rootMask);
      return;
    }
    int c = order[pos];
    self(self, pos + 1);
    if (succ[c].is_subset_of(includedComps)) {
      includedComps.set(c);
      rootMask |= compMembers[c];
      self(self, pos + 1);
      includedComps.reset(c);
      rootMask = rootMask.and_not(compMembers[c]);
    }
  };
  walk(walk, 0);

  std::sort(out.begin(), out.end(), [](const SubmoduleRootSet& a, const SubmoduleRootSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members().numeric_less(b.members());
  });
  return out;
}

std::optional<Ratio> semicanonical_ratio(const SubmoduleRootSet& s) {
  const Weight& w = s.weight();
  const Weight& omega = s.flag().omega();
  int pivot = -1;
  for (std::size_t i = 0; i < omega.coeffs.size(); ++i)
    if (omega.coeffs[i] != 0) {
      pivot = static_cast<int>(i);
      break;
    }
  if (pivot < 0) return w.is_zero() ? std::optional<Ratio>(Ratio{0, 1}) : std::nullopt;
  // t = w_i / omega_i at the first usable coordinate, then confirm the whole
  // identity w = t * omega by cross multiplication.
  for (std::size_t j = 0; j < omega.coeffs.size(); ++j)
    if (w.coeffs[j] * omega.coeffs[pivot] != w.coeffs[pivot] * omega.coeffs[j]) return std::nullopt;
  return Ratio::reduced(w.coeffs[pivot], omega.coeffs[pivot]);
}

bool is_nontrivial(const SubmoduleRootSet& s) { return !s.is_empty() && !s.is_full(); }

bool is_frobenius(const SubmoduleRootSet& s) {
  const ParabolicFlag& flag = s.flag();
  const RootSystem& sys = flag.system();
  Bitset128 outside = flag.all_mask().and_not(s.members());
  bool splits = false;
  s.members().for_each([&](int a) {
    if (splits) return;
    const auto& target = flag.noncompact_root(a).coeffs;
    outside.for_each([&](int b) {
      if (splits) return;
      const auto& part = flag.noncompact_root(b).coeffs;
      std::vector<int> rest(target.size());
      for (std::size_t i = 0; i < target.size(); ++i) rest[i] = target[i] - part[i];
      auto idx = sys.index_of(rest);
      if (idx && *idx < sys.positive_count()) {
        int local = flag.local_index(*idx);
        if (local >= 0 && outside.test(local)) splits = true;
      }
    });
  });
  return !splits;
}

bool is_contact(const SubmoduleRootSet& s) {
  if (s.size() != 1) return false;
  const ParabolicFlag& flag = s.flag();
  const RootSystem& sys = flag.system();
  const auto& theta = flag.noncompact_root(s.members().find_first()).coeffs;
  Bitset128 outside = flag.all_mask().and_not(s.members());
  bool ok = true;
  outside.for_each([&](int b) {
    if (!ok) return;
    const auto& beta = flag.noncompact_root(b).coeffs;
    std::vector<int> diff(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) diff[i] = theta[i] - beta[i];
    auto idx = sys.index_of(diff);
    ok = idx && *idx < sys.positive_count() && flag.local_index(*idx) >= 0;
  });
  return ok;
}

int decomposition_count(const SubmoduleRootSet& s, int localRoot) {
  if (localRoot < 0 || localRoot >= s.flag().dimension() || !s.members().test(localRoot))
    raise(Errc::NotInSet, "root " + std::to_string(localRoot) + " is not a member of the set");
  const ParabolicFlag& flag = s.flag();
  const RootSystem& sys = flag.system();
  const auto& target = flag.noncompact_root(localRoot).coeffs;
  Bitset128 outside = flag.all_mask().and_not(s.members());
  int count = 0;
  outside.for_each([&](int b) {
    const auto& part = flag.noncompact_root(b).coeffs;
    std::vector<int> rest(target.size());
    for (std::size_t i = 0; i < target.size(); ++i) rest[i] = target[i] - part[i];
    auto idx = sys.index_of(rest);
    if (!idx || *idx >= sys.positive_count()) return;
    int other = flag.local_index(*idx);
    if (other >= b && outside.test(other)) ++count;  // other == b would mean 2*beta is a root
  });
  return count;
}

std::string GrowthVector::str() const {
  std::string s;
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s;
}

GrowthVector growth_vector(const ParabolicFlag& flag, const Bitset128& field) {
  const RootSystem& sys = flag.system();
  GrowthVector g;
  Bitset128 current = field;
  g.sizes.push_back(current.count());
  for (;;) {
    Bitset128 next = current;
    current.for_each([&](int a) {
      field.for_each([&](int b) {
        auto s = sys.sum_index(flag.noncompact()[a], flag.noncompact()[b]);
        if (s && *s < sys.positive_count()) {
          int local = flag.local_index(*s);
          if (local >= 0) next.set(local);
        }
      });
    });
    if (next == current) break;
    current = next;
    g.sizes.push_back(current.count());
  }
  return g;
}

bool is_first_order_nondegenerate(const ParabolicFlag& flag, const SubmoduleRootSet& s) {
  Bitset128 complement = flag.all_mask().and_not(s.members());
  const int k = complement.count();
  if (flag.dimension() != k * (k + 1) / 2) return false;

  const RootSystem& sys = flag.system();
  std::vector<int> comp;
  complement.for_each([&](int b) { comp.push_back(b); });
  std::vector<int> hits(flag.dimension(), 0);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    for (std::size_t j = i + 1; j < comp.size(); ++j) {
      auto sum = sys.sum_index(flag.noncompact()[comp[i]], flag.noncompact()[comp[j]]);
      if (!sum || *sum >= sys.positive_count()) return false;
      int local = flag.local_index(*sum);
      if (local < 0 || !s.members().test(local)) return false;
      if (++hits[local] > 1) return false;  // injectivity
    }
  }
  bool onto = true;
  s.members().for_each([&](int a) {
    if (hits[a] == 0) onto = false;
  });
  return onto;
}

SubmoduleRootSet project_to_factor(const SubmoduleRootSet& s, int factor) {
  const ParabolicFlag& flag = s.flag();
  FlagPtr sub = flag.factor_flag(factor);
  const int off = flag.system().factor_offset(factor);
  const int r = flag.system().factor_rank(factor);
  Bitset128 mask;
  s.members().for_each([&](int a) {
    const auto& c = flag.noncompact_root(a).coeffs;
    bool inFactor = false;
    for (int i = 0; i < r; ++i)
      if (c[off + i] != 0) inFactor = true;
    if (!inFactor) return;
    std::vector<int> local(c.begin() + off, c.begin() + off + r);
    auto idx = sub->system().index_of(local);
    int localIdx = idx ? sub->local_index(*idx) : -1;
    if (localIdx < 0) raise(Errc::NotInSet, "member does not restrict to factor " + std::to_string(factor));
    mask.set(localIdx);
  });
  return SubmoduleRootSet(sub, mask);
}

}  // namespace flagvar
