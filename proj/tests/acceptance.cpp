// Acceptance suite: the classification facts this library must reproduce,
// one checked criterion per section, with per-criterion wall-clock budgets.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "flagvar/catalog.hpp"
#include "flagvar/cli.hpp"
#include "flagvar/serialize.hpp"

using namespace flagvar;

namespace {

struct Criterion {
  std::string name;
  double budgetSeconds;
  std::function<void(std::vector<std::string>&)> run;  // appends failure notes
};

FlagPtr flag_of(Series s, int rank, std::set<int> crossed) {
  return ParabolicFlag::make(RootSystem::build({s, rank}), crossed);
}

std::set<int> borel_nodes(int rank) {
  std::set<int> all;
  for (int i = 1; i <= rank; ++i) all.insert(i);
  return all;
}

std::vector<int> unit_vec(int n, int node1) {
  std::vector<int> v(n, 0);
  v[node1 - 1] = 1;
  return v;
}

void expect(std::vector<std::string>& notes, bool ok, const std::string& what) {
  if (!ok) notes.push_back(what);
}

template <class T>
void expect_eq(std::vector<std::string>& notes, const T& actual, const T& wanted, const std::string& what) {
  if (!(actual == wanted)) {
    std::ostringstream os;
    os << what;
    notes.push_back(os.str());
  }
}

void criterion_adjoint_dimensions(std::vector<std::string>& notes) {
  auto row = [&](Series s, int rank, int dim) {
    auto flag = ParabolicFlag::adjoint(RootSystem::build({s, rank}));
    expect(notes, flag->dimension() == dim,
           RootSystemType{s, rank}.name() + " adjoint dim " + std::to_string(flag->dimension()) + " != " +
               std::to_string(dim));
  };
  for (int n = 2; n <= 8; ++n) row(Series::A, n, 2 * n - 1);
  for (int n = 3; n <= 6; ++n) row(Series::B, n, 4 * n - 5);
  for (int n = 3; n <= 6; ++n) row(Series::C, n, 2 * n - 1);
  for (int n = 4; n <= 6; ++n) row(Series::D, n, 4 * n - 7);
  row(Series::E, 6, 21);
  row(Series::E, 7, 33);
  row(Series::E, 8, 57);
  row(Series::F, 4, 15);
  row(Series::G, 2, 5);
}

void criterion_g2(std::vector<std::string>& notes) {
  auto flag = flag_of(Series::G, 2, {1});
  expect(notes, flag->dimension() == 5, "dim != 5");
  expect(notes, flag->omega().coeffs == std::vector<long long>{10, 5}, "omega != 10,5");
  SubmoduleRootSet starred(flag, flag->mask_of_roots({{3, 2}, {2, 1}, {3, 1}}));
  expect(notes, is_submodule(*flag, starred.members()), "starred set not closed");
  expect(notes, starred.weight().coeffs == std::vector<long long>{8, 4}, "starred weight != 8,4");
  expect(notes, semicanonical_ratio(starred) == Ratio{4, 5}, "ratio != 4/5");
  expect(notes, is_nontrivial(starred), "not nontrivial");
  expect(notes, !is_frobenius(starred), "unexpectedly Frobenius");
  auto g = growth_vector(*flag, flag->mask_of_roots({{1, 0}, {1, 1}}));
  expect(notes, g == GrowthVector{{2, 3, 5}}, "growth != 2,3,5 (got " + g.str() + ")");
}

void criterion_incidence(std::vector<std::string>& notes) {
  for (int n = 2; n <= 8; ++n) {
    const std::string tag = "A" + std::to_string(n) + "{1,2}: ";
    auto flag = flag_of(Series::A, n, {1, 2});
    auto all = enumerate_submodules(flag);
    expect(notes, all.size() == 5, tag + "count " + std::to_string(all.size()) + " != 5");
    std::vector<long long> sizes;
    for (const auto& s : all) sizes.push_back(s.size());
    std::sort(sizes.begin(), sizes.end());
    expect(notes, sizes == std::vector<long long>{0, n - 1, n, 2 * n - 2, 2 * n - 1}, tag + "wrong size multiset");

    auto point = saturate(flag, flag->mask_of_roots({unit_vec(n, 1)}));
    auto line = saturate(flag, flag->mask_of_roots({unit_vec(n, 2)}));
    std::vector<int> a12(n, 0);
    a12[0] = a12[1] = 1;
    auto meet = saturate(flag, flag->mask_of_roots({a12}));

    std::vector<long long> wp(n), wl(n), w0(n);
    wp[0] = n;
    wl[0] = n - 1;
    w0[0] = n - 1;
    for (int k = 2; k <= n; ++k) {
      wp[k - 1] = n - k + 1;
      wl[k - 1] = 2 * (n - k + 1);
      w0[k - 1] = n - k + 1;
    }
    expect(notes, point.weight().coeffs == wp, tag + "point-fiber weight");
    expect(notes, line.weight().coeffs == wl, tag + "line-fiber weight");
    expect(notes, meet.weight().coeffs == w0, tag + "intersection weight");
    expect(notes, !semicanonical_ratio(point).has_value(), tag + "point-fiber module must not be semicanonical");
    expect(notes, !semicanonical_ratio(line).has_value(), tag + "line-fiber module must not be semicanonical");
    if (n == 2)
      expect(notes, semicanonical_ratio(meet) == Ratio{1, 2}, tag + "intersection ratio != 1/2");
    else
      expect(notes, !semicanonical_ratio(meet).has_value(), tag + "intersection must not be semicanonical");
  }
}

void criterion_rank2_borel(std::vector<std::string>& notes) {
  auto count = [](Series s) {
    auto flag = ParabolicFlag::make(RootSystem::build({s, 2}), {1, 2});
    int n = 0;
    for (const auto& sub : enumerate_submodules(flag))
      if (is_nontrivial(sub) && semicanonical_ratio(sub)) ++n;
    return n;
  };
  expect(notes, count(Series::A) == 1, "A2 Borel count != 1");
  expect(notes, count(Series::B) == 0, "B2 Borel count != 0");
  expect(notes, count(Series::G) == 0, "G2 Borel count != 0");
}

void criterion_b3(std::vector<std::string>& notes) {
  auto flag = flag_of(Series::B, 3, {3});
  expect(notes, flag->dimension() == 6, "dim != 6");
  std::vector<std::vector<int>> want = {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {0, 1, 2}, {1, 1, 2}, {1, 2, 2}};
  std::vector<std::vector<int>> got;
  for (int a = 0; a < flag->dimension(); ++a) got.push_back(flag->noncompact_root(a).coeffs);
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  expect(notes, got == want, "noncompact root set differs");

  SubmoduleRootSet level2(flag, flag->level_mask(2));
  expect(notes, is_submodule(*flag, level2.members()), "level-2 set not closed");
  expect(notes, level2.size() == 3, "level-2 size != 3");
  for (int a : level2.member_list())
    expect(notes, decomposition_count(level2, a) >= 1, "member lacks a pair decomposition");
  expect(notes, semicanonical_ratio(level2) == Ratio{2, 3}, "ratio != 2/3");
}

void criterion_c3(std::vector<std::string>& notes) {
  auto flag = flag_of(Series::C, 3, {2});
  expect(notes, flag->dimension() == 7, "dim != 7");
  std::vector<std::vector<int>> want = {{0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 2, 1}};
  std::vector<std::vector<int>> got;
  for (int a = 0; a < flag->dimension(); ++a) got.push_back(flag->noncompact_root(a).coeffs);
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  expect(notes, got == want, "noncompact root set differs");

  SubmoduleRootSet level2(flag, flag->level_mask(2));
  expect(notes, is_submodule(*flag, level2.members()), "level-2 set not closed");
  expect(notes, level2.size() == 3, "level-2 size != 3");
  expect(notes, semicanonical_ratio(level2) == Ratio{3, 5}, "ratio != 3/5");
  expect(notes, !is_frobenius(level2), "level-2 unexpectedly Frobenius");
}

void criterion_capneusser(std::vector<std::string>& notes) {
  for (int n = 3; n <= 6; ++n) {
    const std::string tag = "B" + std::to_string(n) + "{" + std::to_string(n) + "}: ";
    auto flag = flag_of(Series::B, n, {n});
    expect(notes, flag->dimension() == n * (n + 1) / 2, tag + "dim");
    auto hist = flag->level_histogram();
    expect(notes, hist == std::map<int, int>{{1, n}, {2, n * (n - 1) / 2}}, tag + "level counts");
    SubmoduleRootSet level2(flag, flag->level_mask(2));
    expect(notes, is_first_order_nondegenerate(*flag, level2), tag + "not first order nondegenerate");
    expect(notes, semicanonical_ratio(level2) == Ratio{n - 1, n}, tag + "ratio != (n-1)/n");
  }
}

void criterion_differential(std::vector<std::string>& notes) {
  std::vector<RootSystemType> types = {{Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::B, 2},
                                       {Series::B, 3}, {Series::C, 2}, {Series::C, 3}, {Series::D, 3},
                                       {Series::G, 2}};
  for (const auto& t : types) {
    auto sys = RootSystem::build(t);
    for (unsigned bits = 1; bits < (1u << t.rank); ++bits) {
      std::set<int> crossed;
      for (int i = 0; i < t.rank; ++i)
        if ((bits >> i) & 1) crossed.insert(i + 1);
      auto flag = ParabolicFlag::make(sys, crossed);
      if (flag->dimension() > 16) continue;
      auto fast = enumerate_submodules(flag);
      auto slow = brute_force_submodules(*flag);
      bool same = fast.size() == slow.size();
      for (std::size_t i = 0; same && i < fast.size(); ++i) same = fast[i].members() == slow[i];
      expect(notes, same, flag->name() + ": enumeration disagrees with the exhaustive oracle");
    }
  }
}

std::vector<FlagPtr> maximal_sweep() {
  std::vector<RootSystemType> types;
  for (int n = 1; n <= 5; ++n) types.push_back({Series::A, n});
  for (int n = 2; n <= 5; ++n) types.push_back({Series::B, n});
  for (int n = 2; n <= 5; ++n) types.push_back({Series::C, n});
  for (int n = 3; n <= 5; ++n) types.push_back({Series::D, n});
  types.push_back({Series::F, 4});
  types.push_back({Series::G, 2});
  types.push_back({Series::E, 6});
  std::vector<FlagPtr> flags;
  for (const auto& t : types) {
    auto sys = RootSystem::build(t);
    for (int node = 1; node <= t.rank; ++node) flags.push_back(ParabolicFlag::make(sys, {node}));
  }
  return flags;
}

void criterion_maximal_semicanonical(std::vector<std::string>& notes) {
  for (const auto& flag : maximal_sweep()) {
    for (const auto& s : enumerate_submodules(flag)) {
      auto r = semicanonical_ratio(s);
      if (!r) {
        notes.push_back(flag->name() + ": submodule without a ratio");
        return;
      }
      expect(notes, r->num >= 0 && r->num <= r->den, flag->name() + ": ratio outside [0,1]");
    }
  }
}

void criterion_nontrivial_semicanonical_not_frobenius(std::vector<std::string>& notes) {
  for (const auto& flag : maximal_sweep())
    for (const auto& s : enumerate_submodules(flag))
      if (is_nontrivial(s) && semicanonical_ratio(s))
        expect(notes, !is_frobenius(s), flag->name() + ": nontrivial semicanonical submodule is Frobenius");
}

void criterion_contact_ratio(std::vector<std::string>& notes) {
  std::vector<RootSystemType> types;
  for (int n = 2; n <= 6; ++n) types.push_back({Series::A, n});
  types.push_back({Series::B, 3});
  types.push_back({Series::C, 3});
  types.push_back({Series::G, 2});
  for (const auto& t : types) {
    auto flag = ParabolicFlag::adjoint(RootSystem::build(t));
    expect(notes, flag->dimension() % 2 == 1, t.name() + ": adjoint dim not odd");
    long long m = (flag->dimension() - 1) / 2;
    int contacts = 0;
    for (const auto& s : enumerate_submodules(flag))
      if (is_contact(s)) {
        ++contacts;
        expect(notes, semicanonical_ratio(s) == Ratio{1, m + 1}, t.name() + ": contact ratio != 1/(m+1)");
      }
    expect(notes, contacts >= 1, t.name() + ": no contact submodule found");
  }
}

void criterion_borel_complement(std::vector<std::string>& notes) {
  auto ratio_of = [](Series s, int rank, int node) {
    auto flag = ParabolicFlag::make(RootSystem::build({s, rank}), borel_nodes(rank));
    Bitset128 mask = flag->all_mask().and_not(flag->mask_of_roots({unit_vec(rank, node)}));
    if (!is_submodule(*flag, mask)) return std::optional<Ratio>{Ratio{-1, 1}};
    return semicanonical_ratio(SubmoduleRootSet(flag, mask));
  };
  expect(notes, ratio_of(Series::A, 1, 1) == Ratio{0, 1}, "A1: complement of the simple root must be semicanonical");
  for (auto [s, rank] : {std::pair{Series::A, 2}, {Series::A, 3}, {Series::B, 2}, {Series::B, 3}, {Series::G, 2}})
    for (int node = 1; node <= rank; ++node)
      expect(notes, !ratio_of(s, rank, node).has_value(),
             RootSystemType{s, rank}.name() + " node " + std::to_string(node) + ": must not be semicanonical");
}

void criterion_classify_determinism(std::vector<std::string>& notes) {
  std::vector<std::string> args = {"classify", "--max-rank", "4", "--format", "json"};
  std::ostringstream out1, err1, out2, err2;
  int s1 = run_cli(args, out1, err1);
  int s2 = run_cli(args, out2, err2);
  expect(notes, s1 == 0 && s2 == 0, "classify exited nonzero");
  expect(notes, out1.str() == out2.str(), "classify output differs between runs");
  expect(notes, !out1.str().empty(), "classify produced no output");
}

void criterion_e8_borel(std::vector<std::string>& notes) {
  auto flag = ParabolicFlag::make(RootSystem::build({Series::E, 8}), borel_nodes(8));
  auto first = enumerate_submodules(flag);
  auto second = enumerate_submodules(flag);
  expect(notes, first.size() == second.size(), "recount differs");
  expect(notes, !first.empty(), "no submodules found");
  std::cout << "  (E8 Borel submodule count: " << first.size() << ")\n";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1 adjoint dimension table", 5.0, criterion_adjoint_dimensions},
      {"2 G2 short-node flag and its rank-3 system", 1.0, criterion_g2},
      {"3 A_n point-line incidence lattices (n=2..8)", 1.0, criterion_incidence},
      {"4 rank-2 Borel survey", 1.0, criterion_rank2_borel},
      {"5 B3 null 3-planes model", 1.0, criterion_b3},
      {"6 C3 sublagrangian model", 1.0, criterion_c3},
      {"7 B_n null flag models (n=3..6)", 2.0, criterion_capneusser},
      {"8a enumeration vs exhaustive oracle (rank <= 3)", 30.0, criterion_differential},
      {"8b maximal crossings: every submodule semicanonical", 60.0, criterion_maximal_semicanonical},
      {"8c nontrivial semicanonical implies non-Frobenius", 60.0, criterion_nontrivial_semicanonical_not_frobenius},
      {"8d contact modules obey the 1/(m+1) ratio law", 5.0, criterion_contact_ratio},
      {"8e Borel complements of a simple root", 5.0, criterion_borel_complement},
      {"9 classify --max-rank 4 is byte-deterministic", 120.0, criterion_classify_determinism},
      {"10 E8 Borel enumeration within the guard", 120.0, criterion_e8_borel},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::vector<std::string> notes;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(notes);
    } catch (const std::exception& e) {
      notes.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budgetSeconds) {
      std::ostringstream os;
      os << "exceeded " << c.budgetSeconds << " s budget";
      notes.push_back(os.str());
    }
    bool pass = notes.empty();
    failures += pass ? 0 : 1;
    std::printf("%s criterion %s (%.2f s)\n", pass ? "PASS" : "FAIL", c.name.c_str(), seconds);
    for (const auto& note : notes) std::printf("      %s\n", note.c_str());
  }
  if (failures) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
