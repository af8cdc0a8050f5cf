#include "flagvar/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace flagvar {

std::vector<Bitset128> brute_force_submodules(const ParabolicFlag& flag) {
  const int d = flag.dimension();
  if (d > 20) raise(Errc::GuardExceeded, "refusing exhaustive filtering over 2^" + std::to_string(d) + " subsets");

  // Closure targets recomputed here straight from root sums; only the
  // definition is shared with the enumerator, not its machinery.
  const RootSystem& sys = flag.system();
  const int m = sys.positive_count();
  std::vector<int> adders;
  for (int k : flag.compact_positive()) {
    adders.push_back(k);
    adders.push_back(m + k);
  }
  for (int k : flag.noncompact()) adders.push_back(k);

  std::vector<std::uint32_t> forced(d, 0);
  for (int a = 0; a < d; ++a)
    for (int adder : adders) {
      auto s = sys.sum_index(flag.noncompact()[a], adder);
      if (s && *s < m && flag.local_index(*s) >= 0) forced[a] |= 1u << flag.local_index(*s);
    }

  std::vector<Bitset128> out;
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    bool closed = true;
    for (int a = 0; a < d && closed; ++a)
      if ((mask >> a) & 1u) closed = (forced[a] & ~mask) == 0;
    if (!closed) continue;
    Bitset128 bits;
    for (int a = 0; a < d; ++a)
      if ((mask >> a) & 1u) bits.set(a);
    out.push_back(bits);
  }
  std::sort(out.begin(), out.end(), [](const Bitset128& a, const Bitset128& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.numeric_less(b);
  });
  return out;
}

FlagPtr NamedExample::build() const {
  if (adjointCrossing) return ParabolicFlag::adjoint(RootSystem::build_product(flag.factors));
  return flag.build();
}

namespace {

std::vector<int> unit_vec(int n, int node1) {
  std::vector<int> v(n, 0);
  v[node1 - 1] = 1;
  return v;
}

// alpha_1 + ... + alpha_k
std::vector<int> prefix_vec(int n, int k) {
  std::vector<int> v(n, 0);
  for (int i = 0; i < k; ++i) v[i] = 1;
  return v;
}

// alpha_i + ... + alpha_n
std::vector<int> suffix_vec(int n, int i) {
  std::vector<int> v(n, 0);
  for (int j = i - 1; j < n; ++j) v[j] = 1;
  return v;
}

FlagDescriptor simple_flag(Series s, int rank, std::vector<int> crossed) {
  return FlagDescriptor{{RootSystemType{s, rank}}, {std::move(crossed)}};
}

std::vector<int> borel_crossing(int rank) {
  std::vector<int> all(rank);
  for (int i = 0; i < rank; ++i) all[i] = i + 1;
  return all;
}

void add_g2_examples(std::vector<NamedExample>& corpus) {
  NamedExample g2;
  g2.name = "g2-cross1";
  g2.origin = "classical";
  g2.flag = simple_flag(Series::G, 2, {1});
  g2.dim = 5;
  g2.omega = {{10, 5}};
  SubmoduleExpectation starred;
  starred.label = "pfaffian3";
  starred.select = {SubmoduleSelector::Kind::ExplicitRoots, {{3, 2}, {2, 1}, {3, 1}}, 0, 0};
  starred.size = 3;
  starred.weight = {{8, 4}};
  starred.ratio = "4/5";
  starred.nontrivial = true;
  starred.frobenius = false;
  starred.contact = false;
  starred.firstOrder = false;
  g2.submodules.push_back(starred);
  g2.growth.push_back(GrowthExpectation{{{1, 0}, {1, 1}}, {2, 3, 5}});
  corpus.push_back(g2);

  NamedExample inv;
  inv.name = "g2-cross1-inventory";
  inv.origin = "recomputed";
  inv.flag = simple_flag(Series::G, 2, {1});
  inv.submoduleCount = 4;
  inv.submoduleSizes = {{0, 2, 3, 5}};
  corpus.push_back(inv);
}

void add_incidence_examples(std::vector<NamedExample>& corpus) {
  for (int n = 2; n <= 8; ++n) {
    NamedExample e;
    e.name = "a" + std::to_string(n) + "-point-line";
    e.origin = "classical";
    e.flag = simple_flag(Series::A, n, {1, 2});
    e.dim = 2 * n - 1;
    std::vector<long long> omega(n);
    omega[0] = n;
    for (int k = 2; k <= n; ++k) omega[k - 1] = 2 * (n - k + 1);
    e.omega = omega;
    e.submoduleCount = 5;
    e.submoduleSizes = {{0, static_cast<long long>(n - 1), static_cast<long long>(n),
                         static_cast<long long>(2 * n - 2), static_cast<long long>(2 * n - 1)}};

    SubmoduleExpectation point;
    point.label = "point-fibers";
    point.select = {SubmoduleSelector::Kind::SaturateSeeds, {unit_vec(n, 1)}, 0, 0};
    point.size = n;
    std::vector<long long> wp(n);
    for (int k = 1; k <= n; ++k) wp[k - 1] = n - k + 1;
    point.weight = wp;
    point.ratio = "none";
    point.nontrivial = true;
    point.frobenius = true;
    e.submodules.push_back(point);

    SubmoduleExpectation line;
    line.label = "line-fibers";
    line.select = {SubmoduleSelector::Kind::SaturateSeeds, {unit_vec(n, 2)}, 0, 0};
    line.size = 2 * n - 2;
    std::vector<long long> wl(n);
    wl[0] = n - 1;
    for (int k = 2; k <= n; ++k) wl[k - 1] = 2 * (n - k + 1);
    line.weight = wl;
    line.ratio = "none";
    line.nontrivial = true;
    line.frobenius = true;
    e.submodules.push_back(line);

    SubmoduleExpectation both;
    both.label = "intersection";
    both.select = {SubmoduleSelector::Kind::SaturateSeeds, {prefix_vec(n, 2)}, 0, 0};
    both.size = n - 1;
    std::vector<long long> w0(n);
    w0[0] = n - 1;
    for (int k = 2; k <= n; ++k) w0[k - 1] = n - k + 1;
    both.weight = w0;
    both.ratio = (n == 2) ? "1/2" : "none";
    both.nontrivial = true;
    both.origin = "recomputed";
    both.frobenius = false;
    e.submodules.push_back(both);

    corpus.push_back(e);
  }
}

void add_adjoint_dimension_table(std::vector<NamedExample>& corpus) {
  auto row = [&](Series s, int rank, int dim) {
    NamedExample e;
    e.name = "adjoint-" + RootSystemType{s, rank}.name();
    e.origin = "classical";
    e.flag = FlagDescriptor{{RootSystemType{s, rank}}, {{}}};
    e.adjointCrossing = true;
    e.dim = dim;
    corpus.push_back(e);
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

void add_adjoint_contact_examples(std::vector<NamedExample>& corpus) {
  for (int n = 2; n <= 6; ++n) {
    NamedExample e;
    e.name = "a" + std::to_string(n) + "-adjoint";
    e.origin = "classical";
    e.flag = FlagDescriptor{{RootSystemType{Series::A, n}}, {{}}};
    e.adjointCrossing = true;
    e.dim = 2 * n - 1;

    SubmoduleExpectation contact;
    contact.label = "contact";
    contact.select = {SubmoduleSelector::Kind::ExplicitRoots, {prefix_vec(n, n)}, 0, 0};
    contact.size = 1;
    contact.ratio = "1/" + std::to_string(n);
    contact.nontrivial = true;
    contact.contact = true;
    contact.frobenius = false;
    contact.origin = "recomputed";
    e.submodules.push_back(contact);

    SubmoduleExpectation fib0;
    fib0.label = "point-legendre";
    std::vector<std::vector<int>> prefixes, suffixes;
    for (int k = 1; k <= n; ++k) prefixes.push_back(prefix_vec(n, k));
    for (int i = 1; i <= n; ++i) suffixes.push_back(suffix_vec(n, i));
    fib0.select = {SubmoduleSelector::Kind::ExplicitRoots, prefixes, 0, 0};
    fib0.size = n;
    fib0.frobenius = true;
    e.submodules.push_back(fib0);

    SubmoduleExpectation fib1;
    fib1.label = "hyperplane-legendre";
    fib1.select = {SubmoduleSelector::Kind::ExplicitRoots, suffixes, 0, 0};
    fib1.size = n;
    fib1.frobenius = true;
    e.submodules.push_back(fib1);

    corpus.push_back(e);
  }
}

void add_b3_example(std::vector<NamedExample>& corpus) {
  NamedExample e;
  e.name = "b3-cross3";
  e.origin = "classical";
  e.flag = simple_flag(Series::B, 3, {3});
  e.dim = 6;
  e.noncompactRoots = {{{0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {0, 1, 2}, {1, 1, 2}, {1, 2, 2}}};

  SubmoduleExpectation level2;
  level2.label = "level2";
  level2.select.kind = SubmoduleSelector::Kind::LevelSet;
  level2.select.level = 2;
  level2.size = 3;
  level2.weight = {{2, 4, 6}};
  level2.ratio = "2/3";
  level2.origin = "recomputed";
  level2.nontrivial = true;
  level2.frobenius = false;
  level2.minDecompositionsPerMember = 1;
  e.submodules.push_back(level2);
  corpus.push_back(e);
}

void add_c3_example(std::vector<NamedExample>& corpus) {
  NamedExample e;
  e.name = "c3-cross2";
  e.origin = "classical";
  e.flag = simple_flag(Series::C, 3, {2});
  e.dim = 7;
  e.noncompactRoots = {{{0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 2, 1}}};
  e.levelHistogram = {{{1, 4}, {2, 3}}};

  SubmoduleExpectation level2;
  level2.label = "level2";
  level2.select.kind = SubmoduleSelector::Kind::LevelSet;
  level2.select.level = 2;
  level2.size = 3;
  level2.weight = {{3, 6, 3}};
  level2.ratio = "3/5";
  level2.origin = "recomputed";
  level2.nontrivial = true;
  level2.frobenius = false;
  level2.minDecompositionsPerMember = 1;
  e.submodules.push_back(level2);
  corpus.push_back(e);
}

void add_bn_examples(std::vector<NamedExample>& corpus) {
  for (int n = 3; n <= 6; ++n) {
    NamedExample e;
    e.name = "b" + std::to_string(n) + "-null-flags";
    e.origin = "classical";
    e.flag = simple_flag(Series::B, n, {n});
    e.dim = n * (n + 1) / 2;
    e.levelHistogram = {{{1, n}, {2, n * (n - 1) / 2}}};

    SubmoduleExpectation level2;
    level2.label = "level2";
    level2.select.kind = SubmoduleSelector::Kind::LevelSet;
    level2.select.level = 2;
    level2.size = n * (n - 1) / 2;
    level2.ratio = std::to_string(n - 1) + "/" + std::to_string(n);
    level2.origin = "recomputed";
    level2.nontrivial = true;
    level2.frobenius = false;
    level2.firstOrder = true;
    e.submodules.push_back(level2);

    std::vector<std::vector<int>> level1;
    for (int i = 1; i <= n; ++i) level1.push_back(suffix_vec(n, i));
    e.growth.push_back(GrowthExpectation{level1, {n, n * (n + 1) / 2}});
    corpus.push_back(e);
  }
}

void add_rank2_borel_survey(std::vector<NamedExample>& corpus) {
  auto entry = [&](Series s, const char* name, int nontrivialSemicanonical, long long count) {
    NamedExample e;
    e.name = name;
    e.origin = "classical";
    e.flag = simple_flag(s, 2, {1, 2});
    e.nontrivialSemicanonicalCount = nontrivialSemicanonical;
    e.submoduleCount = count;  // recomputed inventory
    corpus.push_back(e);
  };
  entry(Series::A, "a2-borel", 1, 5);
  entry(Series::B, "b2-borel", 0, 6);
  entry(Series::G, "g2-borel", 0, 8);
}

void add_borel_complement_examples(std::vector<NamedExample>& corpus) {
  auto entry = [&](Series s, int rank) {
    NamedExample e;
    e.name = "borel-complement-" + RootSystemType{s, rank}.name();
    e.origin = "classical";
    e.flag = simple_flag(s, rank, borel_crossing(rank));
    for (int node = 1; node <= rank; ++node) {
      SubmoduleExpectation c;
      c.label = "minus-node" + std::to_string(node);
      c.select.kind = SubmoduleSelector::Kind::ComplementOfSimple;
      c.select.node = node;
      // Dropping a single simple root from the full module breaks exact
      // proportionality in rank >= 2; only A1 (where it leaves zero) survives.
      c.ratio = (s == Series::A && rank == 1) ? "0/1" : "none";
      e.submodules.push_back(c);
    }
    corpus.push_back(e);
  };
  entry(Series::A, 1);
  entry(Series::A, 2);
  entry(Series::A, 3);
  entry(Series::B, 2);
  entry(Series::B, 3);
  entry(Series::G, 2);
}

std::string fmt_int(long long v) { return std::to_string(v); }

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string fmt_coeffs(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string fmt_ratio(const std::optional<Ratio>& r) { return r ? r->str() : "none"; }

std::string fmt_root_set(std::vector<std::vector<int>> roots) {
  std::sort(roots.begin(), roots.end());
  std::string s;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    s += (i ? " (" : "(");
    for (std::size_t j = 0; j < roots[i].size(); ++j) s += (j ? "," : "") + std::to_string(roots[i][j]);
    s += ")";
  }
  return s;
}

std::string fmt_histogram(const std::map<int, int>& h) {
  std::string s;
  for (const auto& [level, count] : h) {
    if (!s.empty()) s += " ";
    s += std::to_string(level) + ":" + std::to_string(count);
  }
  return s;
}

Bitset128 resolve_selector(const FlagPtr& flag, const SubmoduleSelector& sel) {
  switch (sel.kind) {
    case SubmoduleSelector::Kind::ExplicitRoots:
      return flag->mask_of_roots(sel.roots);
    case SubmoduleSelector::Kind::LevelSet:
      return flag->level_mask(sel.level);
    case SubmoduleSelector::Kind::ComplementOfSimple:
      return flag->all_mask().and_not(flag->mask_of_roots({unit_vec(flag->system().rank(), sel.node)}));
    case SubmoduleSelector::Kind::SaturateSeeds:
      return saturate(flag, flag->mask_of_roots(sel.roots)).members();
  }
  return Bitset128{};
}

}  // namespace

std::vector<NamedExample> builtin_corpus() {
  std::vector<NamedExample> corpus;
  add_g2_examples(corpus);
  add_incidence_examples(corpus);
  add_adjoint_dimension_table(corpus);
  add_adjoint_contact_examples(corpus);
  add_b3_example(corpus);
  add_c3_example(corpus);
  add_bn_examples(corpus);
  add_rank2_borel_survey(corpus);
  add_borel_complement_examples(corpus);
  return corpus;
}

int VerifyReport::failures() const {
  int n = 0;
  for (const auto& line : lines)
    if (!line.pass) ++n;
  return n;
}

VerifyReport verify_corpus(const std::vector<NamedExample>& corpus) {
  VerifyReport report;
  std::string origin;
  auto check = [&](const std::string& example, const std::string& what, const std::string& expected,
                   const std::string& actual) {
    report.lines.push_back(VerifyLine{example, what, origin, expected, actual, expected == actual});
  };

  for (const auto& ex : corpus) {
    origin = ex.origin;
    FlagPtr flag;
    try {
      flag = ex.build();
    } catch (const Error& err) {
      check(ex.name, "build", "a valid flag", err.what());
      continue;
    }

    if (ex.dim) check(ex.name, "dim", fmt_int(*ex.dim), fmt_int(flag->dimension()));
    if (ex.omega) check(ex.name, "omega", fmt_coeffs(*ex.omega), fmt_coeffs(flag->omega().coeffs));
    if (ex.noncompactRoots) {
      std::vector<std::vector<int>> actual;
      for (int a = 0; a < flag->dimension(); ++a) actual.push_back(flag->noncompact_root(a).coeffs);
      check(ex.name, "noncompact-roots", fmt_root_set(*ex.noncompactRoots), fmt_root_set(actual));
    }
    if (ex.levelHistogram) check(ex.name, "levels", fmt_histogram(*ex.levelHistogram), fmt_histogram(flag->level_histogram()));

    if (ex.submoduleCount || ex.submoduleSizes || ex.nontrivialSemicanonicalCount) {
      try {
        auto all = enumerate_submodules(flag);
        if (ex.submoduleCount)
          check(ex.name, "submodule-count", fmt_int(*ex.submoduleCount), fmt_int(static_cast<long long>(all.size())));
        if (ex.submoduleSizes) {
          std::vector<long long> sizes;
          for (const auto& s : all) sizes.push_back(s.size());
          std::sort(sizes.begin(), sizes.end());
          check(ex.name, "submodule-sizes", fmt_coeffs(*ex.submoduleSizes), fmt_coeffs(sizes));
        }
        if (ex.nontrivialSemicanonicalCount) {
          int count = 0;
          for (const auto& s : all)
            if (is_nontrivial(s) && semicanonical_ratio(s)) ++count;
          check(ex.name, "nontrivial-semicanonical-count", fmt_int(*ex.nontrivialSemicanonicalCount), fmt_int(count));
        }
      } catch (const Error& err) {
        check(ex.name, "enumeration", "completes", err.what());
      }
    }

    for (const auto& se : ex.submodules) {
      const std::string tag = ex.name + "/" + se.label;
      origin = se.origin.empty() ? ex.origin : se.origin;
      try {
        Bitset128 mask = resolve_selector(flag, se.select);
        SubmoduleRootSet s(flag, mask);
        if (se.expectClosed) check(tag, "closed", "true", fmt_bool(is_submodule(*flag, mask)));
        if (se.size) check(tag, "size", fmt_int(*se.size), fmt_int(s.size()));
        if (se.weight) check(tag, "weight", fmt_coeffs(*se.weight), fmt_coeffs(s.weight().coeffs));
        if (se.ratio) check(tag, "ratio", *se.ratio, fmt_ratio(semicanonical_ratio(s)));
        if (se.nontrivial) check(tag, "nontrivial", fmt_bool(*se.nontrivial), fmt_bool(is_nontrivial(s)));
        if (se.frobenius) check(tag, "frobenius", fmt_bool(*se.frobenius), fmt_bool(is_frobenius(s)));
        if (se.contact) check(tag, "contact", fmt_bool(*se.contact), fmt_bool(is_contact(s)));
        if (se.firstOrder)
          check(tag, "first-order-nondegenerate", fmt_bool(*se.firstOrder),
                fmt_bool(is_first_order_nondegenerate(*flag, s)));
        if (se.minDecompositionsPerMember) {
          int least = -1;
          for (int a : s.member_list()) {
            int c = decomposition_count(s, a);
            if (least < 0 || c < least) least = c;
          }
          check(tag, "min-decompositions", ">=" + fmt_int(*se.minDecompositionsPerMember),
                least >= *se.minDecompositionsPerMember ? ">=" + fmt_int(*se.minDecompositionsPerMember)
                                                        : fmt_int(least));
        }
      } catch (const Error& err) {
        check(tag, "evaluation", "completes", err.what());
      }
    }

    for (std::size_t g = 0; g < ex.growth.size(); ++g) {
      const std::string tag = ex.name + "/growth" + std::to_string(g);
      origin = ex.origin;
      try {
        GrowthVector gv = growth_vector(*flag, flag->mask_of_roots(ex.growth[g].field));
        GrowthVector want{ex.growth[g].sizes};
        check(tag, "sizes", want.str(), gv.str());
      } catch (const Error& err) {
        check(tag, "evaluation", "completes", err.what());
      }
    }
  }
  return report;
}

ClassificationRecord classify_flag(const FlagPtr& flag, std::uint64_t guard) {
  ClassificationRecord rec;
  rec.flag = FlagDescriptor::of(*flag);
  rec.dim = flag->dimension();
  rec.omega = flag->omega().coeffs;
  try {
    auto all = enumerate_submodules(flag, guard);
    rec.status = "ok";
    rec.submoduleCount = all.size();
    rec.submodules.reserve(all.size());
    for (const auto& s : all) {
      SubmoduleRecord r;
      r.size = s.size();
      r.weight = s.weight().coeffs;
      r.ratio = semicanonical_ratio(s);
      r.nontrivial = is_nontrivial(s);
      r.frobenius = is_frobenius(s);
      r.contact = is_contact(s);
      r.firstOrderNondegenerate = is_first_order_nondegenerate(*flag, s);
      rec.submodules.push_back(std::move(r));
    }
  } catch (const Error& err) {
    if (err.code() != Errc::GuardExceeded) throw;
    rec.status = "overflow";
    rec.submoduleCount = 0;
    rec.submodules.clear();
  }
  return rec;
}

std::vector<RootSystemType> sweep_types(const SweepOptions& options) {
  std::vector<RootSystemType> out;
  for (char c : std::string("ABCDEFG")) {
    if (options.series.find(c) == std::string::npos) continue;
    Series s = series_from_char(c);
    int lo = 0, hi = 0;
    switch (s) {
      case Series::A: lo = 1; hi = options.maxRank; break;
      case Series::B: lo = 2; hi = options.maxRank; break;
      case Series::C: lo = 2; hi = options.maxRank; break;
      case Series::D: lo = 3; hi = options.maxRank; break;
      case Series::E: lo = 6; hi = std::min(8, options.maxRank); break;
      case Series::F: lo = 4; hi = std::min(4, options.maxRank); break;
      case Series::G: lo = 2; hi = std::min(2, options.maxRank); break;
    }
    for (int r = lo; r <= hi; ++r) out.push_back(RootSystemType{s, r});
  }
  return out;
}

std::vector<ClassificationRecord> classify_sweep(const SweepOptions& options) {
  std::vector<ClassificationRecord> out;
  for (const auto& type : sweep_types(options)) {
    SystemPtr sys = RootSystem::build(type);
    const int rank = type.rank;
    for (std::uint64_t bits = 1; bits < (1ull << rank); ++bits) {
      int popcount = std::popcount(bits);
      if (options.filter == CrossingFilter::MaximalOnly && popcount != 1) continue;
      if (options.filter == CrossingFilter::BorelOnly && popcount != rank) continue;
      std::set<int> crossed;
      for (int i = 0; i < rank; ++i)
        if ((bits >> i) & 1) crossed.insert(i + 1);
      out.push_back(classify_flag(ParabolicFlag::make(sys, crossed), options.guard));
    }
  }
  return out;
}

}  // namespace flagvar
