#include <doctest.h>

#include "flagvar/rootsys.hpp"
#include "oracle.hpp"

using namespace flagvar;

namespace {

std::vector<RootSystemType> survey_types(int maxRank) {
  std::vector<RootSystemType> out;
  for (int n = 1; n <= maxRank; ++n) out.push_back({Series::A, n});
  for (int n = 2; n <= maxRank; ++n) out.push_back({Series::B, n});
  for (int n = 2; n <= maxRank; ++n) out.push_back({Series::C, n});
  for (int n = 3; n <= maxRank; ++n) out.push_back({Series::D, n});
  if (maxRank >= 6) out.push_back({Series::E, 6});
  if (maxRank >= 7) out.push_back({Series::E, 7});
  if (maxRank >= 8) out.push_back({Series::E, 8});
  if (maxRank >= 4) out.push_back({Series::F, 4});
  if (maxRank >= 2) out.push_back({Series::G, 2});
  return out;
}

int expected_positive_count(const RootSystemType& t) {
  int n = t.rank;
  switch (t.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return -1;
}

}  // namespace

TEST_CASE("positive root counts match the classification") {
  for (const auto& t : survey_types(8)) {
    CAPTURE(t.name());
    auto sys = RootSystem::build(t);
    CHECK(sys->positive_count() == expected_positive_count(t));
    CHECK(sys->root_count() == 2 * sys->positive_count());
  }
}

TEST_CASE("string closure agrees with reflection closure") {
  for (const auto& t : survey_types(8)) {
    CAPTURE(t.name());
    auto sys = RootSystem::build(t);
    CHECK(testing::sorted_positive_coeffs(*sys) == testing::reflection_closure_positives(*sys));
  }
}

TEST_CASE("invalid series/rank combinations are rejected") {
  for (auto bad : {RootSystemType{Series::A, 0}, RootSystemType{Series::B, 1}, RootSystemType{Series::C, 1},
                   RootSystemType{Series::D, 2}, RootSystemType{Series::E, 5}, RootSystemType{Series::E, 9},
                   RootSystemType{Series::F, 3}, RootSystemType{Series::G, 3}}) {
    CHECK_THROWS_AS(RootSystem::build(bad), Error);
  }
}

TEST_CASE("G2 positive roots in canonical order") {
  auto sys = RootSystem::build({Series::G, 2});
  std::vector<std::vector<int>> want = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  REQUIRE(sys->positive_count() == 6);
  for (int k = 0; k < 6; ++k) CHECK(sys->positive(k).coeffs == want[k]);
}

TEST_CASE("A1 has a single positive root") {
  auto sys = RootSystem::build({Series::A, 1});
  CHECK(sys->positive_count() == 1);
  CHECK(sys->positive(0).coeffs == std::vector<int>{1});
}

TEST_CASE("E8 has 120 positive roots") {
  auto sys = RootSystem::build({Series::E, 8});
  CHECK(sys->positive_count() == 120);
}

TEST_CASE("root sums") {
  auto g2 = RootSystem::build({Series::G, 2});
  Root alpha = g2->simple(1);
  Root ab = *g2->index_of(std::vector<int>{1, 1}) >= 0 ? g2->root(*g2->index_of(std::vector<int>{1, 1})) : Root{};

  SUBCASE("alpha + (alpha+beta) = 2 alpha + beta") {
    auto sum = g2->add_roots(alpha, ab);
    REQUIRE(sum.has_value());
    CHECK(sum->coeffs == std::vector<int>{2, 1});
  }
  SUBCASE("alpha + alpha is absent") { CHECK(!g2->add_roots(alpha, alpha).has_value()); }
  SUBCASE("alpha + (-alpha) is absent") {
    Root neg = g2->root(alpha.index + g2->positive_count());
    CHECK(!g2->add_roots(alpha, neg).has_value());
  }
  SUBCASE("B3: alpha3 + (alpha2+alpha3) = alpha2 + 2 alpha3") {
    auto b3 = RootSystem::build({Series::B, 3});
    Root a3 = b3->simple(3);
    Root a23 = b3->root(*b3->index_of(std::vector<int>{0, 1, 1}));
    auto sum = b3->add_roots(a3, a23);
    REQUIRE(sum.has_value());
    CHECK(sum->coeffs == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("add_roots is commutative and matches is_root on coefficient sums") {
  for (const auto& t : {RootSystemType{Series::B, 2}, RootSystemType{Series::G, 2}, RootSystemType{Series::A, 3}}) {
    auto sys = RootSystem::build(t);
    for (int a = 0; a < sys->root_count(); ++a) {
      for (int b = 0; b < sys->root_count(); ++b) {
        Root ra = sys->root(a), rb = sys->root(b);
        auto ab = sys->add_roots(ra, rb);
        auto ba = sys->add_roots(rb, ra);
        CHECK(ab == ba);
        std::vector<int> sum(sys->rank());
        for (int i = 0; i < sys->rank(); ++i) sum[i] = ra.coeffs[i] + rb.coeffs[i];
        CHECK(ab.has_value() == sys->is_root(sum));
      }
    }
  }
}

TEST_CASE("foreign roots are rejected") {
  auto g2 = RootSystem::build({Series::G, 2});
  auto a2 = RootSystem::build({Series::A, 2});
  Root top = g2->highest_root();  // (3,2): not a root of A2
  CHECK_THROWS_AS(a2->add_roots(top, a2->simple(1)), Error);
}

TEST_CASE("highest root") {
  CHECK(RootSystem::build({Series::G, 2})->highest_root().coeffs == std::vector<int>{3, 2});
  CHECK(RootSystem::build({Series::A, 1})->highest_root().coeffs == std::vector<int>{1});
  CHECK(RootSystem::build({Series::A, 5})->highest_root().coeffs == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(RootSystem::build({Series::E, 8})->highest_root().coeffs == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK_THROWS_AS(RootSystem::build_product({{Series::A, 1}, {Series::A, 1}})->highest_root(), Error);
}

TEST_CASE("highest root plus a simple root is never a root") {
  for (const auto& t : survey_types(6)) {
    auto sys = RootSystem::build(t);
    Root top = sys->highest_root();
    for (int i = 1; i <= sys->rank(); ++i) CHECK(!sys->add_roots(top, sys->simple(i)).has_value());
  }
}

TEST_CASE("is_root") {
  auto g2 = RootSystem::build({Series::G, 2});
  CHECK(g2->is_root(std::vector<int>{3, 2}));
  CHECK(!g2->is_root(std::vector<int>{2, 2}));
  CHECK(!g2->is_root(std::vector<int>{0, 0}));
  CHECK(g2->is_root(std::vector<int>{-3, -2}));
}

TEST_CASE("every positive root is reachable from a simple root by simple additions") {
  for (const auto& t : survey_types(6)) {
    CAPTURE(t.name());
    auto sys = RootSystem::build(t);
    std::set<std::vector<int>> reached;
    std::vector<Root> wave;
    for (int i = 1; i <= sys->rank(); ++i) {
      reached.insert(sys->simple(i).coeffs);
      wave.push_back(sys->simple(i));
    }
    while (!wave.empty()) {
      std::vector<Root> next;
      for (const auto& r : wave)
        for (int i = 1; i <= sys->rank(); ++i)
          if (auto s = sys->add_roots(r, sys->simple(i)); s && reached.insert(s->coeffs).second)
            next.push_back(*s);
      wave = std::move(next);
    }
    CHECK(static_cast<int>(reached.size()) == sys->positive_count());
  }
}

TEST_CASE("diagram components") {
  SUBCASE("single factor") {
    auto comps = diagram_components({{Series::A, 2}});
    CHECK(comps.size() == 1);
    CHECK(comps[0].second->positive_count() == 3);
  }
  SUBCASE("two A1 factors") {
    auto comps = diagram_components({{Series::A, 1}, {Series::A, 1}});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].second->positive_count() == 1);
    CHECK(comps[1].second->positive_count() == 1);
  }
  SUBCASE("G2 x A2") {
    auto comps = diagram_components({{Series::G, 2}, {Series::A, 2}});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].second->positive_count() == 6);
    CHECK(comps[1].second->positive_count() == 3);
  }
  SUBCASE("product system uses block coordinates") {
    auto sys = RootSystem::build_product({{Series::G, 2}, {Series::A, 2}});
    CHECK(sys->rank() == 4);
    CHECK(sys->positive_count() == 9);
    CHECK(sys->is_root(std::vector<int>{3, 2, 0, 0}));
    CHECK(sys->is_root(std::vector<int>{0, 0, 1, 1}));
    CHECK(!sys->is_root(std::vector<int>{1, 0, 1, 0}));
    CHECK(sys->factor_of_node(2) == 0);
    CHECK(sys->factor_of_node(3) == 1);
  }
}

TEST_CASE("interned indices round-trip through negation") {
  auto b3 = RootSystem::build({Series::B, 3});
  for (int k = 0; k < b3->positive_count(); ++k) {
    Root pos = b3->positive(k);
    Root neg = b3->root(k + b3->positive_count());
    for (int i = 0; i < 3; ++i) CHECK(neg.coeffs[i] == -pos.coeffs[i]);
    CHECK(*b3->index_of(neg.coeffs) == k + b3->positive_count());
  }
}
