#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagvar/drops.hpp"
#include "flagvar/submodule.hpp"

namespace flagvar {

/// Independent oracle: all subsets of the noncompact positive roots passing
/// is_submodule, by exhaustive filtering. The closure test is recomputed here
/// directly from root sums, so none of the enumeration machinery is shared.
/// Refuses flags with more than 20 noncompact positive roots.
std::vector<Bitset128> brute_force_submodules(const ParabolicFlag& flag);

/// How a checked root set is selected on its flag.
struct SubmoduleSelector {
  enum class Kind { ExplicitRoots, LevelSet, ComplementOfSimple, SaturateSeeds };
  Kind kind = Kind::ExplicitRoots;
  std::vector<std::vector<int>> roots;  // coefficient vectors
  int level = 0;
  int node = 0;  // 1-based simple root for ComplementOfSimple
};

struct SubmoduleExpectation {
  std::string label;
  std::string origin;  // overrides the example's origin when nonempty
  SubmoduleSelector select;
  bool expectClosed = true;  // the selected set should pass is_submodule
  std::optional<int> size;
  std::optional<std::vector<long long>> weight;
  std::optional<std::string> ratio;  // "p/q", or "none" for not semicanonical
  std::optional<bool> nontrivial;
  std::optional<bool> frobenius;
  std::optional<bool> contact;
  std::optional<bool> firstOrder;
  std::optional<int> minDecompositionsPerMember;
};

struct GrowthExpectation {
  std::vector<std::vector<int>> field;
  std::vector<int> sizes;
};

/// One worked example: a flag plus checkable expectations. Every expectation
/// records where its numbers come from: "classical" values are fixed facts of
/// the classification, "recomputed" values were frozen from the brute-force
/// oracle in this repository's test suite.
struct NamedExample {
  std::string name;
  std::string origin;  // "classical" | "recomputed"
  FlagDescriptor flag;
  bool adjointCrossing = false;  // derive the crossing from the highest root

  std::optional<int> dim;
  std::optional<std::vector<long long>> omega;
  std::optional<std::vector<std::vector<int>>> noncompactRoots;  // exact set
  std::optional<std::map<int, int>> levelHistogram;
  std::optional<long long> submoduleCount;
  std::optional<std::vector<long long>> submoduleSizes;  // sorted multiset
  std::optional<int> nontrivialSemicanonicalCount;
  std::vector<SubmoduleExpectation> submodules;
  std::vector<GrowthExpectation> growth;

  FlagPtr build() const;
};

std::vector<NamedExample> builtin_corpus();

struct VerifyLine {
  std::string example;
  std::string check;
  std::string origin;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;
  int failures() const;
  bool all_passed() const { return failures() == 0; }
};

/// Run every expectation; failures are data in the report, not errors.
VerifyReport verify_corpus(const std::vector<NamedExample>& corpus = builtin_corpus());

enum class CrossingFilter { All, MaximalOnly, BorelOnly };

struct SweepOptions {
  int maxRank = 4;
  CrossingFilter filter = CrossingFilter::All;
  std::string series = "ABCDEFG";
  std::uint64_t guard = default_enumeration_guard();
};

struct SubmoduleRecord {
  int size = 0;
  std::vector<long long> weight;
  std::optional<Ratio> ratio;
  bool nontrivial = false;
  bool frobenius = false;
  bool contact = false;
  bool firstOrderNondegenerate = false;
};

struct ClassificationRecord {
  FlagDescriptor flag;
  int dim = 0;
  std::vector<long long> omega;
  std::string status;  // "ok" | "overflow"
  std::uint64_t submoduleCount = 0;
  std::vector<SubmoduleRecord> submodules;
};

/// Full classification of one flag: the enumeration plus every per-submodule
/// verdict. Enumeration overflow is recorded in the status, not thrown.
ClassificationRecord classify_flag(const FlagPtr& flag, std::uint64_t guard = default_enumeration_guard());

/// Deterministic order of the irreducible types a sweep visits.
std::vector<RootSystemType> sweep_types(const SweepOptions& options);

/// Every irreducible type within bounds, every nonempty crossing matching the
/// filter, one record each, in a deterministic order.
std::vector<ClassificationRecord> classify_sweep(const SweepOptions& options);

}  // namespace flagvar
