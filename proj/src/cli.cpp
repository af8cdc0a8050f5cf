#include "flagvar/cli.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "flagvar/catalog.hpp"
#include "flagvar/serialize.hpp"

namespace flagvar {

namespace {

struct SpecOptions {
  std::string type;
  int rank = 0;
  std::string crossed;  // "3" / "1,3" / "all"
  bool adjoint = false;
  std::vector<std::string> factors;  // "B:3:3" entries
  std::string specJson;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& argName) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      raise(Errc::BadDescriptor, argName + ": \"" + item + "\" is not an integer");
    }
  }
  return out;
}

RootSystemType parse_type(const std::string& type, int rank, const std::string& argName) {
  if (type.size() != 1) raise(Errc::BadDescriptor, argName + ": series must be one letter A..G, got \"" + type + "\"");
  RootSystemType t{series_from_char(type[0]), rank};
  t.validate();
  return t;
}

FlagPtr build_flag(const SpecOptions& spec) {
  if (!spec.specJson.empty()) return io::parse_flag_descriptor(spec.specJson).build();

  if (!spec.factors.empty()) {
    FlagDescriptor d;
    for (const auto& f : spec.factors) {
      std::vector<std::string> parts;
      std::stringstream ss(f);
      std::string item;
      while (std::getline(ss, item, ':')) parts.push_back(item);
      while (parts.size() < 3) parts.push_back("");
      if (parts.size() != 3) raise(Errc::BadDescriptor, "--factor: expected SERIES:RANK:CROSSED, got \"" + f + "\"");
      int rank = 0;
      try {
        rank = std::stoi(parts[1]);
      } catch (const std::exception&) {
        raise(Errc::BadDescriptor, "--factor: rank \"" + parts[1] + "\" is not an integer");
      }
      RootSystemType t = parse_type(parts[0], rank, "--factor");
      d.factors.push_back(t);
      if (parts[2] == "all") {
        std::vector<int> all(rank);
        for (int i = 0; i < rank; ++i) all[i] = i + 1;
        d.crossed.push_back(all);
      } else if (parts[2].empty()) {
        d.crossed.push_back({});
      } else {
        d.crossed.push_back(parse_int_list(parts[2], "--factor"));
      }
    }
    return d.build();
  }

  if (spec.type.empty()) raise(Errc::BadDescriptor, "--type is required (or use --factor/--spec)");
  RootSystemType t = parse_type(spec.type, spec.rank, "--type/--rank");
  SystemPtr sys = RootSystem::build(t);
  if (spec.adjoint) return ParabolicFlag::adjoint(sys);
  if (spec.crossed.empty()) raise(Errc::BadDescriptor, "--crossed is required (a node list, or \"all\")");
  std::set<int> crossed;
  if (spec.crossed == "all") {
    for (int i = 1; i <= t.rank; ++i) crossed.insert(i);
  } else {
    for (int v : parse_int_list(spec.crossed, "--crossed")) crossed.insert(v);
  }
  return ParabolicFlag::make(sys, crossed);
}

void add_spec_options(CLI::App* cmd, SpecOptions& spec) {
  cmd->add_option("--type", spec.type, "series letter A..G");
  cmd->add_option("--rank", spec.rank, "rank of the system");
  cmd->add_option("--crossed", spec.crossed, "crossed nodes, e.g. \"1,3\" or \"all\" (Bourbaki numbering)");
  cmd->add_flag("--adjoint", spec.adjoint, "cross the nodes pairing with the highest root");
  cmd->add_option("--factor", spec.factors, "product factor SERIES:RANK:CROSSED, repeatable");
  cmd->add_option("--spec", spec.specJson, "flag descriptor as JSON");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"flagvar: root-system combinatorics of generalized flag varieties"};
  app.require_subcommand(1);

  SpecOptions spec;
  std::string format = "text";

  auto* describe = app.add_subcommand("describe", "dimension, root split, omega, grading of one flag");
  add_spec_options(describe, spec);
  describe->add_option("--format", format, "text|json");

  auto* submodules = app.add_subcommand("submodules", "enumerate the submodule lattice of one flag");
  add_spec_options(submodules, spec);
  submodules->add_option("--format", format, "text|json");

  auto* classify = app.add_subcommand("classify", "classification sweep over types and crossings");
  int maxRank = 4;
  std::string crossings = "all";
  std::string seriesFilter = "ABCDEFG";
  classify->add_option("--max-rank", maxRank, "largest rank per series");
  classify->add_option("--crossings", crossings, "all|maximal|borel");
  classify->add_option("--series", seriesFilter, "subset of ABCDEFG");
  classify->add_option("--format", format, "json|csv|table");

  auto* verify = app.add_subcommand("verify", "run the built-in expectation corpus");
  verify->add_option("--format", format, "text|json");

  auto* drops = app.add_subcommand("drops", "lattice of parabolics containing the flag");
  add_spec_options(drops, spec);
  std::string rational;
  drops->add_option("--rational", rational, "nodes with rational circles (Borel flags only)");
  drops->add_option("--format", format, "text|json");

  auto* growth = app.add_subcommand("growth", "bracket-growth filtration sizes of a plane field");
  add_spec_options(growth, spec);
  std::vector<std::string> fieldRoots;
  growth->add_option("--root", fieldRoots, "field member as coefficients, e.g. \"1,0\"; repeatable")->required();
  growth->add_option("--format", format, "text|json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (describe->parsed()) {
      FlagPtr flag = build_flag(spec);
      if (format == "json")
        out << io::describe_json(*flag) << "\n";
      else
        io::write_describe_text(out, *flag);
      return 0;
    }
    if (submodules->parsed()) {
      FlagPtr flag = build_flag(spec);
      auto all = enumerate_submodules(flag);
      if (format == "json")
        out << io::submodules_json(*flag, all) << "\n";
      else
        io::write_submodules_text(out, *flag, all);
      return 0;
    }
    if (classify->parsed()) {
      SweepOptions options;
      options.maxRank = maxRank;
      options.series = seriesFilter;
      if (crossings == "all") options.filter = CrossingFilter::All;
      else if (crossings == "maximal") options.filter = CrossingFilter::MaximalOnly;
      else if (crossings == "borel") options.filter = CrossingFilter::BorelOnly;
      else raise(Errc::BadDescriptor, "--crossings: \"" + crossings + "\" is not all|maximal|borel");
      auto records = classify_sweep(options);
      if (format == "csv") io::write_records_csv(out, records);
      else if (format == "table") io::write_records_table(out, records);
      else io::write_records_jsonl(out, records);
      return 0;
    }
    if (verify->parsed()) {
      VerifyReport report = verify_corpus();
      if (format == "json")
        out << io::verify_json(report) << "\n";
      else
        io::write_verify_text(out, report);
      return report.all_passed() ? 0 : 1;
    }
    if (drops->parsed()) {
      FlagPtr flag = build_flag(spec);
      if (!rational.empty()) {
        std::set<int> nodes;
        for (int v : parse_int_list(rational, "--rational")) nodes.insert(v);
        CircleDrop cd = circle_drop(flag, nodes);
        out << "circle rule target: crossed {";
        bool first = true;
        for (int node : cd.q->crossed()) {
          out << (first ? "" : ",") << node;
          first = false;
        }
        out << "}" << (cd.q->is_point() ? " (whole group: drop to a point)" : "") << "\n";
        flag = cd.q;
      }
      auto targets = parabolics_containing(flag);
      if (format == "json")
        out << io::drop_lattice_json(targets) << "\n";
      else
        io::write_drop_lattice_text(out, targets);
      return 0;
    }
    if (growth->parsed()) {
      FlagPtr flag = build_flag(spec);
      std::vector<std::vector<int>> field;
      for (const auto& r : fieldRoots) field.push_back(parse_int_list(r, "--root"));
      GrowthVector g = growth_vector(*flag, flag->mask_of_roots(field));
      if (format == "json") {
        out << "{\"sizes\":[";
        for (std::size_t i = 0; i < g.sizes.size(); ++i) out << (i ? "," : "") << g.sizes[i];
        out << "]}\n";
      } else {
        out << "growth " << g.str() << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == Errc::GuardExceeded ? 3 : 2;
  }
  return 2;
}

}  // namespace flagvar
