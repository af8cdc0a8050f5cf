#include "flagvar/serialize.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace flagvar::io {

namespace {

using nlohmann::json;

json weight_json(const std::vector<long long>& w) { return json(w); }

json coeffs_json(const std::vector<int>& c) { return json(c); }

json descriptor_json_obj(const FlagDescriptor& d) {
  json factors = json::array();
  for (const auto& f : d.factors)
    factors.push_back({{"series", std::string(1, static_cast<char>(f.series))}, {"rank", f.rank}});
  json crossed = json::array();
  for (const auto& c : d.crossed) crossed.push_back(c);
  return json{{"factors", factors}, {"crossed", crossed}};
}

json ratio_json(const std::optional<Ratio>& r) {
  if (!r) return nullptr;
  return r->str();
}

json submodule_json_obj(const SubmoduleRootSet& s) {
  return json{{"members", s.member_list()},
              {"weight", weight_json(s.weight().coeffs)},
              {"ratio", ratio_json(semicanonical_ratio(s))},
              {"nontrivial", is_nontrivial(s)},
              {"frobenius", is_frobenius(s)},
              {"contact", is_contact(s)}};
}

}  // namespace

FlagDescriptor parse_flag_descriptor(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    raise(Errc::BadDescriptor, std::string("not valid JSON: ") + e.what());
  }
  FlagDescriptor d;
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
    raise(Errc::BadDescriptor, "descriptor needs a nonempty \"factors\" array");
  for (const auto& f : j["factors"]) {
    if (!f.contains("series") || !f.contains("rank") || !f["series"].is_string() || !f["rank"].is_number_integer())
      raise(Errc::BadDescriptor, "each factor needs \"series\" and \"rank\"");
    std::string s = f["series"].get<std::string>();
    if (s.size() != 1) raise(Errc::BadDescriptor, "series must be a single letter, got \"" + s + "\"");
    d.factors.push_back(RootSystemType{series_from_char(s[0]), f["rank"].get<int>()});
  }
  if (j.contains("crossed")) {
    if (!j["crossed"].is_array()) raise(Errc::BadDescriptor, "\"crossed\" must be an array of per-factor lists");
    for (const auto& c : j["crossed"]) d.crossed.push_back(c.get<std::vector<int>>());
  }
  while (d.crossed.size() < d.factors.size()) d.crossed.push_back({});
  return d;
}

std::string flag_descriptor_json(const FlagDescriptor& d) { return descriptor_json_obj(d).dump(); }

std::string submodule_json(const SubmoduleRootSet& s) { return submodule_json_obj(s).dump(); }

void write_describe_text(std::ostream& out, const ParabolicFlag& flag) {
  out << "flag " << flag.name() << "\n";
  out << "dim " << flag.dimension() << "\n";
  out << "omega " << flag.omega().str() << "\n";
  auto hist = flag.level_histogram();
  out << "levels";
  for (const auto& [level, count] : hist) out << " " << level << ":" << count;
  out << "\n";
  out << "compact positive roots (" << flag.compact_positive().size() << "):";
  for (int k : flag.compact_positive()) {
    out << " ";
    const auto& c = flag.system().positive(k).coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  }
  out << "\n";
  out << "noncompact positive roots (" << flag.dimension() << "):\n";
  for (int a = 0; a < flag.dimension(); ++a) {
    const auto& c = flag.noncompact_root(a).coeffs;
    out << "  [" << a << "] ";
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << " level " << flag.level(a) << "\n";
  }
}

std::string describe_json(const ParabolicFlag& flag) {
  json compact = json::array(), noncompact = json::array();
  for (int k : flag.compact_positive()) compact.push_back(coeffs_json(flag.system().positive(k).coeffs));
  for (int a = 0; a < flag.dimension(); ++a)
    noncompact.push_back(json{{"coeffs", coeffs_json(flag.noncompact_root(a).coeffs)}, {"level", flag.level(a)}});
  return json{{"flag", descriptor_json_obj(FlagDescriptor::of(flag))},
              {"dim", flag.dimension()},
              {"omega", weight_json(flag.omega().coeffs)},
              {"compactPositive", compact},
              {"noncompact", noncompact}}
      .dump();
}

void write_submodules_text(std::ostream& out, const ParabolicFlag& flag,
                           const std::vector<SubmoduleRootSet>& submodules) {
  out << submodules.size() << " submodules of " << flag.name() << "\n";
  for (std::size_t i = 0; i < submodules.size(); ++i) {
    const auto& s = submodules[i];
    out << "  [" << i << "] size " << s.size() << " members";
    if (s.is_empty()) out << " -";
    for (int a : s.member_list()) out << " " << a;
    out << " weight " << s.weight().str();
    auto r = semicanonical_ratio(s);
    out << " ratio " << (r ? r->str() : "none");
    out << (is_nontrivial(s) ? " nontrivial" : " trivial");
    out << " frobenius=" << (is_frobenius(s) ? "yes" : "no");
    out << " contact=" << (is_contact(s) ? "yes" : "no");
    out << " firstOrder=" << (is_first_order_nondegenerate(flag, s) ? "yes" : "no");
    out << "\n";
  }
}

std::string submodules_json(const ParabolicFlag& flag, const std::vector<SubmoduleRootSet>& submodules) {
  json list = json::array();
  for (const auto& s : submodules) list.push_back(submodule_json_obj(s));
  return json{{"flag", descriptor_json_obj(FlagDescriptor::of(flag))},
              {"count", submodules.size()},
              {"submodules", list}}
      .dump();
}

std::string record_json(const ClassificationRecord& rec) {
  json subs = json::array();
  for (const auto& s : rec.submodules)
    subs.push_back(json{{"size", s.size},
                        {"weight", weight_json(s.weight)},
                        {"ratio", ratio_json(s.ratio)},
                        {"nontrivial", s.nontrivial},
                        {"frobenius", s.frobenius},
                        {"contact", s.contact},
                        {"firstOrderNondegenerate", s.firstOrderNondegenerate}});
  return json{{"schema", "flagvar/classify-record/v1"},
              {"flag", descriptor_json_obj(rec.flag)},
              {"dim", rec.dim},
              {"omega", weight_json(rec.omega)},
              {"status", rec.status},
              {"submoduleCount", rec.submoduleCount},
              {"submodules", subs}}
      .dump();
}

void write_records_jsonl(std::ostream& out, const std::vector<ClassificationRecord>& records) {
  for (const auto& rec : records) out << record_json(rec) << "\n";
}

void write_records_csv(std::ostream& out, const std::vector<ClassificationRecord>& records) {
  // Flag names contain commas ("A3{1,3}"), so that column is always quoted.
  auto quoted = [](const std::string& s) { return "\"" + s + "\""; };
  out << "flag,status,dim,submodule,size,weight,ratio,nontrivial,frobenius,contact,firstOrderNondegenerate\n";
  for (const auto& rec : records) {
    if (rec.submodules.empty()) {
      out << quoted(rec.flag.str()) << "," << rec.status << "," << rec.dim << ",,,,,,,,\n";
      continue;
    }
    for (std::size_t i = 0; i < rec.submodules.size(); ++i) {
      const auto& s = rec.submodules[i];
      std::string weight;
      for (std::size_t j = 0; j < s.weight.size(); ++j) weight += (j ? " " : "") + std::to_string(s.weight[j]);
      out << quoted(rec.flag.str()) << "," << rec.status << "," << rec.dim << "," << i << "," << s.size << ","
          << weight << "," << (s.ratio ? s.ratio->str() : "") << "," << s.nontrivial << "," << s.frobenius << ","
          << s.contact << "," << s.firstOrderNondegenerate << "\n";
    }
  }
}

void write_records_table(std::ostream& out, const std::vector<ClassificationRecord>& records) {
  out << std::left << std::setw(18) << "flag" << std::setw(6) << "dim" << std::setw(10) << "status" << std::setw(8)
      << "#sub" << "nontrivial semicanonical ratios\n";
  for (const auto& rec : records) {
    std::string ratios;
    for (const auto& s : rec.submodules)
      if (s.nontrivial && s.ratio) ratios += (ratios.empty() ? "" : " ") + s.ratio->str();
    out << std::left << std::setw(18) << rec.flag.str() << std::setw(6) << rec.dim << std::setw(10) << rec.status
        << std::setw(8) << rec.submoduleCount << (ratios.empty() ? "-" : ratios) << "\n";
  }
}

namespace {

json crossed_json(const std::set<int>& s) { return json(std::vector<int>(s.begin(), s.end())); }

}  // namespace

std::string drop_lattice_json(const std::vector<DropTarget>& targets) {
  json nodes = json::array();
  for (const auto& t : targets)
    nodes.push_back(json{{"crossed", crossed_json(t.target->crossed())},
                         {"dim", t.target->dimension()},
                         {"fiberCrossed", crossed_json(t.fiberCrossed)},
                         {"equivalence", crossed_json(t.equivalenceClass)}});
  json edges = json::array();
  for (std::size_t i = 0; i < targets.size(); ++i)
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const auto& a = targets[i].target->crossed();
      const auto& b = targets[j].target->crossed();
      if (a.size() == b.size() + 1 && std::includes(a.begin(), a.end(), b.begin(), b.end()))
        edges.push_back(json::array({i, j}));
    }
  return json{{"nodes", nodes}, {"edges", edges}}.dump();
}

void write_drop_lattice_text(std::ostream& out, const std::vector<DropTarget>& targets) {
  out << targets.size() << " candidate drop targets\n";
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const auto& t = targets[i];
    out << "  [" << i << "] crossed {";
    bool first = true;
    for (int node : t.target->crossed()) {
      out << (first ? "" : ",") << node;
      first = false;
    }
    out << "} dim " << t.target->dimension();
    if (t.target->is_point()) out << " (whole group: drop to a point)";
    if (!t.fiberCrossed.empty()) {
      out << " fiber {";
      first = true;
      for (int node : t.fiberCrossed) {
        out << (first ? "" : ",") << node;
        first = false;
      }
      out << "}";
    }
    if (t.equivalenceClass != t.target->crossed()) out << " (same model as crossed "
        << json(std::vector<int>(t.equivalenceClass.begin(), t.equivalenceClass.end())).dump()
        << " up to diagram symmetry)";
    out << "\n";
  }
}

void write_verify_text(std::ostream& out, const VerifyReport& report) {
  for (const auto& line : report.lines) {
    if (line.pass) continue;
    out << "FAIL " << line.example << " " << line.check << ": expected " << line.expected << ", got " << line.actual
        << "\n";
  }
  int failed = report.failures();
  if (failed == 0)
    out << "all " << report.lines.size() << " expectations passed\n";
  else
    out << failed << " of " << report.lines.size() << " expectations failed\n";
}

std::string verify_json(const VerifyReport& report) {
  json lines = json::array();
  for (const auto& line : report.lines)
    lines.push_back(json{{"example", line.example},
                        {"check", line.check},
                        {"origin", line.origin},
                        {"expected", line.expected},
                        {"actual", line.actual},
                        {"pass", line.pass}});
  return json{{"expectations", report.lines.size()}, {"failures", report.failures()}, {"lines", lines}}.dump();
}

}  // namespace flagvar::io
