#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flagvar/catalog.hpp"
#include "flagvar/drops.hpp"

namespace flagvar::io {

/// Parse {"factors":[{"series":"B","rank":3}],"crossed":[[3]]}.
FlagDescriptor parse_flag_descriptor(const std::string& json);
std::string flag_descriptor_json(const FlagDescriptor& d);

/// {"members":[...],"weight":[...],"ratio":"p/q"|null,
///  "nontrivial":b,"frobenius":b,"contact":b}
std::string submodule_json(const SubmoduleRootSet& s);

void write_describe_text(std::ostream& out, const ParabolicFlag& flag);
std::string describe_json(const ParabolicFlag& flag);

void write_submodules_text(std::ostream& out, const ParabolicFlag& flag,
                           const std::vector<SubmoduleRootSet>& submodules);
std::string submodules_json(const ParabolicFlag& flag, const std::vector<SubmoduleRootSet>& submodules);

/// One schema-versioned JSON object per record, one record per line.
std::string record_json(const ClassificationRecord& rec);
void write_records_jsonl(std::ostream& out, const std::vector<ClassificationRecord>& records);
void write_records_csv(std::ostream& out, const std::vector<ClassificationRecord>& records);
void write_records_table(std::ostream& out, const std::vector<ClassificationRecord>& records);

/// Drop lattice as a DAG: nodes are crossed sets, edges single-node
/// uncrossings.
std::string drop_lattice_json(const std::vector<DropTarget>& targets);
void write_drop_lattice_text(std::ostream& out, const std::vector<DropTarget>& targets);

void write_verify_text(std::ostream& out, const VerifyReport& report);
std::string verify_json(const VerifyReport& report);

}  // namespace flagvar::io
