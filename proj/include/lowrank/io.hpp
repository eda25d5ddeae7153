#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lowrank/certify.hpp"
#include "lowrank/projections.hpp"
#include "lowrank/search.hpp"

namespace lowrank {

using Json = nlohmann::ordered_json;

// Malformed documents throw ParseError naming the offending field or entry.

Json ensemble_to_json(const MeasurementEnsemble& e);
MeasurementEnsemble ensemble_from_json(const Json& j);

struct SubspaceFile {
  std::size_t n = 0;
  std::vector<Subspace> subspaces;
};

Json subspaces_to_json(const SubspaceFile& f);
SubspaceFile subspaces_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json search_report_to_json(const SearchReport& report);

/// Parses JSON text; syntax errors become ParseError.
Json parse_json(const std::string& text);

/// Throw IoError when the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Two-space indented dump with a trailing newline.
std::string to_text(const Json& j);

/// Bundled fixture directory (overridable with the LOWRANK_DATA_DIR
/// environment variable).
std::filesystem::path data_dir();

}  // namespace lowrank
