#pragma once

#include <json.hpp>

#include "uspecht/specht.hpp"

namespace uspecht {

using nlohmann::json;

/// Embedded in every output file: tool version, the exact job configuration
/// and the seed, so identical configs reproduce identical bytes.
struct Provenance {
  std::string command;
  json config;
  uint64_t seed = 0;
  json to_json() const;
};

inline constexpr const char* kToolName = "uspecht";
inline constexpr const char* kToolVersion = "0.1.0";

json cyc_to_json(const Cyc& c);
Cyc cyc_from_json(const json& j, int p);

json matrix_to_json(const NormalMatrix& L);
NormalMatrix matrix_from_json(const json& j, int n);

json module_vector_to_json(const ModuleVector& v, const Gf& gf);

json field_to_json(const Gf& gf);  // carried once per file
json tableau_to_json(const Tableau& t);
json shifted_tableau_to_json(const ShiftedTableau& st);
json pattern_to_json(const Pattern& p);
json filled_pattern_to_json(const FilledPattern& pf);

json specht_vector_to_json(const SpechtVector& sv, const Gf& gf);

std::string csv_escape(const std::string& s);

/// Writes text to path atomically (temp file + rename) so failed jobs leave
/// no partial outputs.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace uspecht
