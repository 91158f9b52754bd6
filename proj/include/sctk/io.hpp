#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "sctk/controllability.hpp"

namespace sctk {

/// On-disk system description:
///
///   {
///     "name": "pendulum",
///     "parameters": ["z1", "z2", "g"],
///     "indeterminate": "s",            // optional, default "s"
///     "A": [["0", "1"], ["z1/z2", "0"]],
///     "B": [["0"], ["1"]]
///   }
///
/// Entries are strings in the expression grammar of parseExpr. "B" may hold
/// empty rows for a system without inputs.
struct SystemFile {
  std::string name;
  std::vector<std::string> parameters;
  std::string indeterminate = "s";
  std::vector<std::vector<std::string>> a;
  std::vector<std::vector<std::string>> b;
};

// Throws UsageError for structural problems in the document.
SystemFile systemFileFromJson(const nlohmann::json& doc);
nlohmann::json toJson(const SystemFile& file);
SystemFile readSystemFile(const std::filesystem::path& path);
void writeSystemFile(const SystemFile& file, const std::filesystem::path& path);

// Parses every entry over `space` (which must declare the file's parameters;
// defaults to exactly those). Parse errors carry "<origin>#A[i][j]" sources.
SystemDef toSystem(const SystemFile& file, const std::string& origin, SpacePtr space = nullptr);
SystemFile toSystemFile(const SystemDef& sys);

/// Certificate document:
///
///   {
///     "system": "pendulum",
///     "n": 6,
///     "blocks": [
///       {"rows": [1, 2], "base": ["a4", "a5"], "witness": "1"},
///       ...
///     ]
///   }
///
/// Rows are 1-based. "witness" is optional on input; when present it must
/// equal the recomputed determinant.
nlohmann::json certificateToJson(const Certificate& cert, const SystemDef& sys);
CertificateClaim claimFromJson(const nlohmann::json& doc, const SystemDef& sys);

nlohmann::json verdictToJson(const Verdict& v, const SystemDef& sys);
nlohmann::json certificateCheckToJson(const CertificateCheck& check);

}  // namespace sctk
