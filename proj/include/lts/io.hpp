#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lts/triple_system.hpp"

namespace lts {

/// Reads a system in the JSON input format:
///
///   {
///     "group": {"moduli": [0, 2]},             // 0 = Z factor, m >= 2 = Z/m
///     "field": {"kind": "rational"},           // or {"kind": "prime", "p": 5}
///     "dimension": 3,
///     "degrees": [[1, 0], [0, 0], [-1, 1]],    // canonical coordinates per basis vector
///     "triple": [
///       {"args": [0, 2, 2], "out": [{"idx": 2, "val": "-2"}]}
///     ]
///   }
///
/// Omitted triples are zero. Scalars are strings "a" or "a/b" with b > 0.
/// Throws ParseError carrying the 1-based line and column of the offending
/// token for syntax errors and for invalid values alike.
GradedLTS parse_system(std::string_view text);
GradedLTS load_system(const std::filesystem::path& path);

/// Canonical text in the same format, one triple record per line, records
/// sorted by args and outputs by index.
std::string serialize_system(const GradedLTS& e);
void save_system(const std::filesystem::path& path, const GradedLTS& e);

std::string read_file(const std::filesystem::path& path);
/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace lts
