#pragma once

// JSON superconnection specs:
//
//   { "n_vars": 2, "p": 1, "q": 0,
//     "a_prime": [ [ [ {"coeff": "x1", "dx": [2]} ] ] ] }
//
// a_prime is a (p+q) x (p+q) matrix; each entry is a list of terms
// coeff * dx_{i1}^...^dx_{ik} with strictly increasing 1-based indices.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "superchern/superconnection.hpp"

namespace superchern {

struct FormTerm {
  std::string coeff;
  std::vector<std::size_t> dx;
};

struct SpecFile {
  std::size_t n_vars = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::vector<std::vector<FormTerm>>> a_prime;
};

/// Structural parse; malformed JSON or fields raise ParseError.
SpecFile parse_spec(std::string_view json_text);

/// Validates and builds A'. Wrong matrix size or out-of-range dx indices raise
/// DimensionError; a non-odd A' raises InvariantError ("A' must be odd").
Superconnection build_superconnection(const SpecFile& spec);

/// Reads, parses and builds; an unreadable file raises UsageError.
Superconnection load_spec(const std::filesystem::path& path);

/// Spec whose terms are the canonical monomial pieces of each entry.
SpecFile to_spec(const MatForm& a_prime);

nlohmann::json to_json(const SpecFile& spec);

}  // namespace superchern
