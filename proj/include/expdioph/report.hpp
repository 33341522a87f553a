#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace expdioph {

enum class EquationKind {
  Family,     // (2am+1)^x + (2m)^y = (2am-1)^z, tuples (a, m, x, y, z)
  Corollary,  // b^x + 2^y = (b-2)^z, tuples (b, x, y, z)
  Aux,        // auxiliary verifier; equation text names the id
};

struct SearchReport {
  EquationKind kind = EquationKind::Family;
  std::string equation;
  nlohmann::json region = nlohmann::json::object();
  std::string bounds_version;
  std::vector<std::vector<std::uint64_t>> solutions;
  std::uint64_t units_done = 0;
  std::uint64_t units_total = 0;
  std::int64_t wall_ms = 0;
};

const char* family_equation_text();
const char* corollary_equation_text();

/// Re-verifies every solution exactly (throws std::logic_error on failure)
/// and returns the report object. Keys are sorted. wall_ms is the only
/// run-dependent field and is dropped when canonical is true.
nlohmann::json report_to_json(const SearchReport& r, bool canonical = false);

struct BoundSet;

/// {"bounds_version", "constants": [{name, value, anchor, derivation}...],
///  "values": {name: value}}
nlohmann::json bounds_to_json(const BoundSet& b);

/// Header row plus one row per solution.
std::string report_to_csv(const SearchReport& r);

}  // namespace expdioph
