#pragma once

// Desk-scale brute-force checks of the cited results the main argument
// relies on. Each id enumerates its equation over a finite box and compares
// the solutions with the published list.

#include <cstdint>
#include <string>
#include <vector>

#include "expdioph/report.hpp"

namespace expdioph {

enum class AuxId {
  Na53,        // 5^x + 2 = 3^z                         tuples (x, z)
  Pillai35,    // 3^Z - 5^X = 2                         tuples (X, Z)
  Le,          // U^2 + 2^k = V^l, gcd(U,V)=1, l >= 3   tuples (U, V, k, l)
  Terai4,      // x^2 + y^k = z^4, gcd(x,y)=1, k > 3    tuples (x, y, z, k)
  Fhyz,        // (n+2)^x + (n+1)^y = n^z               tuples (n, x, y, z)
  TrivialEq1,  // (tB-1)^x + B^y = (tB+1)^z, B even     tuples (B, t, x, y, z)
};

AuxId parse_aux_id(const std::string& name);
const char* to_string(AuxId id);
const std::vector<AuxId>& all_aux_ids();

/// Box limits; the meaning of each field depends on the id:
///   na53, pillai35: exp_max bounds both exponents.
///   le:       base_max bounds U and V; exp_max bounds k; l in [exp2_min, exp2_max].
///   terai4:   base_max bounds z; k in [exp2_min, exp2_max].
///   fhyz:     base_max bounds n; exp_max bounds x, y, z.
///   trivial-eq1: base_max bounds even B; base2_max bounds t; exp_max bounds x, y, z.
struct AuxBox {
  std::uint64_t base_max = 0;
  std::uint64_t base2_max = 0;
  std::uint64_t exp_max = 0;
  std::uint64_t exp2_min = 0;
  std::uint64_t exp2_max = 0;
};

AuxBox default_aux_box(AuxId id);

using AuxTuple = std::vector<std::uint64_t>;

struct AuxResult {
  AuxId id;
  std::vector<AuxTuple> solutions;  // sorted
  std::vector<AuxTuple> expected;   // published list (empty for trivial-eq1)
  std::vector<std::string> classes;  // trivial-eq1: family of each solution
  std::vector<AuxTuple> unclassified;
  bool pass = false;
};

AuxResult verify_aux(AuxId id, const AuxBox& box);

/// Exact check of one tuple against the id's equation.
bool aux_tuple_holds(AuxId id, const AuxTuple& t);

/// Which trivial family (tB-1)^x + B^y = (tB+1)^z belongs to, or "" if none.
std::string classify_trivial(std::uint64_t B, std::uint64_t t, std::uint64_t x, std::uint64_t y,
                             std::uint64_t z);

SearchReport aux_report(const AuxResult& r, const AuxBox& box);

}  // namespace expdioph
