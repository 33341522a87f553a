#pragma once

// Necessary conditions every solution of the family must satisfy. Each
// filter answers Pass or Exclude; Exclude means the condition provably
// fails, so the candidate cannot be a solution.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace expdioph {

enum class Outcome { Pass, Exclude };

struct FilterVerdict {
  Outcome outcome;
  std::string filter;  // short identifier, e.g. "z_parity"
  std::string reason;  // condition that was checked

  bool passed() const { return outcome == Outcome::Pass; }
};

/// Predicted v_p(a) from the valuation identity
///   v_p(a) = (y-1) v_p(2m) - v_p(x+z),
/// valid when v_p(x+z) < v_p(a) + v_p(2m). Returns nullopt when that
/// applicability condition fails. Requires m > 1 and p | 2m (throws otherwise).
std::optional<long long> imp_valuation(std::uint64_t a, std::uint64_t m, std::uint64_t y,
                                       std::uint64_t x, std::uint64_t z, std::uint64_t p);

/// Verdict form of imp_valuation: Exclude when the identity applies and
/// the prediction is negative or differs from v_p(a).
FilterVerdict imp_filter(std::uint64_t a, std::uint64_t m, std::uint64_t y, std::uint64_t x,
                         std::uint64_t z, std::uint64_t p);

/// The only y compatible with odd x: v2(a)/(v2(m)+1) + 1 when the division
/// is exact, nullopt otherwise. Throws for m <= 1.
std::optional<std::uint64_t> lemma_y(std::uint64_t a, std::uint64_t m);

/// 2am (x+z)^y >= (2m)^y, compared exactly.
FilterVerdict lemma_ineq(std::uint64_t a, std::uint64_t m, std::uint64_t x, std::uint64_t y,
                         std::uint64_t z);

/// m > 1 forces (-1)^z = 1 mod 2m, so odd z is excluded.
FilterVerdict z_parity_filter(std::uint64_t m, std::uint64_t z);

/// a | (2m)^(y-1).
FilterVerdict divisibility_filter(std::uint64_t a, std::uint64_t m, std::uint64_t y);

/// y = 1 with m > 1 forces a = 1 modulo 2am.
FilterVerdict y1_m_filter(std::uint64_t a, std::uint64_t m, std::uint64_t y);

/// m = 1, x odd, y > 1: odd a makes the two sides differ mod 4.
FilterVerdict mod4_filter_m1(std::uint64_t a, std::uint64_t x, std::uint64_t z);

/// Runs every filter whose hypotheses hold for (a, m, x, y, z), cheapest
/// first, and stops at the first Exclude. The last verdict decides.
std::vector<FilterVerdict> run_pipeline(std::uint64_t a, std::uint64_t m, std::uint64_t x,
                                        std::uint64_t y, std::uint64_t z);

bool pipeline_passes(std::uint64_t a, std::uint64_t m, std::uint64_t x, std::uint64_t y,
                     std::uint64_t z);

// Identity scans for the closed-form equations left over in the small case.

enum class IdentityId {
  Eq21,  // (2m)^(y-1) = a (2am - 3)
  Eq22,  // a (4096a^3 - 1024a^2 + 96a - 5) = 2^(4y-4)
  Eq23,  // a (4096a^3 - 1280a^2 + 48a - 7) = 2^(4y-4)
};

IdentityId parse_identity(const std::string& name);
const char* to_string(IdentityId id);

struct Range {
  std::uint64_t lo;
  std::uint64_t hi;  // inclusive; lo > hi is empty
};

struct IdentityHit {
  std::uint64_t a;
  std::uint64_t m;  // 8 for Eq22 and Eq23
  std::uint64_t y;

  auto operator<=>(const IdentityHit&) const = default;
};

/// Every (a, m, y) in the ranges satisfying the identity. The m range is
/// ignored for Eq22/Eq23.
std::vector<IdentityHit> identity_scan(IdentityId id, Range a, Range m, Range y);

}  // namespace expdioph
