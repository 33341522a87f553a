#pragma once

// Exhaustive searches: brute-force oracle, the bounded region search for
// m > 1, x odd, z even, and the companion equation b^x + 2^y = (b-2)^z.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "expdioph/checkpoint.hpp"
#include "expdioph/equation.hpp"
#include "expdioph/filters.hpp"
#include "expdioph/interval.hpp"
#include "expdioph/linform.hpp"
#include "expdioph/report.hpp"

namespace expdioph {

struct SearchBox {
  Range a;
  Range m;
  Range x;
  Range y;
  Range z;

  /// Throws std::invalid_argument unless lower bounds are >= 1 and a.lo >= 2.
  void validate() const;
};

/// Every (a, m, x, y, z) in the box with check_family true, using only
/// cmp_powersum. Sorted.
std::vector<Solution> oracle_search(const SearchBox& box);

struct WorkUnit {
  std::uint64_t a;
  std::uint64_t m;
  std::uint64_t y;
  XWindow window;
};

/// Builds a schedulable unit; throws std::invalid_argument when m < 2,
/// 2am+1 >= A_max_refined, y is outside [2, y_cap_final], a does not divide
/// (2m)^(y-1), or lemma_y(a, m) != y.
WorkUnit make_work_unit(const BoundSet& bounds, std::uint64_t a, std::uint64_t m, std::uint64_t y);

/// All admissible units for y, ordered by (a*m, a).
std::vector<WorkUnit> partition_work(const BoundSet& bounds, std::uint64_t y);

/// Residue test of A^x + B^y = C^z modulo the first 25 primes not dividing
/// 2am(4a^2m^2 - 1). Holds precomputed B^y residues for one (a, m, y).
class ModularSieve {
 public:
  static constexpr std::size_t kPrimeCount = 25;

  ModularSieve(std::uint64_t a, std::uint64_t m, std::uint64_t y);

  const std::array<std::uint32_t, kPrimeCount>& primes() const { return primes_; }

  /// First prime modulo which the equation fails, or 0 if every prime passes.
  std::uint32_t rejecting_prime(std::uint64_t x, std::uint64_t z) const;

  /// Variant taking A^x residues that the caller maintains incrementally.
  std::uint32_t rejecting_prime(const std::array<std::uint32_t, kPrimeCount>& ax_res,
                                std::uint64_t z) const;

  std::uint32_t A_mod(std::size_t i) const { return a_res_[i]; }

 private:
  std::uint64_t A_, C_;
  std::array<std::uint32_t, kPrimeCount> primes_{};
  std::array<std::uint32_t, kPrimeCount> a_res_{};
  std::array<std::uint32_t, kPrimeCount> by_res_{};
};

struct UnitStats {
  std::uint64_t x_values = 0;     // odd x with a nonempty z window
  std::uint64_t candidates = 0;   // (x, z) pairs reaching the sieve
  std::uint64_t sieve_rejected = 0;
  std::uint64_t exact_checks = 0;
};

struct UnitResult {
  std::vector<FamilyTuple> found;
  UnitStats stats;
};

/// Scans odd x in the unit's window and even z in
/// [max(x+1, z0-2), min(x+gap, z0+2)], z0 = round(x log A / log C).
UnitResult scan_unit(const WorkUnit& unit, const BoundSet& bounds);

/// Sieve + exact check over explicit ranges, without the region bounds.
/// Only odd x and even z are visited.
UnitResult scan_box(std::uint64_t a, std::uint64_t m, std::uint64_t y, Range x, Range z);

/// Region search machinery on an arbitrary box: (a, m, y) pass the unit
/// filters (m >= 2, a | (2m)^(y-1), lemma_y = y), then scan_box.
std::vector<Solution> theorem_search_box(const SearchBox& box);

struct SearchOptions {
  unsigned threads = 1;
  std::optional<std::string> checkpoint;
  /// Stop after this many newly completed units (simulated interruption).
  std::optional<std::size_t> max_new_units;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

SearchReport theorem_search(const BoundSet& bounds, std::uint64_t y, const SearchOptions& opts = {});

/// b^x + 2^y = (b-2)^z over odd b in [3, b_max], exponents in [1, exp_cap].
/// Tuples are (b, x, y, z). Throws for even b_max or b_max < 3.
std::vector<std::array<std::uint64_t, 4>> corollary_search(std::uint64_t b_max, std::uint64_t exp_cap);

SearchReport oracle_report(const SearchBox& box);
SearchReport corollary_report(std::uint64_t b_max, std::uint64_t exp_cap);

}  // namespace expdioph
