#pragma once

// Heights, Laurent's lower bound for linear forms in two logarithms, and
// the chain of estimates that turns it into a finite search region.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "expdioph/interval.hpp"

namespace expdioph {

/// Positive or negative rational in lowest terms with den > 0.
struct Rational {
  std::int64_t num;
  std::int64_t den;

  Rational(std::int64_t n = 0, std::int64_t d = 1);

  Interval to_interval() const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);

/// Absolute logarithmic height of p/q > 0: log max(p, q). Throws for r <= 0.
double log_height(const Rational& r);

/// True iff m^i != n^j for all positive i, j.
bool mult_indep(std::uint64_t m, std::uint64_t n);
bool mult_indep(const Rational& m, const Rational& n);

/// Lambda = beta2 log alpha2 - beta1 log alpha1 with rational alphas > 1
/// that are multiplicatively independent (checked on construction).
class LinearForm {
 public:
  LinearForm(Rational alpha1, Rational alpha2, std::uint64_t beta1, std::uint64_t beta2);

  const Rational& alpha1() const { return alpha1_; }
  const Rational& alpha2() const { return alpha2_; }
  std::uint64_t beta1() const { return beta1_; }
  std::uint64_t beta2() const { return beta2_; }

  /// beta1 / h(alpha2) + beta2 / h(alpha1)
  double beta_prime() const;

 private:
  Rational alpha1_, alpha2_;
  std::uint64_t beta1_, beta2_;
};

/// Laurent's two-logarithm lower bound for log|Lambda|:
///   -25.2 h(a1) h(a2) max{log b' + 0.38, 10}^2.
double laurent_lower(const LinearForm& lf);

/// Upper bound -f x log A on log Lambda for Lambda = z log C - x log A,
/// valid when C^z > A^x and (2m)^y < A^(x(1-f)). Both conditions are
/// checked in exact integer arithmetic; violation throws std::domain_error.
/// The default f = 1/2 is the basic estimate; 1952/1953 is the refined one.
double lambda_upper(std::uint64_t a, std::uint64_t m, std::uint64_t x, std::uint64_t y,
                    std::uint64_t z, Rational fraction = Rational(1, 2));

/// Real root of s = c' max{log(2s+1)+0.38, 10}^2 with c' = c / ratio, plus
/// the least integer S past which s < c' max{...}^2 fails.
struct SBound {
  std::int64_t s_max;
  Interval root;
  std::optional<Rational> exact_root;  // set when the max saturates at 10
  bool saturated;
  int iterations;
};

SBound solve_s_bound(const Rational& c, const Rational& ratio = Rational(1));

struct AMax {
  std::int64_t generic;  // 2 s_max + 2
  std::int64_t refined;  // from C < 2s with C odd, using the real root
};

/// Strict bounds A < value, from x > (C log C / 2)(z - x) with z - x >= 1.
AMax derive_A_max(std::int64_t s_max);
AMax derive_A_max(const SBound& s);

struct YCaps {
  std::uint64_t even_m;
  std::uint64_t odd_m;
};

/// max of floor(v2(a)/v2(2m)) + 1 over a, m >= 2 with 2am+1 < A_max, split
/// by the parity of m. A parity class with no admissible pair reports 1.
YCaps derive_y_caps(std::uint64_t A_max);

struct XWindow {
  std::uint64_t x_min;  // am, rounded up to odd
  std::uint64_t x_max;  // max(linear * y, largest integer below log_coeff * log C)
};

XWindow x_window(std::uint64_t C, std::uint64_t y, std::uint64_t a, std::uint64_t m,
                 std::uint64_t log_coeff = 2522, std::uint64_t linear_coeff = 1300);

/// Largest g with g < 2x / (C log C); 0 means no z > x is possible.
std::uint64_t zx_gap_max(std::uint64_t C, std::uint64_t x);

/// Same with log C supplied as a precomputed interval.
std::uint64_t zx_gap_max(std::uint64_t C, Interval log_c, std::uint64_t x);

struct SmallCase {
  std::uint64_t m;
  std::uint64_t z;
  std::uint64_t x;

  auto operator<=>(const SmallCase&) const = default;
};

/// Survivors (m, z, x) of the case A^x <= (2m)^y, m > 1, x odd:
/// 4 <= z <= floor(1.5 log 2m), y >= z + 1, and
/// z < log(2m) / (log m - log(1.5^(1/y) floor(1.5 log 2m))).
/// m is enumerated up to m_limit; beyond it the bound is below 4 (checked).
std::set<SmallCase> small_case_survivors(std::uint64_t m_limit = 100000);

struct BoundEntry {
  std::string name;
  std::variant<std::int64_t, std::string> value;
  std::string anchor;
  std::string derivation;
};

struct BoundSet {
  std::int64_t s_max_coarse;
  std::int64_t A_max_coarse;
  std::uint64_t y_cap_even_m;
  std::uint64_t y_cap_odd_m;
  std::int64_t s_max_refined;
  std::int64_t A_max_refined;
  std::uint64_t y_cap_even_m_refined;
  std::uint64_t y_cap_odd_m_refined;
  std::uint64_t y_cap_final;
  std::uint64_t x_rule_log_coeff;     // x < 2522 log(A - 2)
  std::uint64_t x_rule_linear_coeff;  // or x <= 1300 y
  std::uint64_t gap_rule_coeff;       // (z - x) < 2x / (C log C)
  std::uint64_t x_contradiction_floor;  // x >= 21493 if A >= A_max_refined
  std::string x_floor_rule;           // x >= am
  std::vector<BoundEntry> entries;    // provenance, in derivation order
};

inline constexpr const char* kBoundsVersion = "expdioph-bounds-1";

/// Runs the estimate chain and checks its internal consistency. Throws
/// std::runtime_error naming the failing step. The result is cached.
const BoundSet& build_bound_set();

BoundSet build_bound_set_uncached();

}  // namespace expdioph
