#pragma once

// The family (2am+1)^x + (2m)^y = (2am-1)^z and generic A^x + B^y = C^z checks.

#include <cstdint>
#include <optional>
#include <string>

#include "expdioph/arith.hpp"

namespace expdioph {

/// One member (a, m) of the family. a >= 2, m >= 1.
struct Instance {
  std::uint64_t a;
  std::uint64_t m;

  Instance(std::uint64_t a_, std::uint64_t m_);
};

struct Terms {
  BigInt A;  // 2am + 1
  BigInt B;  // 2m
  BigInt C;  // 2am - 1
};

struct ExponentTriple {
  std::uint64_t x;
  std::uint64_t y;
  std::uint64_t z;

  ExponentTriple(std::uint64_t x_, std::uint64_t y_, std::uint64_t z_);
};

/// A tuple (a, m, x, y, z) that has passed an exact check. The only way to
/// obtain one is Solution::verify.
class Solution {
 public:
  static std::optional<Solution> verify(const Instance& inst, const ExponentTriple& e);

  std::uint64_t a() const { return a_; }
  std::uint64_t m() const { return m_; }
  std::uint64_t x() const { return x_; }
  std::uint64_t y() const { return y_; }
  std::uint64_t z() const { return z_; }
  bool verified() const { return true; }

  auto operator<=>(const Solution&) const = default;

 private:
  Solution(std::uint64_t a, std::uint64_t m, std::uint64_t x, std::uint64_t y, std::uint64_t z)
      : a_(a), m_(m), x_(x), y_(y), z_(z) {}

  std::uint64_t a_, m_, x_, y_, z_;
};

/// Bases of A^x + B^y = C^z. Construction rejects bases <= 1 and
/// triples that are not pairwise coprime.
struct PowerSumEquation {
  BigInt A;
  BigInt B;
  BigInt C;

  PowerSumEquation(BigInt A_, BigInt B_, BigInt C_);
};

Terms terms(const Instance& inst);

bool check_family(const Instance& inst, const ExponentTriple& e);
bool check_generic(const PowerSumEquation& eq, const ExponentTriple& e);

struct PQSplit {
  BigInt P;  // C^Z + A^X
  BigInt Q;  // C^Z - A^X
};

/// Split for even exponents x = 2X, z = 2Z. Throws std::domain_error when
/// C^Z <= A^X (Q would not be positive).
PQSplit pq_split(const Instance& inst, std::uint64_t X, std::uint64_t Z);

}  // namespace expdioph
