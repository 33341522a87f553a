#include "expdioph/equation.hpp"

#include <stdexcept>
#include <string>

namespace expdioph {

Instance::Instance(std::uint64_t a_, std::uint64_t m_) : a(a_), m(m_) {
  if (a < 2) throw std::invalid_argument("instance requires a >= 2, got " + std::to_string(a));
  if (m < 1) throw std::invalid_argument("instance requires m >= 1");
}

ExponentTriple::ExponentTriple(std::uint64_t x_, std::uint64_t y_, std::uint64_t z_)
    : x(x_), y(y_), z(z_) {
  if (x < 1 || y < 1 || z < 1) throw std::invalid_argument("exponents must be positive");
}

PowerSumEquation::PowerSumEquation(BigInt A_, BigInt B_, BigInt C_)
    : A(std::move(A_)), B(std::move(B_)), C(std::move(C_)) {
  if (A <= 1 || B <= 1 || C <= 1) throw std::invalid_argument("bases must be > 1");
  if (gcd(A, B) != 1 || gcd(A, C) != 1 || gcd(B, C) != 1) {
    throw std::invalid_argument("bases " + to_decimal(A) + ", " + to_decimal(B) + ", " +
                                to_decimal(C) + " are not pairwise coprime");
  }
}

Terms terms(const Instance& inst) {
  const BigInt am = big(inst.a) * big(inst.m);
  return Terms{2 * am + 1, 2 * big(inst.m), 2 * am - 1};
}

bool check_family(const Instance& inst, const ExponentTriple& e) {
  const Terms t = terms(inst);
  // C = 1 only for a*m = 1, which an Instance cannot hold.
  return cmp_powersum(t.A, e.x, t.B, e.y, t.C, e.z) == Ordering::Equal;
}

bool check_generic(const PowerSumEquation& eq, const ExponentTriple& e) {
  return cmp_powersum(eq.A, e.x, eq.B, e.y, eq.C, e.z) == Ordering::Equal;
}

std::optional<Solution> Solution::verify(const Instance& inst, const ExponentTriple& e) {
  const Terms t = terms(inst);
  if (cmp_powersum_exact(t.A, e.x, t.B, e.y, t.C, e.z) != Ordering::Equal) return std::nullopt;
  return Solution(inst.a, inst.m, e.x, e.y, e.z);
}

PQSplit pq_split(const Instance& inst, std::uint64_t X, std::uint64_t Z) {
  if (X < 1 || Z < 1) throw std::invalid_argument("pq_split: X and Z must be positive");
  const Terms t = terms(inst);
  const BigInt ax = ipow(t.A, X);
  const BigInt cz = ipow(t.C, Z);
  if (cz <= ax) throw std::domain_error("pq_split: negative Q (C^Z <= A^X)");
  return PQSplit{cz + ax, cz - ax};
}

}  // namespace expdioph
