#pragma once

// Exact integer primitives shared by every other part of the library.
// BigInt is GMP's mpz_class; exponents are machine words.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace expdioph {

using BigInt = mpz_class;

enum class Ordering { Less, Equal, Greater };

const char* to_string(Ordering o);

inline BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

BigInt parse_bigint(const std::string& decimal);
std::string to_decimal(const BigInt& n);

/// base^exp, exact. exp = 0 gives 1.
BigInt ipow(const BigInt& base, std::uint64_t exp);

/// Largest e with p^e | n. Throws std::invalid_argument for n = 0 or p < 2.
/// p is assumed prime.
unsigned vp(std::uint64_t p, const BigInt& n);
unsigned vp(std::uint64_t p, std::uint64_t n);

/// base^exp mod modulus, result in [0, modulus). Throws for modulus < 2.
BigInt modpow(const BigInt& base, std::uint64_t exp, const BigInt& modulus);

/// Word-sized modpow for sieve loops; modulus must be in [2, 2^32).
std::uint32_t modpow_u32(std::uint64_t base, std::uint64_t exp, std::uint32_t modulus);

/// Compares A^x + B^y against C^z. A log-size estimate decides clear cases;
/// anything within the safety margin is settled by exact expansion, so the
/// result always matches exact arithmetic.
Ordering cmp_powersum(const BigInt& A, std::uint64_t x, const BigInt& B, std::uint64_t y,
                      const BigInt& C, std::uint64_t z);

/// Same comparison by full expansion only.
Ordering cmp_powersum_exact(const BigInt& A, std::uint64_t x, const BigInt& B, std::uint64_t y,
                            const BigInt& C, std::uint64_t z);

/// Natural log of a positive BigInt, valid for values far beyond double range.
double log_big(const BigInt& n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Distinct prime factors by trial division, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace expdioph
