#include "expdioph/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace expdioph {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

BigInt parse_bigint(const std::string& decimal) {
  BigInt n;
  if (decimal.empty() || n.set_str(decimal, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + decimal + "'");
  }
  return n;
}

std::string to_decimal(const BigInt& n) { return n.get_str(10); }

BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt r;
  if (exp <= static_cast<std::uint64_t>(~0UL)) {
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
  }
  r = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1U) r *= b;
    b *= b;
    exp >>= 1U;
  }
  return r;
}

unsigned vp(std::uint64_t p, const BigInt& n) {
  if (p < 2) throw std::invalid_argument("vp: p must be >= 2");
  if (n == 0) throw std::invalid_argument("vp: n must be nonzero");
  if (p == 2) return static_cast<unsigned>(mpz_scan1(n.get_mpz_t(), 0));
  BigInt q = abs(n);
  unsigned e = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(p)) != 0) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(p));
    ++e;
  }
  return e;
}

unsigned vp(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw std::invalid_argument("vp: p must be >= 2");
  if (n == 0) throw std::invalid_argument("vp: n must be nonzero");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

BigInt modpow(const BigInt& base, std::uint64_t exp, const BigInt& modulus) {
  if (modulus < 2) throw std::invalid_argument("modpow: modulus must be >= 2");
  BigInt r;
  BigInt e(std::to_string(exp));
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::uint32_t modpow_u32(std::uint64_t base, std::uint64_t exp, std::uint32_t modulus) {
  std::uint64_t b = base % modulus;
  std::uint64_t r = 1 % modulus;
  while (exp != 0) {
    if (exp & 1U) r = r * b % modulus;
    b = b * b % modulus;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(r);
}

double log_big(const BigInt& n) {
  signed long e = 0;
  const double d = mpz_get_d_2exp(&e, n.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

Ordering cmp_powersum_exact(const BigInt& A, std::uint64_t x, const BigInt& B, std::uint64_t y,
                            const BigInt& C, std::uint64_t z) {
  const BigInt lhs = ipow(A, x) + ipow(B, y);
  const BigInt rhs = ipow(C, z);
  const int c = cmp(lhs, rhs);
  return c < 0 ? Ordering::Less : (c == 0 ? Ordering::Equal : Ordering::Greater);
}

Ordering cmp_powersum(const BigInt& A, std::uint64_t x, const BigInt& B, std::uint64_t y,
                      const BigInt& C, std::uint64_t z) {
  const double lx = static_cast<double>(x) * log_big(A);
  const double ly = static_cast<double>(y) * log_big(B);
  const double rz = static_cast<double>(z) * log_big(C);
  const double hi = std::max(lx, ly);
  const double lhs = hi + std::log1p(std::exp(std::min(lx, ly) - hi));
  const double diff = lhs - rz;
  // Relative error of the estimate is ~1e-15; the margin leaves nine orders of slack.
  const double margin = 1e-6 * std::max({1.0, std::fabs(lhs), std::fabs(rz)});
  if (diff > margin) return Ordering::Greater;
  if (diff < -margin) return Ordering::Less;
  return cmp_powersum_exact(A, x, B, y, C, z);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace expdioph
