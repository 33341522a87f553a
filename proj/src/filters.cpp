#include "expdioph/filters.hpp"

#include <stdexcept>

#include "expdioph/arith.hpp"

namespace expdioph {

namespace {

FilterVerdict verdict(bool pass, const char* filter, std::string reason) {
  return FilterVerdict{pass ? Outcome::Pass : Outcome::Exclude, filter, std::move(reason)};
}

}  // namespace

std::optional<long long> imp_valuation(std::uint64_t a, std::uint64_t m, std::uint64_t y,
                                       std::uint64_t x, std::uint64_t z, std::uint64_t p) {
  if (m <= 1) throw std::invalid_argument("imp_valuation requires m > 1");
  if (p < 2 || (2 * m) % p != 0) throw std::invalid_argument("imp_valuation requires p | 2m");
  const long long va = vp(p, a);
  const long long v2m = vp(p, 2 * m);
  const long long vxz = vp(p, x + z);
  if (vxz >= va + v2m) return std::nullopt;
  return static_cast<long long>(y - 1) * v2m - vxz;
}

FilterVerdict imp_filter(std::uint64_t a, std::uint64_t m, std::uint64_t y, std::uint64_t x,
                         std::uint64_t z, std::uint64_t p) {
  const auto pred = imp_valuation(a, m, y, x, z, p);
  const std::string what = "v_p(a) = (y-1) v_p(2m) - v_p(x+z) for p = " + std::to_string(p) +
                           " when v_p(x+z) < v_p(a) + v_p(2m)";
  if (!pred) return verdict(true, "imp_valuation", what + " [not applicable]");
  const bool ok = *pred >= 0 && *pred == static_cast<long long>(vp(p, a));
  return verdict(ok, "imp_valuation",
                 what + " [predicted " + std::to_string(*pred) + ", actual " +
                     std::to_string(vp(p, a)) + "]");
}

std::optional<std::uint64_t> lemma_y(std::uint64_t a, std::uint64_t m) {
  if (m <= 1) throw std::invalid_argument("lemma_y requires m > 1");
  const std::uint64_t num = vp(2, a);
  const std::uint64_t den = vp(2, m) + 1;
  if (num % den != 0) return std::nullopt;
  return num / den + 1;
}

FilterVerdict lemma_ineq(std::uint64_t a, std::uint64_t m, std::uint64_t x, std::uint64_t y,
                         std::uint64_t z) {
  const BigInt lhs = 2 * big(a) * big(m) * ipow(big(x + z), y);
  const BigInt rhs = ipow(2 * big(m), y);
  return verdict(lhs >= rhs, "lemma_ineq", "2am (x+z)^y >= (2m)^y");
}

FilterVerdict z_parity_filter(std::uint64_t m, std::uint64_t z) {
  return verdict(m <= 1 || z % 2 == 0, "z_parity", "m > 1 forces (-1)^z = 1 mod 2m, so z is even");
}

FilterVerdict divisibility_filter(std::uint64_t a, std::uint64_t m, std::uint64_t y) {
  if (y < 1) throw std::invalid_argument("divisibility_filter requires y >= 1");
  const BigInt p = ipow(2 * big(m), y - 1);
  const bool ok = mpz_divisible_p(p.get_mpz_t(), big(a).get_mpz_t()) != 0;
  return verdict(ok, "divisibility", "a | (2m)^(y-1)");
}

FilterVerdict y1_m_filter(std::uint64_t a, std::uint64_t m, std::uint64_t y) {
  (void)a;
  return verdict(!(y == 1 && m > 1), "y1_m", "y = 1 and m > 1 force a = 1 modulo 2am");
}

FilterVerdict mod4_filter_m1(std::uint64_t a, std::uint64_t x, std::uint64_t z) {
  (void)x;
  (void)z;
  return verdict(a % 2 == 0, "mod4_m1",
                 "m = 1, x odd, y > 1: a odd gives 3 = 1 mod 4");
}

std::vector<FilterVerdict> run_pipeline(std::uint64_t a, std::uint64_t m, std::uint64_t x,
                                        std::uint64_t y, std::uint64_t z) {
  std::vector<FilterVerdict> out;
  auto push = [&out](FilterVerdict v) {
    out.push_back(std::move(v));
    return out.back().passed();
  };
  if (!push(y1_m_filter(a, m, y))) return out;
  if (m > 1) {
    if (!push(z_parity_filter(m, z))) return out;
    if (x % 2 == 1) {
      const auto ly = lemma_y(a, m);
      const bool ok = ly.has_value() && *ly == y;
      if (!push(verdict(ok, "lemma_y", "x odd: y = v2(a)/(v2(m)+1) + 1"))) return out;
    }
    if (!push(divisibility_filter(a, m, y))) return out;
    if (!push(lemma_ineq(a, m, x, y, z))) return out;
    for (const std::uint64_t p : prime_factors(2 * m)) {
      if (!push(imp_filter(a, m, y, x, z, p))) return out;
    }
  } else if (y > 1 && x % 2 == 1) {
    push(mod4_filter_m1(a, x, z));
  }
  return out;
}

bool pipeline_passes(std::uint64_t a, std::uint64_t m, std::uint64_t x, std::uint64_t y,
                     std::uint64_t z) {
  const auto v = run_pipeline(a, m, x, y, z);
  return v.empty() || v.back().passed();
}

IdentityId parse_identity(const std::string& name) {
  if (name == "eq21") return IdentityId::Eq21;
  if (name == "eq22") return IdentityId::Eq22;
  if (name == "eq23") return IdentityId::Eq23;
  throw std::invalid_argument("unknown identity: " + name);
}

const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::Eq21: return "eq21";
    case IdentityId::Eq22: return "eq22";
    case IdentityId::Eq23: return "eq23";
  }
  return "?";
}

namespace {

using u128 = unsigned __int128;

void scan_eq21(Range ar, Range mr, Range yr, std::vector<IdentityHit>& out) {
  const std::uint64_t ylo = std::max<std::uint64_t>(yr.lo, 1);
  for (std::uint64_t a = std::max<std::uint64_t>(ar.lo, 2); a <= ar.hi; ++a) {
    for (std::uint64_t m = std::max<std::uint64_t>(mr.lo, 2); m <= mr.hi; ++m) {
      if (a < (1ULL << 30) && m < (1ULL << 30)) {
        // rhs < 2^91 and every power tested stays below rhs * 2m < 2^122.
        const u128 rhs = static_cast<u128>(a) * (static_cast<u128>(2) * a * m - 3);
        u128 pw = 1;
        for (std::uint64_t y = 1; y <= yr.hi && pw <= rhs; ++y) {
          if (y >= ylo && pw == rhs) out.push_back({a, m, y});
          pw *= 2 * m;
        }
      } else {
        const BigInt rhs = big(a) * (2 * big(a) * big(m) - 3);
        BigInt pw = 1;
        for (std::uint64_t y = 1; y <= yr.hi && pw <= rhs; ++y) {
          if (y >= ylo && pw == rhs) out.push_back({a, m, y});
          pw *= 2 * big(m);
        }
      }
    }
  }
}

void scan_quartic(IdentityId id, Range ar, Range yr, std::vector<IdentityHit>& out) {
  const bool is22 = id == IdentityId::Eq22;
  const long c2 = is22 ? 1024 : 1280;
  const long c1 = is22 ? 96 : 48;
  const long c0 = is22 ? 5 : 7;
  for (std::uint64_t a = std::max<std::uint64_t>(ar.lo, 1); a <= ar.hi; ++a) {
    BigInt lhs;
    const BigInt A = big(a);
    lhs = A * (4096 * A * A * A - c2 * A * A + c1 * A - c0);
    if (lhs <= 0) continue;
    // lhs is a power of two 2^e with e = 4y - 4.
    if (mpz_popcount(lhs.get_mpz_t()) != 1) continue;
    const std::uint64_t e = mpz_scan1(lhs.get_mpz_t(), 0);
    if (e % 4 != 0) continue;
    const std::uint64_t y = e / 4 + 1;
    if (y >= yr.lo && y <= yr.hi) out.push_back({a, 8, y});
  }
}

}  // namespace

std::vector<IdentityHit> identity_scan(IdentityId id, Range a, Range m, Range y) {
  std::vector<IdentityHit> out;
  if (id == IdentityId::Eq21) {
    scan_eq21(a, m, y, out);
  } else {
    scan_quartic(id, a, y, out);
  }
  return out;
}

}  // namespace expdioph
