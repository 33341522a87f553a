#include "expdioph/aux.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "expdioph/arith.hpp"
#include "expdioph/linform.hpp"

namespace expdioph {

namespace {

const std::map<std::string, AuxId>& aux_names() {
  static const std::map<std::string, AuxId> names = {
      {"na53", AuxId::Na53},   {"pillai35", AuxId::Pillai35}, {"le", AuxId::Le},
      {"terai4", AuxId::Terai4}, {"fhyz", AuxId::Fhyz},       {"trivial-eq1", AuxId::TrivialEq1},
  };
  return names;
}

const char* equation_text(AuxId id) {
  switch (id) {
    case AuxId::Na53: return "5^x+2=3^z";
    case AuxId::Pillai35: return "3^Z-5^X=2";
    case AuxId::Le: return "U^2+2^k=V^l, gcd(U,V)=1, l>=3";
    case AuxId::Terai4: return "x^2+y^k=z^4, gcd(x,y)=1, k>3";
    case AuxId::Fhyz: return "(n+2)^x+(n+1)^y=n^z";
    case AuxId::TrivialEq1: return "(tB-1)^x+B^y=(tB+1)^z, B even";
  }
  return "?";
}

bool is_square(const BigInt& n, BigInt& root) {
  if (n < 1 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

std::vector<AuxTuple> scan_na53(const AuxBox& box) {
  std::vector<AuxTuple> out;
  const BigInt five(5), two(2), three(3);
  const double r = std::log(5.0) / std::log(3.0);
  for (std::uint64_t x = 1; x <= box.exp_max; ++x) {
    // 5^x < 3^z < 3 * 5^x, so z is floor(x r) or floor(x r) + 1.
    const auto z0 = static_cast<std::uint64_t>(std::floor(static_cast<double>(x) * r));
    for (std::uint64_t z = std::max<std::uint64_t>(z0, 1); z <= z0 + 2 && z <= box.exp_max; ++z) {
      if (cmp_powersum(five, x, two, 1, three, z) == Ordering::Equal) out.push_back({x, z});
    }
  }
  return out;
}

std::vector<AuxTuple> scan_pillai35(const AuxBox& box) {
  std::vector<AuxTuple> out;
  BigInt p3 = 1;
  for (std::uint64_t Z = 1; Z <= box.exp_max; ++Z) {
    p3 *= 3;
    const BigInt d = p3 - 2;  // must equal 5^X
    if (d < 5 || mpz_divisible_ui_p(d.get_mpz_t(), 5) == 0) continue;
    const unsigned X = vp(5, d);
    if (X <= box.exp_max && ipow(BigInt(5), X) == d) out.push_back({X, Z});
  }
  return out;
}

std::vector<AuxTuple> scan_le(const AuxBox& box) {
  std::vector<AuxTuple> out;
  const BigInt u_cap = big(box.base_max) * big(box.base_max);
  const BigInt ceiling = u_cap + ipow(BigInt(2), box.exp_max);
  for (std::uint64_t V = 2; V <= box.base_max; ++V) {
    for (std::uint64_t l = std::max<std::uint64_t>(box.exp2_min, 3); l <= box.exp2_max; ++l) {
      const BigInt vl = ipow(big(V), l);
      if (vl > ceiling) break;
      BigInt pk = 1;
      for (std::uint64_t k = 1; k <= box.exp_max; ++k) {
        pk *= 2;
        const BigInt d = vl - pk;
        if (d < 1) break;
        if (d > u_cap) continue;
        BigInt U;
        if (!is_square(d, U)) continue;
        const std::uint64_t u = U.get_ui();
        if (u <= box.base_max && gcd_u64(u, V) == 1) out.push_back({u, V, k, l});
      }
    }
  }
  return out;
}

std::vector<AuxTuple> scan_terai4(const AuxBox& box) {
  std::vector<AuxTuple> out;
  for (std::uint64_t z = 2; z <= box.base_max; ++z) {
    const BigInt z4 = ipow(big(z), 4);
    for (std::uint64_t k = std::max<std::uint64_t>(box.exp2_min, 4); k <= box.exp2_max; ++k) {
      for (std::uint64_t y = 1;; ++y) {
        const BigInt yk = ipow(big(y), k);
        if (yk >= z4) break;
        BigInt X;
        if (!is_square(z4 - yk, X)) continue;
        const std::uint64_t x = X.get_ui();
        if (gcd_u64(x, y) == 1) out.push_back({x, y, z, k});
      }
    }
  }
  return out;
}

std::vector<AuxTuple> scan_fhyz(const AuxBox& box) {
  std::vector<AuxTuple> out;
  // n = 1 gives n^z = 1, smaller than the left side.
  for (std::uint64_t n = 2; n <= box.base_max; ++n) {
    const BigInt A = big(n + 2), B = big(n + 1), C = big(n);
    const double la = std::log(static_cast<double>(n + 2));
    const double lb = std::log(static_cast<double>(n + 1));
    const double lc = std::log(static_cast<double>(n));
    for (std::uint64_t x = 1; x <= box.exp_max; ++x) {
      for (std::uint64_t y = 1; y <= box.exp_max; ++y) {
        const double hi = std::max(x * la, y * lb);
        const double lo = std::min(x * la, y * lb);
        auto z = static_cast<std::uint64_t>(std::max(1.0, std::floor((hi + std::log1p(std::exp(lo - hi))) / lc)));
        while (z > 1 && cmp_powersum(A, x, B, y, C, z - 1) != Ordering::Greater) --z;
        while (cmp_powersum(A, x, B, y, C, z) == Ordering::Greater) ++z;
        if (z <= box.exp_max && cmp_powersum_exact(A, x, B, y, C, z) == Ordering::Equal) {
          out.push_back({n, x, y, z});
        }
      }
    }
  }
  return out;
}

// tB - 1 can be 1, so this works directly on the exact left side.
std::vector<AuxTuple> scan_trivial_eq1(const AuxBox& box) {
  std::vector<AuxTuple> out;
  for (std::uint64_t B = 2; B <= box.base_max; B += 2) {
    for (std::uint64_t t = 1; t <= box.base2_max; ++t) {
      const BigInt A = big(t * B - 1);
      const BigInt C = big(t * B + 1);
      for (std::uint64_t x = 1; x <= box.exp_max; ++x) {
        const BigInt ax = ipow(A, x);
        for (std::uint64_t y = 1; y <= box.exp_max; ++y) {
          const BigInt lhs = ax + ipow(big(B), y);
          BigInt pw = C;
          for (std::uint64_t z = 1; z <= box.exp_max && pw <= lhs; ++z, pw *= C) {
            if (pw == lhs) out.push_back({B, t, x, y, z});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

AuxId parse_aux_id(const std::string& name) {
  auto it = aux_names().find(name);
  if (it == aux_names().end()) throw std::invalid_argument("unknown verifier id: " + name);
  return it->second;
}

const char* to_string(AuxId id) {
  switch (id) {
    case AuxId::Na53: return "na53";
    case AuxId::Pillai35: return "pillai35";
    case AuxId::Le: return "le";
    case AuxId::Terai4: return "terai4";
    case AuxId::Fhyz: return "fhyz";
    case AuxId::TrivialEq1: return "trivial-eq1";
  }
  return "?";
}

const std::vector<AuxId>& all_aux_ids() {
  static const std::vector<AuxId> ids = {AuxId::Na53,   AuxId::Pillai35, AuxId::Le,
                                         AuxId::Terai4, AuxId::Fhyz,     AuxId::TrivialEq1};
  return ids;
}

AuxBox default_aux_box(AuxId id) {
  switch (id) {
    case AuxId::Na53:
    case AuxId::Pillai35: return AuxBox{0, 0, 5000, 0, 0};
    case AuxId::Le: return AuxBox{200, 0, 40, 3, 20};
    case AuxId::Terai4: return AuxBox{100, 0, 0, 4, 20};
    case AuxId::Fhyz: return AuxBox{200, 0, 30, 0, 0};
    case AuxId::TrivialEq1: return AuxBox{16, 64, 16, 0, 0};
  }
  throw std::invalid_argument("unknown verifier id");
}

std::string classify_trivial(std::uint64_t B, std::uint64_t t, std::uint64_t x, std::uint64_t y,
                             std::uint64_t z) {
  if (B == 2 && t == 1 && y == 1 && z == 1) return "B=2,t=1:(i,1,1)";
  if (B == 2 && t == 1 && y == 3 && z == 2) return "B=2,t=1:(j,3,2)";
  if (x == 2 && z == 2 && y >= 2 && big(4) * big(t) == ipow(big(B), y - 1)) return "t=B^k/4:(2,k+1,2)";
  if (B == 2 && x == 1 && y == 1 && z == 1) return "B=2:(1,1,1)";
  if (B == 2 && t == 45 && x == 1 && y == 13 && z == 2) return "B=2,t=45:(1,13,2)";
  return "";
}

bool aux_tuple_holds(AuxId id, const AuxTuple& t) {
  auto P = [](std::uint64_t b, std::uint64_t e) { return ipow(big(b), e); };
  switch (id) {
    case AuxId::Na53: return t.size() == 2 && P(5, t[0]) + 2 == P(3, t[1]);
    case AuxId::Pillai35: return t.size() == 2 && P(3, t[1]) - P(5, t[0]) == 2;
    case AuxId::Le:
      return t.size() == 4 && t[3] >= 3 && gcd_u64(t[0], t[1]) == 1 && P(t[0], 2) + P(2, t[2]) == P(t[1], t[3]);
    case AuxId::Terai4:
      return t.size() == 4 && t[3] > 3 && gcd_u64(t[0], t[1]) == 1 && P(t[0], 2) + P(t[1], t[3]) == P(t[2], 4);
    case AuxId::Fhyz: return t.size() == 4 && P(t[0] + 2, t[1]) + P(t[0] + 1, t[2]) == P(t[0], t[3]);
    case AuxId::TrivialEq1:
      return t.size() == 5 && t[0] % 2 == 0 &&
             P(t[1] * t[0] - 1, t[2]) + P(t[0], t[3]) == P(t[1] * t[0] + 1, t[4]);
  }
  return false;
}

AuxResult verify_aux(AuxId id, const AuxBox& box) {
  AuxResult r;
  r.id = id;
  switch (id) {
    case AuxId::Na53:
      r.solutions = scan_na53(box);
      r.expected = {{2, 3}};
      break;
    case AuxId::Pillai35:
      r.solutions = scan_pillai35(box);
      r.expected = {{2, 3}};
      break;
    case AuxId::Le:
      r.solutions = scan_le(box);
      r.expected = {{5, 3, 1, 3}, {7, 3, 5, 4}, {11, 5, 2, 3}};
      break;
    case AuxId::Terai4:
      r.solutions = scan_terai4(box);
      break;
    case AuxId::Fhyz:
      r.solutions = scan_fhyz(box);
      r.expected = {{3, 1, 1, 2}};
      break;
    case AuxId::TrivialEq1:
      r.solutions = scan_trivial_eq1(box);
      break;
  }
  std::sort(r.solutions.begin(), r.solutions.end());
  std::sort(r.expected.begin(), r.expected.end());
  for (const auto& s : r.solutions) {
    if (!aux_tuple_holds(id, s)) throw std::logic_error(std::string("verifier produced a non-solution for ") + to_string(id));
  }
  if (id == AuxId::TrivialEq1) {
    for (const auto& s : r.solutions) {
      std::string c = classify_trivial(s[0], s[1], s[2], s[3], s[4]);
      if (c.empty()) r.unclassified.push_back(s);
      r.classes.push_back(std::move(c));
    }
    r.pass = !r.solutions.empty() && r.unclassified.empty();
  } else {
    r.pass = r.solutions == r.expected;
  }
  return r;
}

SearchReport aux_report(const AuxResult& r, const AuxBox& box) {
  SearchReport rep;
  rep.kind = EquationKind::Aux;
  rep.equation = equation_text(r.id);
  rep.bounds_version = kBoundsVersion;
  rep.region = {{"kind", "verify-aux"},
                {"id", to_string(r.id)},
                {"base_max", box.base_max},
                {"base2_max", box.base2_max},
                {"exp_max", box.exp_max},
                {"exp2_min", box.exp2_min},
                {"exp2_max", box.exp2_max},
                {"pass", r.pass},
                {"unclassified", r.unclassified.size()}};
  rep.solutions = r.solutions;
  rep.units_done = rep.units_total = 1;
  return rep;
}

}  // namespace expdioph
