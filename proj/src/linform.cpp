#include "expdioph/linform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "expdioph/arith.hpp"
#include "expdioph/filters.hpp"

namespace expdioph {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

namespace {

Rational make_checked(__int128 n, __int128 d) {
  auto g = static_cast<__int128>(1);
  {
    __int128 p = n < 0 ? -n : n;
    __int128 q = d < 0 ? -d : d;
    while (q != 0) {
      const __int128 t = p % q;
      p = q;
      q = t;
    }
    g = p == 0 ? 1 : p;
  }
  n /= g;
  d /= g;
  constexpr __int128 lim = static_cast<__int128>(INT64_MAX);
  if (n > lim || n < -lim || d > lim || d < -lim) throw std::overflow_error("rational overflow");
  return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

}  // namespace

Rational operator*(const Rational& a, const Rational& b) {
  return make_checked(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw std::domain_error("division by zero rational");
  return make_checked(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
}

Interval Rational::to_interval() const {
  return Interval::point(static_cast<double>(num)) / Interval::point(static_cast<double>(den));
}

double log_height(const Rational& r) {
  if (r.num <= 0) throw std::invalid_argument("log_height requires a positive rational");
  return std::log(static_cast<double>(std::max(r.num, r.den)));
}

namespace {

// Prime exponent vector; den contributes negative exponents.
std::map<std::uint64_t, long long> exponent_vector(const Rational& r) {
  std::map<std::uint64_t, long long> v;
  auto add = [&v](std::uint64_t n, long long sign) {
    for (std::uint64_t p : prime_factors(n)) {
      v[p] += sign * static_cast<long long>(vp(p, n));
    }
  };
  add(static_cast<std::uint64_t>(r.num), 1);
  add(static_cast<std::uint64_t>(r.den), -1);
  return v;
}

}  // namespace

bool mult_indep(const Rational& m, const Rational& n) {
  if (m.num <= m.den || n.num <= n.den) throw std::invalid_argument("mult_indep requires values > 1");
  const auto em = exponent_vector(m);
  const auto en = exponent_vector(n);
  if (em.size() != en.size()) return true;
  // Both logs are positive, so proportional vectors mean m^i = n^j with i, j > 0.
  const auto& [p0, m0] = *em.begin();
  auto it = en.find(p0);
  if (it == en.end()) return true;
  const long long n0 = it->second;
  for (const auto& [p, e] : em) {
    auto jt = en.find(p);
    if (jt == en.end()) return true;
    if (e * n0 != jt->second * m0) return true;
  }
  return false;
}

bool mult_indep(std::uint64_t m, std::uint64_t n) {
  if (m < 2 || n < 2) throw std::invalid_argument("mult_indep requires values > 1");
  return mult_indep(Rational(static_cast<std::int64_t>(m)), Rational(static_cast<std::int64_t>(n)));
}

LinearForm::LinearForm(Rational alpha1, Rational alpha2, std::uint64_t beta1, std::uint64_t beta2)
    : alpha1_(alpha1), alpha2_(alpha2), beta1_(beta1), beta2_(beta2) {
  if (alpha1_.num <= alpha1_.den || alpha2_.num <= alpha2_.den) {
    throw std::invalid_argument("linear form requires alpha1, alpha2 > 1");
  }
  if (beta1_ < 1 || beta2_ < 1) throw std::invalid_argument("linear form requires positive betas");
  if (!mult_indep(alpha1_, alpha2_)) {
    throw std::invalid_argument("alpha1 and alpha2 are multiplicatively dependent");
  }
}

double LinearForm::beta_prime() const {
  return static_cast<double>(beta1_) / log_height(alpha2_) +
         static_cast<double>(beta2_) / log_height(alpha1_);
}

double laurent_lower(const LinearForm& lf) {
  const double h1 = log_height(lf.alpha1());
  const double h2 = log_height(lf.alpha2());
  const double t = std::max(std::log(lf.beta_prime()) + 0.38, 10.0);
  return -25.2 * h1 * h2 * t * t;
}

double lambda_upper(std::uint64_t a, std::uint64_t m, std::uint64_t x, std::uint64_t y,
                    std::uint64_t z, Rational fraction) {
  if (fraction.num <= 0 || fraction.num >= fraction.den) {
    throw std::invalid_argument("lambda_upper: fraction must lie in (0, 1)");
  }
  const BigInt am = big(a) * big(m);
  const BigInt A = 2 * am + 1;
  const BigInt C = 2 * am - 1;
  const BigInt ax = ipow(A, x);
  if (ipow(C, z) <= ax) throw std::domain_error("lambda_upper: Lambda = z log C - x log A is not positive");
  // (2m)^y < A^(x(1-f))  <=>  (2m)^(y den) < A^(x (den - num))
  const auto q = static_cast<std::uint64_t>(fraction.den);
  const auto p = static_cast<std::uint64_t>(fraction.num);
  if (ipow(2 * big(m), y * q) >= ipow(A, x * (q - p))) {
    throw std::domain_error("lambda_upper: (2m)^y < A^(x(1-f)) does not hold");
  }
  return -fraction.to_double() * static_cast<double>(x) * log_big(A);
}

namespace {

constexpr double kLaurentShift = 0.38;
constexpr double kLaurentFloor = 10.0;

Interval s_rhs(const Interval& coeff, const Interval& s) {
  Interval l = iv_log(s * Interval::point(2.0) + Interval::point(1.0)) + Interval::point(kLaurentShift);
  l = iv_max(l, kLaurentFloor);
  return coeff * (l * l);
}

}  // namespace

SBound solve_s_bound(const Rational& c, const Rational& ratio) {
  if (c.num <= 0) throw std::invalid_argument("solve_s_bound: c must be positive");
  if (ratio.num <= 0 || ratio.num > ratio.den) throw std::invalid_argument("solve_s_bound: ratio must lie in (0, 1]");
  const Rational eff = c / ratio;
  const Interval coeff = eff.to_interval();

  // Above the knee the right side is concave in s, so s - rhs is convex,
  // negative at 0, and crosses zero exactly once.
  const Rational hundred_c = Rational(100) * eff;
  const std::int64_t s_sat = (hundred_c.num + hundred_c.den - 1) / hundred_c.den;
  const Interval l_sat = iv_log(iv_int(2 * s_sat + 1)) + Interval::point(kLaurentShift);
  if (l_sat.hi <= kLaurentFloor) {
    return SBound{s_sat, hundred_c.to_interval(), hundred_c, true, 0};
  }
  if (l_sat.lo <= kLaurentFloor) throw std::runtime_error("solve_s_bound: saturation test is rounding-sensitive");

  // Fixed-point iteration from 100c', run on both interval ends.
  Interval s = hundred_c.to_interval();
  int it = 0;
  for (; it < 100; ++it) {
    const Interval next = s_rhs(coeff, s);
    const bool settled = std::fabs(next.lo - s.lo) <= 1e-12 * next.lo &&
                         std::fabs(next.hi - s.hi) <= 1e-12 * next.hi;
    s = next;
    if (settled) break;
  }
  if (it == 100) throw std::runtime_error("solve_s_bound: fixed-point iteration did not converge");
  // Certify: f(lo') > lo' and f(hi') < hi' bracket the crossing.
  const Interval lo_probe = Interval::point(s.lo * (1 - 1e-10));
  const Interval hi_probe = Interval::point(s.hi * (1 + 1e-10));
  if (!(s_rhs(coeff, lo_probe).lo > lo_probe.hi && s_rhs(coeff, hi_probe).hi < hi_probe.lo)) {
    throw std::runtime_error("solve_s_bound: could not bracket the root");
  }
  const Interval root{lo_probe.lo, hi_probe.hi};
  const std::int64_t s_max = certified_ceil(root, "solve_s_bound");
  return SBound{s_max, root, std::nullopt, false, it + 1};
}

AMax derive_A_max(std::int64_t s_max) {
  if (s_max < 1) throw std::invalid_argument("derive_A_max requires s_max >= 1");
  // C < 2 s_max and C odd give C <= 2 s_max - 1, so A = C + 2 < 2 s_max + 2.
  return AMax{2 * s_max + 2, 2 * s_max + 2};
}

AMax derive_A_max(const SBound& s) {
  std::int64_t c_below = 0;  // largest integer strictly below 2 * root
  if (s.exact_root) {
    const Rational two_r = Rational(2) * *s.exact_root;
    c_below = two_r.num % two_r.den == 0 ? two_r.num / two_r.den - 1 : two_r.num / two_r.den;
  } else {
    c_below = certified_floor_below(s.root * Interval::point(2.0), "derive_A_max");
  }
  if (c_below % 2 == 0) --c_below;
  return AMax{2 * s.s_max + 2, c_below + 3};
}

YCaps derive_y_caps(std::uint64_t A_max) {
  YCaps caps{1, 1};
  for (std::uint64_t m = 2; 2 * 2 * m + 1 < A_max; ++m) {
    const std::uint64_t v2m = vp(2, 2 * m);
    for (std::uint64_t a = 2; 2 * a * m + 1 < A_max; ++a) {
      const std::uint64_t y = vp(2, a) / v2m + 1;
      auto& slot = (m % 2 == 0) ? caps.even_m : caps.odd_m;
      slot = std::max(slot, y);
    }
  }
  return caps;
}

XWindow x_window(std::uint64_t C, std::uint64_t y, std::uint64_t a, std::uint64_t m,
                 std::uint64_t log_coeff, std::uint64_t linear_coeff) {
  if (C < 2) throw std::invalid_argument("x_window requires C >= 2");
  std::uint64_t x_min = a * m;
  if (x_min % 2 == 0) ++x_min;
  const Interval cap = iv_int(static_cast<std::int64_t>(log_coeff)) *
                       iv_log(iv_int(static_cast<std::int64_t>(C)));
  const auto by_log = static_cast<std::uint64_t>(certified_floor_below(cap, "x_window"));
  return XWindow{x_min, std::max(linear_coeff * y, by_log)};
}

std::uint64_t zx_gap_max(std::uint64_t C, Interval log_c, std::uint64_t x) {
  const Interval v = iv_int(static_cast<std::int64_t>(2 * x)) /
                     (iv_int(static_cast<std::int64_t>(C)) * log_c);
  const std::int64_t g = certified_floor_below(v, "zx_gap_max");
  return g < 0 ? 0 : static_cast<std::uint64_t>(g);
}

std::uint64_t zx_gap_max(std::uint64_t C, std::uint64_t x) {
  if (C < 2 || x < 1) throw std::invalid_argument("zx_gap_max requires C >= 2, x >= 1");
  return zx_gap_max(C, iv_log(iv_int(static_cast<std::int64_t>(C))), x);
}

namespace {

const Interval kOneHalfLog = iv_log(Interval::point(1.5));

// Upper limit for z from the small-case inequality; nullopt when the
// denominator is not positive (no restriction).
std::optional<Interval> small_case_z_limit(std::uint64_t m, std::uint64_t y, std::int64_t L) {
  const Interval log_m = iv_log(iv_int(static_cast<std::int64_t>(m)));
  const Interval denom = log_m - (kOneHalfLog / iv_int(static_cast<std::int64_t>(y)) + iv_log(iv_int(L)));
  if (denom.hi <= 0) return std::nullopt;
  if (denom.lo <= 0) throw std::runtime_error("small_case_survivors: sign of denominator is rounding-sensitive");
  return iv_log(iv_int(static_cast<std::int64_t>(2 * m))) / denom;
}

// Same limit with L replaced by its real upper bound 1.5 log 2m and y = 5,
// which dominates every admissible (z, y) for that m.
Interval small_case_tail_limit(double m) {
  const Interval log_m = iv_log(Interval::point(m));
  const Interval L = Interval::point(1.5) * iv_log(Interval::point(2.0 * m));
  const Interval denom = log_m - (kOneHalfLog / Interval::point(5.0) + iv_log(L));
  return iv_log(Interval::point(2.0 * m)) / denom;
}

}  // namespace

std::set<SmallCase> small_case_survivors(std::uint64_t m_limit) {
  if (m_limit < 16) throw std::invalid_argument("small_case_survivors: m_limit too small");
  std::set<SmallCase> out;
  for (std::uint64_t m = 2; m <= m_limit; ++m) {
    const Interval l_real = Interval::point(1.5) * iv_log(iv_int(static_cast<std::int64_t>(2 * m)));
    const std::int64_t L = certified_floor(l_real, "small_case_survivors");
    for (std::int64_t z = 4; z <= L; ++z) {
      const auto y = static_cast<std::uint64_t>(z + 1);  // y > z >= 4
      const auto lim = small_case_z_limit(m, y, L);
      bool survives = true;
      if (lim) {
        if (static_cast<double>(z) >= lim->hi) {
          survives = false;
        } else if (!(static_cast<double>(z) < lim->lo)) {
          throw std::runtime_error("small_case_survivors: z limit is rounding-sensitive");
        }
      }
      if (!survives) continue;
      for (std::int64_t x = 1; x < z; x += 2) {
        out.insert(SmallCase{m, static_cast<std::uint64_t>(z), static_cast<std::uint64_t>(x)});
      }
    }
  }
  // Tail: the dominating limit is below 4 and decreasing on a geometric grid.
  double prev = small_case_tail_limit(static_cast<double>(m_limit)).hi;
  if (!(prev < 4.0)) throw std::runtime_error("small_case_survivors: m_limit does not cover the tail");
  for (double m = 2.0 * static_cast<double>(m_limit); m < 1e18; m *= 2.0) {
    const double cur = small_case_tail_limit(m).hi;
    if (!(cur <= prev + 1e-12)) throw std::runtime_error("small_case_survivors: tail limit not decreasing");
    prev = cur;
  }
  return out;
}

namespace {

void add_entry(BoundSet& b, const std::string& name, std::variant<std::int64_t, std::string> value, const std::string& anchor,
               const std::string& derivation) {
  b.entries.push_back(BoundEntry{name, value, anchor, derivation});
}

void require(bool ok, const std::string& step) {
  if (!ok) throw std::runtime_error("bound cascade inconsistency at step: " + step);
}

}  // namespace

BoundSet build_bound_set_uncached() {
  BoundSet b{};
  const Rational laurent(126, 5);  // 25.2

  // Basic estimate: log Lambda < -(x/2) log A against Laurent.
  const SBound s1 = solve_s_bound(laurent, Rational(1, 2));
  b.s_max_coarse = s1.s_max;
  add_entry(b, "s_max_coarse", static_cast<std::int64_t>(s1.s_max),
            "s < 50.4 max{log(2s+1)+0.38, 10}^2 with s = x / log C",
            "Laurent lower bound against log Lambda < -(x/2) log A and beta' < 2s + 1; "
            "root of s = 50.4 max{...}^2");

  const AMax a1 = derive_A_max(s1);
  require(a1.generic == a1.refined, "A_max_coarse: generic and odd-C bounds differ");
  b.A_max_coarse = a1.refined;
  add_entry(b, "A_max_coarse", static_cast<std::int64_t>(b.A_max_coarse),
            "x > (C log C / 2)(z - x)",
            "z - x >= 1 gives C < 2s < 2 s_max; C odd, A = C + 2");

  const YCaps y1 = derive_y_caps(static_cast<std::uint64_t>(b.A_max_coarse));
  b.y_cap_even_m = y1.even_m;
  b.y_cap_odd_m = y1.odd_m;
  add_entry(b, "y_cap_even_m", static_cast<std::int64_t>(y1.even_m), "y = v2(a)/v2(2m) + 1, m even",
            "max over a, m >= 2 with 2am+1 < A_max_coarse");
  add_entry(b, "y_cap_odd_m", static_cast<std::int64_t>(y1.odd_m), "y = v2(a)/v2(2m) + 1, m odd",
            "max over a >= 2, m >= 3 with 2am+1 < A_max_coarse");

  // Refinement by contradiction: assume A >= A_max_refined.
  const SBound s2 = solve_s_bound(laurent, Rational(1952, 1953));
  b.s_max_refined = s2.s_max;
  const AMax a2 = derive_A_max(s2);
  b.A_max_refined = a2.refined;
  require(b.A_max_refined <= b.A_max_coarse, "A_max_refined <= A_max_coarse");

  // If A >= A_max_refined then C >= A_max_refined - 2 and x > (C log C)/2.
  const auto c_lo = static_cast<std::int64_t>(b.A_max_refined - 2);
  const Interval half_clogc =
      iv_int(c_lo) * iv_log(iv_int(c_lo)) / Interval::point(2.0);
  b.x_contradiction_floor = static_cast<std::uint64_t>(certified_floor(half_clogc, "x floor") + 1);
  // x >= 1953 y (y <= y_cap_odd_m) and A > 2m give A^x > (2m)^(1953 y).
  require(b.x_contradiction_floor > 1953 * std::max(b.y_cap_even_m, b.y_cap_odd_m),
          "x_contradiction_floor > 1953 * y_cap");
  add_entry(b, "s_max_refined", static_cast<std::int64_t>(s2.s_max),
            "s < 25.2 (1953/1952) max{log(2s+1)+0.38, 10}^2",
            "A >= A_max_refined forces x >= x_contradiction_floor > 1953 y, so "
            "log Lambda < -(1952x/1953) log A");
  add_entry(b, "x_contradiction_floor", static_cast<std::int64_t>(b.x_contradiction_floor),
            "x > (C log C / 2)(z - x) with C >= A_max_refined - 2",
            "consistency check of the refinement; not a search bound");
  add_entry(b, "A_max_refined", static_cast<std::int64_t>(b.A_max_refined), "A < 5044",
            "C < 2s with s below the refined root, C odd, A = C + 2");

  // The refined pass must be a fixed point: re-solving with the refined
  // premise cannot give a different s bound.
  const SBound s2_again = solve_s_bound(laurent, Rational(1952, 1953));
  require(s2_again.s_max == b.s_max_refined && derive_A_max(s2_again).refined == b.A_max_refined,
          "refined pass self-consistency");

  const YCaps y2 = derive_y_caps(static_cast<std::uint64_t>(b.A_max_refined));
  b.y_cap_even_m_refined = y2.even_m;
  b.y_cap_odd_m_refined = y2.odd_m;
  b.y_cap_final = std::max(y2.even_m, y2.odd_m);
  require(b.y_cap_even_m_refined <= b.y_cap_even_m && b.y_cap_odd_m_refined <= b.y_cap_odd_m,
          "y caps monotone in A_max");
  add_entry(b, "y_cap_even_m_refined", static_cast<std::int64_t>(y2.even_m),
            "y = v2(a)/v2(2m) + 1, m even", "max over a, m >= 2 with 2am+1 < A_max_refined");
  add_entry(b, "y_cap_odd_m_refined", static_cast<std::int64_t>(y2.odd_m),
            "y = v2(a)/v2(2m) + 1, m odd", "max over a >= 2, m >= 3 with 2am+1 < A_max_refined");
  add_entry(b, "y_cap_final", static_cast<std::int64_t>(b.y_cap_final), "y <= 10",
            "max of the refined parity caps");

  b.x_rule_log_coeff = static_cast<std::uint64_t>(b.s_max_refined);
  b.x_rule_linear_coeff = 1300;
  add_entry(b, "x_rule_log_coeff", static_cast<std::int64_t>(b.x_rule_log_coeff),
            "x < 2522 log(A - 2) or x <= 1300 y",
            "s < s_max_refined once A^x > (2m)^(1300 y); coefficient is s_max_refined");
  add_entry(b, "x_rule_linear_coeff", std::int64_t{1300}, "x < 2522 log(A - 2) or x <= 1300 y",
            "stated constant; effective cap is the larger of the two alternatives");
  b.gap_rule_coeff = 2;
  add_entry(b, "gap_rule_coeff", std::int64_t{2}, "(z - x) < 2x / (C log C)",
            "C^(z-x) < ((2am+1)/(2am-1))^x (1 + A^(-x/2)) with C >= 7, x >= 5");
  b.x_floor_rule = "x >= am";
  add_entry(b, "x_floor_rule", std::string("am"), "x >= am",
            "A^x > (2m)^y gives e < ((2am+1)/(2am-1))^x < e^(2x/(2am-1))");
  return b;
}

const BoundSet& build_bound_set() {
  static const BoundSet cached = build_bound_set_uncached();
  return cached;
}

}  // namespace expdioph
