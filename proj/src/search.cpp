#include "expdioph/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "expdioph/arith.hpp"

namespace expdioph {

namespace {

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<bool> comp(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) comp[j] = true;
  }
  return out;
}

std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
      .count();
}

nlohmann::json range_json(const Range& r) { return nlohmann::json::array({r.lo, r.hi}); }

}  // namespace

void SearchBox::validate() const {
  for (const Range* r : {&a, &m, &x, &y, &z}) {
    if (r->lo < 1) throw std::invalid_argument("search box lower bounds must be >= 1");
  }
  if (a.lo < 2) throw std::invalid_argument("search box requires a >= 2");
}

std::vector<Solution> oracle_search(const SearchBox& box) {
  box.validate();
  std::vector<Solution> out;
  for (std::uint64_t a = box.a.lo; a <= box.a.hi; ++a) {
    for (std::uint64_t m = box.m.lo; m <= box.m.hi; ++m) {
      const Instance inst(a, m);
      const Terms t = terms(inst);
      for (std::uint64_t x = box.x.lo; x <= box.x.hi; ++x) {
        for (std::uint64_t y = box.y.lo; y <= box.y.hi; ++y) {
          for (std::uint64_t z = box.z.lo; z <= box.z.hi; ++z) {
            if (cmp_powersum(t.A, x, t.B, y, t.C, z) != Ordering::Equal) continue;
            if (auto s = Solution::verify(inst, ExponentTriple(x, y, z))) out.push_back(*s);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

WorkUnit make_work_unit(const BoundSet& bounds, std::uint64_t a, std::uint64_t m, std::uint64_t y) {
  if (m < 2) throw std::invalid_argument("work unit requires m >= 2 (m = 1 is handled separately)");
  if (a < 2) throw std::invalid_argument("work unit requires a >= 2");
  if (y < 2 || y > bounds.y_cap_final) {
    throw std::invalid_argument("work unit requires 2 <= y <= " + std::to_string(bounds.y_cap_final));
  }
  const std::uint64_t A = 2 * a * m + 1;
  if (A >= static_cast<std::uint64_t>(bounds.A_max_refined)) {
    throw std::invalid_argument("work unit outside the region: 2am+1 >= " +
                                std::to_string(bounds.A_max_refined));
  }
  if (!divisibility_filter(a, m, y).passed()) throw std::invalid_argument("work unit fails a | (2m)^(y-1)");
  const auto ly = lemma_y(a, m);
  if (!ly || *ly != y) throw std::invalid_argument("work unit fails lemma_y(a, m) = y");
  return WorkUnit{a, m, y, x_window(A - 2, y, a, m, bounds.x_rule_log_coeff, bounds.x_rule_linear_coeff)};
}

std::vector<WorkUnit> partition_work(const BoundSet& bounds, std::uint64_t y) {
  if (y < 2 || y > bounds.y_cap_final) {
    throw std::invalid_argument("y must lie in [2, " + std::to_string(bounds.y_cap_final) + "]");
  }
  const auto amax = static_cast<std::uint64_t>(bounds.A_max_refined);
  std::vector<WorkUnit> units;
  for (std::uint64_t m = 2; 4 * m + 1 < amax; ++m) {
    for (std::uint64_t a = 2; 2 * a * m + 1 < amax; ++a) {
      const auto ly = lemma_y(a, m);
      if (!ly || *ly != y) continue;
      if (!divisibility_filter(a, m, y).passed()) continue;
      units.push_back(make_work_unit(bounds, a, m, y));
    }
  }
  std::sort(units.begin(), units.end(), [](const WorkUnit& l, const WorkUnit& r) {
    return std::make_pair(l.a * l.m, l.a) < std::make_pair(r.a * r.m, r.a);
  });
  return units;
}

ModularSieve::ModularSieve(std::uint64_t a, std::uint64_t m, std::uint64_t y)
    : A_(2 * a * m + 1), C_(2 * a * m - 1) {
  static const std::vector<std::uint32_t> pool = small_primes(4000);
  const std::uint64_t B = 2 * m;
  std::size_t n = 0;
  for (const std::uint32_t p : pool) {
    if (n == kPrimeCount) break;
    if (a % p == 0 || B % p == 0 || A_ % p == 0 || C_ % p == 0) continue;
    primes_[n] = p;
    a_res_[n] = static_cast<std::uint32_t>(A_ % p);
    by_res_[n] = modpow_u32(B, y, p);
    ++n;
  }
  if (n != kPrimeCount) throw std::logic_error("sieve prime pool exhausted");
}

std::uint32_t ModularSieve::rejecting_prime(std::uint64_t x, std::uint64_t z) const {
  for (std::size_t i = 0; i < kPrimeCount; ++i) {
    const std::uint32_t p = primes_[i];
    const std::uint64_t lhs = (static_cast<std::uint64_t>(modpow_u32(A_, x, p)) + by_res_[i]) % p;
    if (lhs != modpow_u32(C_, z, p)) return p;
  }
  return 0;
}

std::uint32_t ModularSieve::rejecting_prime(const std::array<std::uint32_t, kPrimeCount>& ax_res,
                                            std::uint64_t z) const {
  for (std::size_t i = 0; i < kPrimeCount; ++i) {
    const std::uint32_t p = primes_[i];
    const std::uint64_t lhs = (static_cast<std::uint64_t>(ax_res[i]) + by_res_[i]) % p;
    if (lhs != modpow_u32(C_, z, p)) return p;
  }
  return 0;
}

namespace {

void test_candidate(const ModularSieve& sieve, const std::array<std::uint32_t, ModularSieve::kPrimeCount>& ax,
                    std::uint64_t a, std::uint64_t m, std::uint64_t x, std::uint64_t y, std::uint64_t z,
                    UnitResult& res) {
  ++res.stats.candidates;
  if (sieve.rejecting_prime(ax, z) != 0) {
    ++res.stats.sieve_rejected;
    return;
  }
  ++res.stats.exact_checks;
  if (Solution::verify(Instance(a, m), ExponentTriple(x, y, z))) res.found.push_back({a, m, x, y, z});
}

// A^x residues for the starting x, then stepped by A^2 per odd x.
struct ResidueStepper {
  std::array<std::uint32_t, ModularSieve::kPrimeCount> cur{};
  std::array<std::uint32_t, ModularSieve::kPrimeCount> step{};
  const ModularSieve& s;

  ResidueStepper(const ModularSieve& sieve, std::uint64_t x0) : s(sieve) {
    for (std::size_t i = 0; i < ModularSieve::kPrimeCount; ++i) {
      const std::uint32_t p = s.primes()[i];
      cur[i] = modpow_u32(s.A_mod(i), x0, p);
      step[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(s.A_mod(i)) * s.A_mod(i) % p);
    }
  }

  void advance() {
    for (std::size_t i = 0; i < ModularSieve::kPrimeCount; ++i) {
      cur[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(cur[i]) * step[i] % s.primes()[i]);
    }
  }
};

}  // namespace

UnitResult scan_unit(const WorkUnit& unit, const BoundSet& bounds) {
  (void)bounds;
  UnitResult res;
  const std::uint64_t A = 2 * unit.a * unit.m + 1;
  const std::uint64_t C = A - 2;
  const double log_a = std::log(static_cast<double>(A));
  const double log_c = std::log(static_cast<double>(C));
  const Interval log_c_iv = iv_log(iv_int(static_cast<std::int64_t>(C)));
  const ModularSieve sieve(unit.a, unit.m, unit.y);

  // Below x = C log C / 2 the gap bound admits no z > x; skip with a margin.
  std::uint64_t x0 = unit.window.x_min;
  const double gap_start = 0.5 * static_cast<double>(C) * log_c * (1.0 - 1e-9);
  if (static_cast<double>(x0) < gap_start) {
    x0 = static_cast<std::uint64_t>(gap_start);
    if (x0 % 2 == 0) --x0;
    x0 = std::max(x0, unit.window.x_min);
  }
  if (x0 > unit.window.x_max) return res;

  ResidueStepper ax(sieve, x0);
  for (std::uint64_t x = x0; x <= unit.window.x_max; x += 2, ax.advance()) {
    const std::uint64_t gap = zx_gap_max(C, log_c_iv, x);
    if (gap == 0) continue;
    const auto z0 = static_cast<std::int64_t>(std::llround(static_cast<double>(x) * log_a / log_c));
    std::uint64_t zlo = std::max<std::int64_t>(static_cast<std::int64_t>(x) + 1, z0 - 2);
    const std::uint64_t zhi = std::min<std::int64_t>(static_cast<std::int64_t>(x + gap), z0 + 2);
    if (zlo % 2 == 1) ++zlo;
    if (zlo > zhi) continue;
    ++res.stats.x_values;
    for (std::uint64_t z = zlo; z <= zhi; z += 2) test_candidate(sieve, ax.cur, unit.a, unit.m, x, unit.y, z, res);
  }
  return res;
}

UnitResult scan_box(std::uint64_t a, std::uint64_t m, std::uint64_t y, Range xr, Range zr) {
  UnitResult res;
  const ModularSieve sieve(a, m, y);
  std::uint64_t x0 = std::max<std::uint64_t>(xr.lo, 1);
  if (x0 % 2 == 0) ++x0;
  if (x0 > xr.hi) return res;
  ResidueStepper ax(sieve, x0);
  for (std::uint64_t x = x0; x <= xr.hi; x += 2, ax.advance()) {
    ++res.stats.x_values;
    std::uint64_t z = std::max<std::uint64_t>(zr.lo, 2);
    if (z % 2 == 1) ++z;
    for (; z <= zr.hi; z += 2) test_candidate(sieve, ax.cur, a, m, x, y, z, res);
  }
  return res;
}

std::vector<Solution> theorem_search_box(const SearchBox& box) {
  box.validate();
  std::vector<Solution> out;
  for (std::uint64_t a = box.a.lo; a <= box.a.hi; ++a) {
    for (std::uint64_t m = std::max<std::uint64_t>(box.m.lo, 2); m <= box.m.hi; ++m) {
      for (std::uint64_t y = box.y.lo; y <= box.y.hi; ++y) {
        if (!y1_m_filter(a, m, y).passed() || !divisibility_filter(a, m, y).passed()) continue;
        const auto ly = lemma_y(a, m);
        if (!ly || *ly != y) continue;
        for (const auto& t : scan_box(a, m, y, box.x, box.z).found) {
          out.push_back(*Solution::verify(Instance(t[0], t[1]), ExponentTriple(t[2], t[3], t[4])));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SearchReport theorem_search(const BoundSet& bounds, std::uint64_t y, const SearchOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<WorkUnit> units = partition_work(bounds, y);

  CheckpointState state;
  std::optional<CheckpointWriter> writer;
  if (opts.checkpoint) {
    state = checkpoint_load(*opts.checkpoint);
    writer.emplace(*opts.checkpoint, state.valid_bytes);
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const UnitKey key{units[i].a, units[i].m, units[i].y};
    if (state.done.count(key) == 0) pending.push_back(i);
  }
  if (opts.max_new_units && *opts.max_new_units < pending.size()) pending.resize(*opts.max_new_units);

  std::vector<std::optional<UnitResult>> results(units.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> completed{0};
  std::mutex err_mu;
  std::exception_ptr err;

  auto worker = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= pending.size()) return;
      const WorkUnit& u = units[pending[k]];
      try {
        const auto u0 = std::chrono::steady_clock::now();
        UnitResult r = scan_unit(u, bounds);
        if (writer) writer->append(CheckpointRecord{{u.a, u.m, u.y}, r.found, ms_since(u0)});
        results[pending[k]] = std::move(r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        next.store(pending.size());
        return;
      }
      const std::size_t c = completed.fetch_add(1) + 1;
      if (opts.progress) opts.progress(c, pending.size());
    }
  };
  const unsigned nthreads = std::max(1U, opts.threads);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);

  std::set<FamilyTuple> found;
  std::uint64_t done = 0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const UnitKey key{units[i].a, units[i].m, units[i].y};
    if (results[i]) {
      ++done;
      found.insert(results[i]->found.begin(), results[i]->found.end());
    } else if (auto it = state.done.find(key); it != state.done.end()) {
      ++done;
      found.insert(it->second.found.begin(), it->second.found.end());
    }
  }

  SearchReport rep;
  rep.kind = EquationKind::Family;
  rep.equation = family_equation_text();
  rep.bounds_version = kBoundsVersion;
  rep.region = {
      {"kind", "theorem"},
      {"y", y},
      {"m_min", 2},
      {"A_max_exclusive", bounds.A_max_refined},
      {"x_parity", "odd"},
      {"z_parity", "even"},
      {"x_rule", "am <= x <= max(" + std::to_string(bounds.x_rule_linear_coeff) + " y, x < " +
                     std::to_string(bounds.x_rule_log_coeff) + " log C)"},
      {"z_rule", "x < z <= x + gap, gap < 2x/(C log C), |z - x log A / log C| <= 2"},
      {"filters",
       {"y1_m", "z_parity", "lemma_y", "divisibility", "modular_sieve_25_primes", "exact"}},
  };
  for (const auto& t : found) rep.solutions.emplace_back(t.begin(), t.end());
  rep.units_done = done;
  rep.units_total = units.size();
  rep.wall_ms = ms_since(t0);
  return rep;
}

std::vector<std::array<std::uint64_t, 4>> corollary_search(std::uint64_t b_max, std::uint64_t exp_cap) {
  if (b_max < 3 || b_max % 2 == 0) throw std::invalid_argument("corollary_search requires odd b_max >= 3");
  if (exp_cap < 1) throw std::invalid_argument("corollary_search requires exp_cap >= 1");
  std::vector<std::array<std::uint64_t, 4>> out;
  const BigInt two(2);
  // b = 3 gives (b-2)^z = 1 < b^x + 2^y; nothing to test.
  for (std::uint64_t b = 5; b <= b_max; b += 2) {
    const BigInt B = big(b);
    const BigInt C = big(b - 2);
    const double lb = std::log(static_cast<double>(b));
    const double lc = std::log(static_cast<double>(b - 2));
    for (std::uint64_t x = 1; x <= exp_cap; ++x) {
      for (std::uint64_t y = 1; y <= exp_cap; ++y) {
        const double hi = std::max(x * lb, y * std::log(2.0));
        const double lo = std::min(x * lb, y * std::log(2.0));
        const double zf = (hi + std::log1p(std::exp(lo - hi))) / lc;
        // Walk to the exact crossing: smallest z with (b-2)^z >= b^x + 2^y.
        auto z = static_cast<std::uint64_t>(std::max(1.0, std::floor(zf)));
        while (z > 1 && cmp_powersum(B, x, two, y, C, z - 1) != Ordering::Greater) --z;
        while (cmp_powersum(B, x, two, y, C, z) == Ordering::Greater) ++z;
        if (z <= exp_cap && cmp_powersum_exact(B, x, two, y, C, z) == Ordering::Equal) {
          out.push_back({b, x, y, z});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SearchReport oracle_report(const SearchBox& box) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.kind = EquationKind::Family;
  rep.equation = family_equation_text();
  rep.bounds_version = kBoundsVersion;
  rep.region = {{"kind", "oracle"}, {"a", range_json(box.a)}, {"m", range_json(box.m)},
                {"x", range_json(box.x)}, {"y", range_json(box.y)}, {"z", range_json(box.z)},
                {"filters", {"exact"}}};
  for (const auto& s : oracle_search(box)) rep.solutions.push_back({s.a(), s.m(), s.x(), s.y(), s.z()});
  const std::uint64_t pairs = (box.a.hi >= box.a.lo ? box.a.hi - box.a.lo + 1 : 0) *
                              (box.m.hi >= box.m.lo ? box.m.hi - box.m.lo + 1 : 0);
  rep.units_done = rep.units_total = pairs;
  rep.wall_ms = ms_since(t0);
  return rep;
}

SearchReport corollary_report(std::uint64_t b_max, std::uint64_t exp_cap) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.kind = EquationKind::Corollary;
  rep.equation = corollary_equation_text();
  rep.bounds_version = kBoundsVersion;
  rep.region = {{"kind", "corollary"}, {"b", {3, b_max}}, {"b_parity", "odd"},
                {"exponents", {1, exp_cap}}, {"filters", {"exact"}}};
  for (const auto& t : corollary_search(b_max, exp_cap)) rep.solutions.emplace_back(t.begin(), t.end());
  rep.units_done = rep.units_total = (b_max - 1) / 2;
  rep.wall_ms = ms_since(t0);
  return rep;
}

}  // namespace expdioph
