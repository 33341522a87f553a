#pragma once

// Outward-rounded interval arithmetic on doubles. Used to certify that an
// integer derived from a real-valued bound does not depend on rounding.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace expdioph {

struct Interval {
  double lo;
  double hi;

  static Interval point(double v) { return {v, v}; }
  double mid() const { return 0.5 * (lo + hi); }
};

namespace iv_detail {
inline double down(double v) { return std::nextafter(v, -std::numeric_limits<double>::infinity()); }
inline double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }
}  // namespace iv_detail

inline Interval operator+(Interval a, Interval b) {
  return {iv_detail::down(a.lo + b.lo), iv_detail::up(a.hi + b.hi)};
}

inline Interval operator-(Interval a, Interval b) {
  return {iv_detail::down(a.lo - b.hi), iv_detail::up(a.hi - b.lo)};
}

// Both operands nonnegative.
inline Interval operator*(Interval a, Interval b) {
  return {iv_detail::down(a.lo * b.lo), iv_detail::up(a.hi * b.hi)};
}

// Numerator nonnegative, denominator positive.
inline Interval operator/(Interval a, Interval b) {
  return {iv_detail::down(a.lo / b.hi), iv_detail::up(a.hi / b.lo)};
}

// libm log is not correctly rounded; two ulps each side covers its error.
inline Interval iv_log(Interval a) {
  using iv_detail::down;
  using iv_detail::up;
  return {down(down(std::log(a.lo))), up(up(std::log(a.hi)))};
}

inline Interval iv_exp(Interval a) {
  using iv_detail::down;
  using iv_detail::up;
  return {down(down(std::exp(a.lo))), up(up(std::exp(a.hi)))};
}

inline Interval iv_max(Interval a, double b) { return {std::max(a.lo, b), std::max(a.hi, b)}; }

inline Interval iv_int(std::int64_t v) { return Interval::point(static_cast<double>(v)); }

/// Largest integer strictly below every point of the interval, if the
/// choice is the same at both ends; throws otherwise.
inline std::int64_t certified_floor_below(Interval v, const std::string& what) {
  auto below = [](double t) {
    const double f = std::floor(t);
    return static_cast<std::int64_t>(f == t ? f - 1 : f);
  };
  const std::int64_t a = below(v.lo);
  const std::int64_t b = below(v.hi);
  if (a != b) throw std::runtime_error("rounding-sensitive bound in " + what);
  return a;
}

inline std::int64_t certified_floor(Interval v, const std::string& what) {
  const auto a = static_cast<std::int64_t>(std::floor(v.lo));
  const auto b = static_cast<std::int64_t>(std::floor(v.hi));
  if (a != b) throw std::runtime_error("rounding-sensitive bound in " + what);
  return a;
}

inline std::int64_t certified_ceil(Interval v, const std::string& what) {
  const auto a = static_cast<std::int64_t>(std::ceil(v.lo));
  const auto b = static_cast<std::int64_t>(std::ceil(v.hi));
  if (a != b) throw std::runtime_error("rounding-sensitive bound in " + what);
  return a;
}

}  // namespace expdioph
