#pragma once

#include <cmath>

namespace convextest {

// Closed double intervals with outward rounding, used as a cheap filter in
// front of exact rational arithmetic. Every operation widens the naive
// result by one relative ulp plus an absolute tie-breaker, which dominates
// the half-ulp error of round-to-nearest, so the exact value always stays
// inside the interval. NaN endpoints (from inf - inf etc.) make sign()
// return "unknown", which simply routes the caller to the exact path.
struct Interval {
  double lo;
  double hi;
};

namespace detail {
constexpr double kRelUlp = 2.220446049250313e-16;  // 2^-52
constexpr double kAbsPad = 1e-300;

inline double pad_down(double x) { return x - (std::fabs(x) * kRelUlp + kAbsPad); }
inline double pad_up(double x) { return x + (std::fabs(x) * kRelUlp + kAbsPad); }
}  // namespace detail

inline Interval exact_interval(double x) { return {x, x}; }

inline Interval operator+(const Interval& a, const Interval& b) {
  return {detail::pad_down(a.lo + b.lo), detail::pad_up(a.hi + b.hi)};
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return {detail::pad_down(a.lo - b.hi), detail::pad_up(a.hi - b.lo)};
}

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator*(const Interval& a, const Interval& b) {
  double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  double lo = p1, hi = p1;
  if (p2 < lo) lo = p2;
  if (p3 < lo) lo = p3;
  if (p4 < lo) lo = p4;
  if (p2 > hi) hi = p2;
  if (p3 > hi) hi = p3;
  if (p4 > hi) hi = p4;
  return {detail::pad_down(lo), detail::pad_up(hi)};
}

// +1 / -1 when the sign is certain, 0 when the interval straddles zero or
// has NaN endpoints; `certain` reports which case occurred.
inline int interval_sign(const Interval& v, bool& certain) {
  if (v.lo > 0.0) {
    certain = true;
    return 1;
  }
  if (v.hi < 0.0) {
    certain = true;
    return -1;
  }
  certain = (v.lo == 0.0 && v.hi == 0.0);
  return 0;
}

}  // namespace convextest
