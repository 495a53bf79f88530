#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "entropy_extremes/errors.hpp"
#include "entropy_extremes/order.hpp"
#include "entropy_extremes/prob_vec.hpp"

namespace entropy_extremes {

// The two one-parameter families that trace the boundary of the
// entropy-vs-norm region:
//   V: one mass 1-(n-1)p plus n-1 equal masses p,    p in [0, 1/(n-1)]
//   W: floor(1/p) masses p, one remainder, zeros,    p in [1/n, 1]
// Both sweep Shannon entropy over [0, ln n]; V's entropy is strictly
// increasing on [0, 1/n] (the inversion domain) and W's is strictly
// decreasing on [1/n, 1].
enum class FamilyKind { v, w };

struct ExtremalFamily {
  FamilyKind kind;
  int n;
};

inline ExtremalFamily family_v(int n) {
  if (n < 2) throw DimensionTooSmall("family needs n >= 2, got " + std::to_string(n));
  return {FamilyKind::v, n};
}

inline ExtremalFamily family_w(int n) {
  if (n < 2) throw DimensionTooSmall("family needs n >= 2, got " + std::to_string(n));
  return {FamilyKind::w, n};
}

namespace detail {

inline constexpr double kParamSlack = 1e-12;
inline constexpr int kBisectionCap = 200;

// W's entropy profile is quadratically flat just above each breakpoint 1/m,
// so a target within rounding noise of ln m cannot pin the parameter by
// bisection (the error blows up to ~sqrt(ulp)). Targets this close to ln m
// are answered with the exact breakpoint parameter instead.
inline constexpr double kBreakpointSnap = 2e-15;

inline double xlnx(double t) { return t > tol::kZeroFloor ? t * std::log(t) : 0.0; }

// floor(1/p) with a snap to the nearest integer: floating-point p = 1/m often
// lands at m - 1ulp, and plain floor would then drop a whole mass.
inline int floor_inverse(double p, int n) {
  const double inv = 1.0 / p;
  const double nearest = std::round(inv);
  double floored;
  if (std::abs(inv - nearest) <= 1e-12) {
    floored = nearest;
  } else {
    floored = std::floor(inv);
  }
  if (floored < 1.0) return 1;
  if (floored > static_cast<double>(n)) return n;
  return static_cast<int>(floored);
}

inline double check_v_param(int n, double p) {
  const double hi = 1.0 / (n - 1);
  if (!(p >= -kParamSlack) || !(p <= hi + kParamSlack)) {
    throw ParamOutOfRange("V-family parameter " + std::to_string(p) + " outside [0, 1/(n-1)] for n = " +
                          std::to_string(n));
  }
  return std::min(std::max(p, 0.0), hi);
}

inline double check_w_param(int n, double p) {
  const double lo = 1.0 / n;
  if (!(p >= lo - kParamSlack) || !(p <= 1.0 + kParamSlack)) {
    throw ParamOutOfRange("W-family parameter " + std::to_string(p) + " outside [1/n, 1] for n = " +
                          std::to_string(n));
  }
  return std::min(std::max(p, lo), 1.0);
}

// Remainder mass 1 - m*p, with sub-tolerance dust written as an exact 0 so
// w at a breakpoint p = 1/m is genuinely uniform on m symbols.
inline double w_remainder(int m, double p) {
  double r = 1.0 - m * p;
  if (std::abs(r) <= 1e-12) r = 0.0;
  return r < 0.0 ? 0.0 : r;
}

// Shared numerically-stable form of ((k1*t1^a + k2*t2^a))^(1/a) scaled by the
// dominant entry; also covers the Shannon and max-entry variants.
inline double two_term_norm(double k1, double t1, double k2, double t2, Order order) {
  if (order.is_shannon()) return 1.0;
  const double top = std::max(t1, t2);
  if (order.is_infinity()) return top;
  const double a = order.alpha();
  if (a > tol::kAlphaAsInfinity) return top;
  double s = 0.0;
  if (k1 > 0.0 && t1 > tol::kZeroFloor) s += k1 * std::pow(t1 / top, a);
  if (k2 > 0.0 && t2 > tol::kZeroFloor) s += k2 * std::pow(t2 / top, a);
  return top * std::pow(s, 1.0 / a);
}

}  // namespace detail

inline ProbVec v_dist(int n, double p) {
  if (n < 2) throw DimensionTooSmall("family needs n >= 2, got " + std::to_string(n));
  p = detail::check_v_param(n, p);
  std::vector<double> e(static_cast<std::size_t>(n), p);
  double first = 1.0 - (n - 1) * p;
  if (std::abs(first) <= 1e-12) first = 0.0;
  e[0] = first < 0.0 ? 0.0 : first;
  return ProbVec(std::move(e));
}

inline ProbVec w_dist(int n, double p) {
  if (n < 2) throw DimensionTooSmall("family needs n >= 2, got " + std::to_string(n));
  p = detail::check_w_param(n, p);
  const int m = detail::floor_inverse(p, n);
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < m; ++i) e[static_cast<std::size_t>(i)] = p;
  if (m < n) e[static_cast<std::size_t>(m)] = detail::w_remainder(m, p);
  return ProbVec(std::move(e));
}

inline ProbVec family_dist(ExtremalFamily f, double p) {
  return f.kind == FamilyKind::v ? v_dist(f.n, p) : w_dist(f.n, p);
}

// Closed-form Shannon entropy along a family (never materializes the vector).
inline double entropy_profile(ExtremalFamily f, double p) {
  if (f.kind == FamilyKind::v) {
    p = detail::check_v_param(f.n, p);
    const double a = 1.0 - (f.n - 1) * p;
    return -(detail::xlnx(a) + (f.n - 1) * detail::xlnx(p)) + 0.0;
  }
  p = detail::check_w_param(f.n, p);
  const int m = detail::floor_inverse(p, f.n);
  const double r = detail::w_remainder(m, p);
  return -(m * detail::xlnx(p) + detail::xlnx(r)) + 0.0;
}

// Closed-form l_alpha norm along a family.
inline double norm_profile(ExtremalFamily f, double p, Order order) {
  if (f.kind == FamilyKind::v) {
    p = detail::check_v_param(f.n, p);
    const double a = 1.0 - (f.n - 1) * p;
    return detail::two_term_norm(static_cast<double>(f.n - 1), p, 1.0, a, order);
  }
  p = detail::check_w_param(f.n, p);
  const int m = detail::floor_inverse(p, f.n);
  const double r = detail::w_remainder(m, p);
  return detail::two_term_norm(static_cast<double>(m), p, m < f.n ? 1.0 : 0.0, r, order);
}

namespace detail {

// Bisection on [lo, hi] for a continuous strictly monotone f, run until the
// interval collapses to adjacent doubles (or the iteration cap). Direction is
// inferred from the bracket endpoint values.
template <class Fn>
inline double bisect_monotone(double lo, double hi, double flo, double fhi, double target, Fn&& f) {
  const bool increasing = fhi >= flo;
  for (int it = 0; it < kBisectionCap; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if ((fm < target) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// Inverse of the entropy profile. V is inverted on [0, 1/n] (where the
// profile is strictly increasing), W on [1/n, 1] bracket by bracket: the
// profile equals ln m at p = 1/m, so m = ceil(exp(h)) pins the bracket
// [1/m, 1/(m-1)] up to a +-1 scan.
inline double inverse_entropy(ExtremalFamily f, double h) {
  const double hmax = std::log(static_cast<double>(f.n));
  if (!(h >= -1e-12) || !(h <= hmax + 1e-12)) {
    throw EntropyOutOfRange("entropy " + std::to_string(h) + " outside [0, ln n] for n = " +
                            std::to_string(f.n));
  }
  const double uniform_param = 1.0 / f.n;
  if (f.kind == FamilyKind::v) {
    if (h <= 1e-12) return 0.0;
    if (h >= hmax - 1e-12) return uniform_param;
    return detail::bisect_monotone(0.0, uniform_param, 0.0, hmax, h,
                                   [&](double p) { return entropy_profile(f, p); });
  }
  if (h <= 1e-12) return 1.0;
  if (h >= hmax - 1e-12) return uniform_param;
  int bracket = 0;
  const int guess = static_cast<int>(std::ceil(std::exp(h)));
  for (int m = guess - 1; m <= guess + 1 && bracket == 0; ++m) {
    if (m < 2 || m > f.n) continue;
    if (h >= std::log(static_cast<double>(m - 1)) - 1e-9 && h <= std::log(static_cast<double>(m)) + 1e-9) {
      bracket = m;
    }
  }
  for (int m = 2; m <= f.n && bracket == 0; ++m) {
    if (h <= std::log(static_cast<double>(m)) + 1e-9) bracket = m;
  }
  const double lo = 1.0 / bracket;
  const double hi = 1.0 / (bracket - 1);
  const double flo = std::log(static_cast<double>(bracket));
  const double fhi = std::log(static_cast<double>(bracket - 1));
  if (std::abs(h - flo) <= detail::kBreakpointSnap) return lo;
  if (std::abs(h - fhi) <= detail::kBreakpointSnap) return hi;
  return detail::bisect_monotone(lo, hi, flo, fhi, h,
                                 [&](double p) { return entropy_profile(f, p); });
}

// Inverse of the norm profile at a finite or infinite order. The norm is
// strictly monotone in the parameter on each family's inversion domain
// (per bracket for W), in the direction set by the sign of alpha - 1.
inline double inverse_norm(ExtremalFamily f, double target, Order order) {
  if (order.is_shannon()) {
    throw ShannonOrderUnsupported("order 1 gives constant norm 1; there is nothing to invert");
  }
  const double uniform_param = 1.0 / f.n;
  const double norm_at_uniform = norm_profile(f, uniform_param, order);  // n^(1/alpha - 1)
  const double lo_norm = std::min(1.0, norm_at_uniform);
  const double hi_norm = std::max(1.0, norm_at_uniform);
  if (!(target >= lo_norm - 1e-12) || !(target <= hi_norm + 1e-12)) {
    throw NormOutOfRange("norm target " + std::to_string(target) + " outside [" +
                         std::to_string(lo_norm) + ", " + std::to_string(hi_norm) + "]");
  }
  target = std::min(std::max(target, lo_norm), hi_norm);
  if (std::abs(target - norm_at_uniform) <= 1e-12) return uniform_param;
  if (f.kind == FamilyKind::v) {
    if (std::abs(target - 1.0) <= 1e-12) return 0.0;
    return detail::bisect_monotone(0.0, uniform_param, 1.0, norm_at_uniform, target,
                                   [&](double p) { return norm_profile(f, p, order); });
  }
  if (std::abs(target - 1.0) <= 1e-12) return 1.0;
  // Locate the bracket [1/m, 1/(m-1)] whose endpoint norms (the uniform-on-m
  // and uniform-on-(m-1) values) straddle the target, then bisect inside it.
  for (int m = f.n; m >= 2; --m) {
    const double lo = 1.0 / m;
    const double hi = 1.0 / (m - 1);
    const double norm_lo = norm_profile(f, lo, order);
    const double norm_hi = norm_profile(f, hi, order);
    if (target >= std::min(norm_lo, norm_hi) - 1e-12 && target <= std::max(norm_lo, norm_hi) + 1e-12) {
      const double mid = detail::bisect_monotone(lo, hi, norm_lo, norm_hi, target,
                                                 [&](double p) { return norm_profile(f, p, order); });
      // For alpha < 1 the remainder entry gives the profile a root-type cusp
      // at the upper knot, so bisection can stall a hair short of it in value
      // space. Hand back whichever of the knots and the bisection point
      // reproduces the target best.
      double best = mid;
      double best_err = std::abs(norm_profile(f, mid, order) - target);
      for (double knot : {lo, hi}) {
        const double err = std::abs(norm_profile(f, knot, order) - target);
        if (err < best_err) {
          best = knot;
          best_err = err;
        }
      }
      return best;
    }
  }
  throw NormOutOfRange("no W-family bracket contains norm target " + std::to_string(target));
}

// A family point bundled with its entropy and (decreasing) distribution.
struct ExtremalProfile {
  ExtremalFamily family;
  double param;
  double entropy;
  ProbVec dist;
};

inline ExtremalProfile profile_at(ExtremalFamily f, double p) {
  return ExtremalProfile{f, p, entropy_profile(f, p), rearrange_decreasing(family_dist(f, p))};
}

}  // namespace entropy_extremes
