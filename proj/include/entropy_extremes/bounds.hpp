#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "entropy_extremes/errors.hpp"
#include "entropy_extremes/extremal.hpp"
#include "entropy_extremes/order.hpp"
#include "entropy_extremes/prob_vec.hpp"

namespace entropy_extremes {

// alpha-logarithm: ln_a(x) = (x^(1-a) - 1)/(1 - a), with ln_1 = ln. Written
// via expm1 so values of a near 1 do not cancel catastrophically.
inline double alpha_log(double a, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw NonPositiveArgument("alpha_log needs x > 0, got " + std::to_string(x));
  }
  if (a == 1.0) return std::log(x);
  return std::expm1((1.0 - a) * std::log(x)) / (1.0 - a);
}

// ln_b(x)/ln_b(y) - ln_a(x)/ln_a(y) for a < b and 1 <= x <= y, y != 1.
// Nonnegative, and zero exactly when x = 1 or x = y.
inline double alpha_log_ratio_gap(double a, double b, double x, double y) {
  if (!(a < b) || !(x >= 1.0) || !(x <= y) || y == 1.0) {
    throw DomainViolation("ratio gap needs a < b and 1 <= x <= y with y != 1");
  }
  return alpha_log(b, x) / alpha_log(b, y) - alpha_log(a, x) / alpha_log(a, y);
}

// A two-sided bound with the family members that attain each side.
struct BoundReport {
  std::string measure;
  double value;
  double lower;
  double upper;
  ProbVec attaining_lower;
  ProbVec attaining_upper;
};

enum class MeasureKind { renyi, tsallis, type_beta, gamma_entropy, r_norm, alpha_norm };

// One row of the measure table: a strictly monotone transform f_t applied to
// the l_alpha norm, with the norm order tied to t (1/t for the gamma
// entropy, t itself otherwise).
class MeasureSpec {
 public:
  MeasureSpec(MeasureKind kind, Order order) : kind_(kind), order_(order) {
    if (kind_ == MeasureKind::alpha_norm) {
      if (order_.is_shannon()) {
        throw InvalidOrder("order 1 is excluded: the l1 norm of a distribution is identically 1");
      }
      return;
    }
    if (!order_.is_finite()) {
      throw InvalidOrder(name() + " needs a finite order t > 0, t != 1 (order 1 is the Shannon limit, "
                                  "handled by the dedicated Shannon operations)");
    }
  }

  MeasureKind kind() const noexcept { return kind_; }
  Order order() const noexcept { return order_; }

  Order norm_order() const {
    if (kind_ == MeasureKind::gamma_entropy) return Order::finite(1.0 / order_.alpha());
    return order_;
  }

  // f_t applied to a norm value x.
  double transform(double x) const {
    if (kind_ == MeasureKind::alpha_norm) return x;
    const double t = order_.alpha();
    switch (kind_) {
      case MeasureKind::renyi:
        return t / (1.0 - t) * std::log(x);
      case MeasureKind::tsallis:
        return (std::pow(x, t) - 1.0) / (1.0 - t);
      case MeasureKind::type_beta:
        return (std::pow(x, t) - 1.0) / (std::exp2(1.0 - t) - 1.0);
      case MeasureKind::gamma_entropy:
        return (1.0 - x) / (1.0 - std::exp2(t - 1.0));
      case MeasureKind::r_norm:
        return t / (t - 1.0) * (1.0 - x);
      default:
        return x;
    }
  }

  // Direction of f_t in its t-regime: the gamma entropy flips relative to
  // the other four (decreasing for t < 1), the identity is always increasing.
  bool transform_increasing() const {
    if (kind_ == MeasureKind::alpha_norm) return true;
    const bool t_below_one = order_.alpha() < 1.0;
    return kind_ == MeasureKind::gamma_entropy ? !t_below_one : t_below_one;
  }

  std::string name() const {
    switch (kind_) {
      case MeasureKind::renyi:
        return "renyi";
      case MeasureKind::tsallis:
        return "tsallis";
      case MeasureKind::type_beta:
        return "type-beta";
      case MeasureKind::gamma_entropy:
        return "gamma";
      case MeasureKind::r_norm:
        return "r-norm";
      case MeasureKind::alpha_norm:
      default:
        return "alpha-norm";
    }
  }

 private:
  MeasureKind kind_;
  Order order_;
};

inline double measure_value(const ProbVec& p, const MeasureSpec& spec) {
  return spec.transform(alpha_norm(p, spec.norm_order()));
}

// Norm sandwich at fixed Shannon entropy: among all distributions with the
// same entropy as p, the W family minimizes the l_alpha norm and the V
// family maximizes it.
inline BoundReport norm_bounds_at_entropy(const ProbVec& p, Order order) {
  if (order.is_shannon()) {
    throw ShannonOrderUnsupported("order 1 gives constant norm 1; no bound to compute");
  }
  const int n = p.size();
  const double h = shannon_entropy(p);
  const double pv = inverse_entropy(family_v(n), h);
  const double pw = inverse_entropy(family_w(n), h);
  BoundReport report{"alpha-norm",
                     alpha_norm(p, order),
                     norm_profile(family_w(n), pw, order),
                     norm_profile(family_v(n), pv, order),
                     w_dist(n, pw),
                     v_dist(n, pv)};
  return report;
}

// Entropy sandwich at fixed l_alpha norm. The families swap roles across
// order 1: for alpha < 1 the V member is the entropy minimizer, for
// alpha > 1 the W member is.
inline BoundReport entropy_bounds_at_norm(const ProbVec& p, Order order) {
  if (order.is_shannon()) {
    throw ShannonOrderUnsupported("order 1 gives constant norm 1; it pins no entropy bound");
  }
  if (!order.is_finite()) {
    throw InvalidOrder("entropy bounds at fixed norm are only provided for finite orders");
  }
  const int n = p.size();
  const double target = alpha_norm(p, order);
  const double pv = inverse_norm(family_v(n), target, order);
  const double pw = inverse_norm(family_w(n), target, order);
  const double hv = entropy_profile(family_v(n), pv);
  const double hw = entropy_profile(family_w(n), pw);
  const double value = shannon_entropy(p);
  if (order.alpha() < 1.0) {
    return BoundReport{"shannon-entropy", value, hv, hw, v_dist(n, pv), w_dist(n, pw)};
  }
  return BoundReport{"shannon-entropy", value, hw, hv, w_dist(n, pw), v_dist(n, pv)};
}

// Monotone-transform extension of the norm sandwich: apply f_t to both norm
// endpoints, swapping them when f_t is decreasing. The endpoint values are
// f_t of the norm_bounds_at_entropy endpoints, bit for bit.
inline BoundReport measure_bounds_at_entropy(const ProbVec& p, const MeasureSpec& spec) {
  BoundReport base = norm_bounds_at_entropy(p, spec.norm_order());
  const double value = spec.transform(base.value);
  const double f_lower = spec.transform(base.lower);
  const double f_upper = spec.transform(base.upper);
  if (spec.transform_increasing()) {
    return BoundReport{spec.name(), value, f_lower, f_upper, std::move(base.attaining_lower),
                       std::move(base.attaining_upper)};
  }
  return BoundReport{spec.name(), value, f_upper, f_lower, std::move(base.attaining_upper),
                     std::move(base.attaining_lower)};
}

// D_alpha(p || u_n) = ln n - H_alpha(p), clamped at the theoretical floor 0.
inline double renyi_divergence_from_uniform(const ProbVec& p, Order order) {
  const double d = std::log(static_cast<double>(p.size())) - renyi_entropy(p, order);
  return d < 0.0 ? 0.0 : d;
}

// Divergence-from-uniform sandwich at fixed Shannon entropy. Divergence is
// ln n minus a Renyi entropy, so the V/W roles are the reverse of the
// Renyi-entropy bounds: for alpha < 1 the V member minimizes divergence.
inline BoundReport renyi_divergence_bounds(const ProbVec& p, Order order) {
  if (order.is_shannon()) {
    throw ShannonOrderUnsupported("divergence bounds need a finite order != 1");
  }
  if (!order.is_finite()) {
    throw InvalidOrder("divergence bounds are only provided for finite orders");
  }
  const int n = p.size();
  const double h = shannon_entropy(p);
  ProbVec vbar = v_dist(n, inverse_entropy(family_v(n), h));
  ProbVec wbar = w_dist(n, inverse_entropy(family_w(n), h));
  const double dv = renyi_divergence_from_uniform(vbar, order);
  const double dw = renyi_divergence_from_uniform(wbar, order);
  const double value = renyi_divergence_from_uniform(p, order);
  if (order.alpha() < 1.0) {
    return BoundReport{"renyi-divergence", value, dv, dw, std::move(vbar), std::move(wbar)};
  }
  return BoundReport{"renyi-divergence", value, dw, dv, std::move(wbar), std::move(vbar)};
}

}  // namespace entropy_extremes
