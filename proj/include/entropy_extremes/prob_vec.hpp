#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "entropy_extremes/errors.hpp"
#include "entropy_extremes/order.hpp"

namespace entropy_extremes {

namespace tol {
// Validated vectors sum to 1 within this bound.
inline constexpr double kSum = 1e-12;
// Raw input may be off by this much before it is rejected.
inline constexpr double kInputSum = 1e-9;
// Negative rounding dust no larger than this is clamped to zero.
inline constexpr double kNegativeDust = 1e-12;
// Entries below this are treated as exact zeros (0 ln 0 = 0, and p^alpha
// would underflow anyway).
inline constexpr double kZeroFloor = 1e-300;
// Finite orders beyond this behave like the max-entry norm.
inline constexpr double kAlphaAsInfinity = 1e6;
}  // namespace tol

// An n-ary probability vector: entries in [0, 1] summing to 1. Immutable
// after construction; construction clamps negative dust and folds the sum
// residual into the largest entry.
class ProbVec {
 public:
  explicit ProbVec(std::vector<double> values) : entries_(std::move(values)) {
    if (entries_.size() < 2) {
      throw DimensionTooSmall("probability vector needs at least 2 entries, got " +
                              std::to_string(entries_.size()));
    }
    double sum = 0.0;
    for (double& v : entries_) {
      if (!std::isfinite(v) || v < -tol::kNegativeDust) {
        throw NotADistribution("entry " + std::to_string(v) + " is not a probability");
      }
      if (v < 0.0) v = 0.0;
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol::kInputSum) {
      throw NotADistribution("entries sum to " + std::to_string(sum) + ", expected 1");
    }
    auto largest = std::max_element(entries_.begin(), entries_.end());
    *largest += 1.0 - sum;
    if (*largest > 1.0) *largest = 1.0;
    if (*largest < 0.0) *largest = 0.0;
  }

  static ProbVec uniform(int n) {
    require_dimension(n);
    return ProbVec(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
  }

  static ProbVec deterministic(int n) {
    require_dimension(n);
    std::vector<double> v(static_cast<std::size_t>(n), 0.0);
    v[0] = 1.0;
    return ProbVec(std::move(v));
  }

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  double operator[](int i) const noexcept { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& entries() const noexcept { return entries_; }
  std::vector<double>::const_iterator begin() const noexcept { return entries_.begin(); }
  std::vector<double>::const_iterator end() const noexcept { return entries_.end(); }

  double max_entry() const noexcept { return *std::max_element(entries_.begin(), entries_.end()); }

 private:
  friend ProbVec rearrange_decreasing(const ProbVec& p);

  struct presorted_tag {};
  ProbVec(std::vector<double> values, presorted_tag) : entries_(std::move(values)) {}

  static void require_dimension(int n) {
    if (n < 2) throw DimensionTooSmall("alphabet size must be at least 2, got " + std::to_string(n));
  }

  std::vector<double> entries_;
};

// The decreasing rearrangement: same multiset of entries, sorted
// non-increasing (ties keep their original relative order).
inline ProbVec rearrange_decreasing(const ProbVec& p) {
  std::vector<double> sorted = p.entries();
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<double>());
  // A permutation cannot change the sum, so skip revalidation.
  return ProbVec(std::move(sorted), ProbVec::presorted_tag{});
}

namespace detail {

// Entries sorted ascending. Every measure below iterates in this fixed order,
// which makes results exactly invariant under permutations of the input and
// accumulates the small terms first.
inline std::vector<double> ascending_entries(const ProbVec& p) {
  std::vector<double> sorted = p.entries();
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace detail

// Shannon entropy in nats, -sum p_i ln p_i with 0 ln 0 = 0.
inline double shannon_entropy(const ProbVec& p) {
  double h = 0.0;
  for (double t : detail::ascending_entries(p)) {
    if (t > tol::kZeroFloor) h -= t * std::log(t);
  }
  return h + 0.0;  // normalize -0 from the all-deterministic case
}

// l_alpha norm: (sum p_i^alpha)^(1/alpha) for finite alpha, the max entry at
// infinity, and identically 1 at order 1 (any probability vector has unit
// l1 norm). The finite case factors out the max entry so that large alpha
// cannot underflow the whole sum.
inline double alpha_norm(const ProbVec& p, Order order) {
  if (order.is_shannon()) return 1.0;
  const std::vector<double> asc = detail::ascending_entries(p);
  const double top = asc.back();
  if (order.is_infinity()) return top;
  const double a = order.alpha();
  if (a > tol::kAlphaAsInfinity) return top;
  double s = 0.0;
  for (double t : asc) {
    if (t > tol::kZeroFloor) s += std::pow(t / top, a);
  }
  return top * std::pow(s, 1.0 / a);
}

// Renyi entropy of the given order in nats; the Shannon variant is the
// alpha -> 1 limit and infinity gives the min-entropy -ln max p_i.
inline double renyi_entropy(const ProbVec& p, Order order) {
  switch (order.kind()) {
    case Order::Kind::shannon:
      return shannon_entropy(p);
    case Order::Kind::infinity:
      return -std::log(alpha_norm(p, order));
    case Order::Kind::finite:
    default: {
      const double a = order.alpha();
      return a / (1.0 - a) * std::log(alpha_norm(p, order));
    }
  }
}

namespace detail {

// SplitMix64 finalizer; used to derive independent per-sample seeds so that
// sample i is the same no matter how the index range is sharded.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline double uniform01(std::mt19937_64& eng) noexcept {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// The index-addressable form of sample_simplex: sample `index` of the stream
// identified by (n, seed). Exponential spacings: normalize n iid Exp(1) draws.
inline ProbVec sample_simplex_at(int n, std::uint64_t seed, std::uint64_t index) {
  if (n < 2) throw DimensionTooSmall("alphabet size must be at least 2, got " + std::to_string(n));
  std::mt19937_64 eng(detail::mix64(seed ^ detail::mix64(index)));
  std::vector<double> e(static_cast<std::size_t>(n));
  double sum = 0.0;
  do {
    sum = 0.0;
    for (double& v : e) {
      v = -std::log1p(-detail::uniform01(eng));
      sum += v;
    }
  } while (sum <= 0.0);
  for (double& v : e) v /= sum;
  return ProbVec(std::move(e));
}

// `count` points drawn uniformly from the probability simplex, deterministic
// per (n, seed) and independent of any sharding of the index range.
inline std::vector<ProbVec> sample_simplex(int n, int count, std::uint64_t seed) {
  if (count < 1) throw ParamOutOfRange("sample count must be positive, got " + std::to_string(count));
  std::vector<ProbVec> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out.push_back(sample_simplex_at(n, seed, static_cast<std::uint64_t>(i)));
  }
  return out;
}

}  // namespace entropy_extremes
