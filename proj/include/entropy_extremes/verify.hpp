#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "entropy_extremes/bounds.hpp"
#include "entropy_extremes/channel.hpp"
#include "entropy_extremes/errors.hpp"
#include "entropy_extremes/extremal.hpp"
#include "entropy_extremes/order.hpp"
#include "entropy_extremes/prob_vec.hpp"

namespace entropy_extremes {

struct VerifyOptions {
  int n = 5;
  long long samples = 100000;
  std::uint64_t seed = 42;
  double tolerance = 1e-9;
  int threads = 1;
};

struct CheckOutcome {
  std::string name;
  long long checks = 0;
  long long violations = 0;
};

namespace detail {

struct Tally {
  long long checks = 0;
  long long violations = 0;
};

inline void expect(Tally& tally, bool ok) {
  ++tally.checks;
  if (!ok) ++tally.violations;
}

// Runs body(index, tally) for index 0..count-1, sharded by stride across
// workers. Bodies draw all randomness from the index, so the aggregated
// integer counts do not depend on the number of workers.
template <class Body>
inline Tally run_sharded(long long count, int threads, const Body& body) {
  const int workers = static_cast<int>(std::max<long long>(
      1, std::min<long long>(threads, count)));
  if (workers == 1) {
    Tally tally;
    for (long long i = 0; i < count; ++i) body(i, tally);
    return tally;
  }
  std::vector<Tally> parts(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&body, &parts, w, count, workers] {
      Tally local;
      for (long long i = w; i < count; i += workers) body(i, local);
      parts[static_cast<std::size_t>(w)] = local;
    });
  }
  for (auto& worker : pool) worker.join();
  Tally total;
  for (const Tally& part : parts) {
    total.checks += part.checks;
    total.violations += part.violations;
  }
  return total;
}

inline std::uint64_t check_seed(std::uint64_t seed, std::uint64_t salt) {
  return mix64(seed ^ mix64(salt));
}

// Extra random draws inside a check body; offset so the stream never
// coincides with the sample_simplex_at stream for the same index.
inline std::mt19937_64 engine_at(std::uint64_t seed, long long index) {
  return std::mt19937_64(
      mix64(seed ^ mix64(static_cast<std::uint64_t>(index) + 0x9E3779B97F4A7C15ULL)));
}

inline double norm_range_endpoint(int n, const Order& order) {
  if (order.is_infinity()) return 1.0 / static_cast<double>(n);
  return std::pow(static_cast<double>(n), 1.0 / order.alpha() - 1.0);
}

}  // namespace detail

// Runs every module invariant as a named Monte-Carlo (or grid) check and
// reports one (checks, violations) pair per check. Deterministic in
// (n, samples, seed) and independent of the worker count.
inline std::vector<CheckOutcome> run_verification(const VerifyOptions& opts) {
  if (opts.n < 2) {
    throw DimensionTooSmall("verification needs n >= 2, got " + std::to_string(opts.n));
  }
  if (opts.samples < 1) {
    throw ParamOutOfRange("verification needs samples >= 1, got " +
                          std::to_string(opts.samples));
  }
  const int n = opts.n;
  const long long samples = opts.samples;
  const double tol = opts.tolerance;
  const int threads = std::max(1, opts.threads);
  const std::uint64_t seed = opts.seed;
  const double ln_n = std::log(static_cast<double>(n));

  auto clamped = [](long long v, long long lo, long long hi) {
    return std::max(lo, std::min(hi, v));
  };
  const long long grid = clamped(samples / 10, 1000, 10000);
  const long long medium = std::max<long long>(samples / 10, 500);
  const long long heavy = std::max<long long>(samples / 5, 500);
  const long long channels = std::max<long long>(samples / 50, 200);

  const std::vector<Order> norm_orders = {Order::finite(0.25), Order::finite(0.5),
                                          Order::finite(2.0), Order::finite(4.0),
                                          Order::infinity()};
  const std::vector<Order> finite_orders = {Order::finite(0.25), Order::finite(0.5),
                                            Order::finite(2.0), Order::finite(4.0)};
  std::vector<MeasureSpec> measure_specs;
  for (const MeasureKind kind : {MeasureKind::renyi, MeasureKind::tsallis, MeasureKind::type_beta,
                                 MeasureKind::gamma_entropy, MeasureKind::r_norm}) {
    measure_specs.emplace_back(kind, Order::finite(0.5));
    measure_specs.emplace_back(kind, Order::finite(2.0));
  }

  std::vector<CheckOutcome> report;
  auto add = [&report](std::string name, detail::Tally tally) {
    report.push_back(CheckOutcome{std::move(name), tally.checks, tally.violations});
  };

  {  // Samples lie on the simplex and are sized as requested.
    const std::uint64_t cs = detail::check_seed(seed, 1);
    add("simplex-sample-validity",
        detail::run_sharded(samples, threads, [&](long long i, detail::Tally& t) {
          const ProbVec p = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          bool ok = p.size() == n;
          double sum = 0.0;
          for (int k = 0; k < p.size(); ++k) {
            ok = ok && p[k] >= 0.0 && p[k] <= 1.0;
            sum += p[k];
          }
          detail::expect(t, ok && std::abs(sum - 1.0) <= 1e-12);
        }));
  }

  {  // Norm range [min(1, n^{1/a-1}), max(1, n^{1/a-1})] for every order.
    const std::uint64_t cs = detail::check_seed(seed, 2);
    add("simplex-norm-range",
        detail::run_sharded(samples, threads, [&](long long i, detail::Tally& t) {
          const ProbVec p = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          for (const Order& order : norm_orders) {
            const double endpoint = detail::norm_range_endpoint(n, order);
            const double value = alpha_norm(p, order);
            detail::expect(t, value >= std::min(1.0, endpoint) - tol &&
                                  value <= std::max(1.0, endpoint) + tol);
          }
        }));
  }

  {  // Entropy and norms are exactly invariant under rearrangement.
    const std::uint64_t cs = detail::check_seed(seed, 3);
    add("simplex-permutation-invariance",
        detail::run_sharded(samples, threads, [&](long long i, detail::Tally& t) {
          const ProbVec p = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          const ProbVec q = rearrange_decreasing(p);
          detail::expect(t, shannon_entropy(p) == shannon_entropy(q));
          for (const Order& order : norm_orders) {
            detail::expect(t, alpha_norm(p, order) == alpha_norm(q, order));
          }
        }));
  }

  {  // Entropy range [0, ln n], strict unless at the extreme points.
    const std::uint64_t cs = detail::check_seed(seed, 4);
    add("simplex-entropy-range",
        detail::run_sharded(samples, threads, [&](long long i, detail::Tally& t) {
          const ProbVec p = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          const double h = shannon_entropy(p);
          bool ok = h >= 0.0 && h <= ln_n + 1e-12;
          double off_uniform = 0.0;
          for (int k = 0; k < p.size(); ++k) {
            off_uniform = std::max(off_uniform, std::abs(p[k] - 1.0 / n));
          }
          if (off_uniform > 1e-6) ok = ok && h < ln_n;
          if (p.max_entry() < 1.0 - 1e-6) ok = ok && h > 0.0;
          detail::expect(t, ok);
        }));
  }

  {  // Uniform and deterministic endpoints of entropy and norm.
    detail::Tally t;
    for (int m = 2; m <= 8; ++m) {
      const ProbVec u = ProbVec::uniform(m);
      const ProbVec d = ProbVec::deterministic(m);
      detail::expect(t, std::abs(shannon_entropy(u) - std::log(static_cast<double>(m))) <= 1e-12);
      detail::expect(t, shannon_entropy(d) == 0.0);
      for (const Order& order : norm_orders) {
        detail::expect(t, std::abs(alpha_norm(u, order) - detail::norm_range_endpoint(m, order)) <=
                              1e-12);
        detail::expect(t, alpha_norm(d, order) == 1.0);
      }
    }
    add("simplex-endpoint-values", t);
  }

  {  // Large finite order approaches the max-entry norm.
    const std::uint64_t cs = detail::check_seed(seed, 6);
    add("simplex-infinity-limit",
        detail::run_sharded(std::min<long long>(samples, 20000), threads,
                            [&](long long i, detail::Tally& t) {
                              const ProbVec p =
                                  sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
                              detail::expect(t, std::abs(alpha_norm(p, Order::finite(64.0)) -
                                                         alpha_norm(p, Order::infinity())) <= 0.1);
                            }));
  }

  {  // Entropy profiles: strictly increasing along V, decreasing along W.
    detail::Tally t = detail::run_sharded(grid, threads, [&](long long i, detail::Tally& tt) {
      const double step = 1.0 / (n * static_cast<double>(grid));
      const double a = static_cast<double>(i) * step;
      const double b = static_cast<double>(i + 1) * step;
      detail::expect(tt, entropy_profile(family_v(n), a) < entropy_profile(family_v(n), b));
      const double span = 1.0 - 1.0 / n;
      const double wa = 1.0 / n + span * static_cast<double>(i) / static_cast<double>(grid);
      const double wb = 1.0 / n + span * static_cast<double>(i + 1) / static_cast<double>(grid);
      detail::expect(tt, entropy_profile(family_w(n), wa) > entropy_profile(family_w(n), wb));
    });
    add("extremal-entropy-monotone", t);
  }

  {  // Norm versus entropy moves with the documented direction on each family.
    detail::Tally t = detail::run_sharded(grid, threads, [&](long long i, detail::Tally& tt) {
      for (const ExtremalFamily fam : {family_v(n), family_w(n)}) {
        const bool is_v = fam.kind == FamilyKind::v;
        const double lo = is_v ? 0.0 : 1.0 / n;
        const double hi = is_v ? 1.0 / n : 1.0;
        const double a = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid);
        const double b = lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(grid);
        const double ha = entropy_profile(fam, a);
        const double hb = entropy_profile(fam, b);
        for (const double alpha : {0.5, 2.0}) {
          const double na = norm_profile(fam, a, Order::finite(alpha));
          const double nb = norm_profile(fam, b, Order::finite(alpha));
          // alpha < 1: norm increases with entropy; alpha > 1: decreases.
          const bool along_entropy = (hb > ha) == (alpha < 1.0);
          detail::expect(tt, (nb > na) == along_entropy);
        }
      }
    });
    add("extremal-norm-direction", t);
  }

  {  // Closed-form profiles agree with direct evaluation on the vectors.
    detail::Tally t = detail::run_sharded(grid + 1, threads, [&](long long i, detail::Tally& tt) {
      const double vspan = 1.0 / (n - 1);
      const double vp = vspan * static_cast<double>(i) / static_cast<double>(grid);
      const ProbVec v = v_dist(n, vp);
      detail::expect(tt, std::abs(entropy_profile(family_v(n), vp) - shannon_entropy(v)) <= 1e-14);
      const double wspan = 1.0 - 1.0 / n;
      const double wp = 1.0 / n + wspan * static_cast<double>(i) / static_cast<double>(grid);
      const ProbVec w = w_dist(n, wp);
      detail::expect(tt, std::abs(entropy_profile(family_w(n), wp) - shannon_entropy(w)) <= 1e-14);
      for (const Order& order :
           {Order::finite(0.5), Order::finite(2.0), Order::infinity()}) {
        detail::expect(tt, std::abs(norm_profile(family_v(n), vp, order) - alpha_norm(v, order)) <=
                               1e-13);
        detail::expect(tt, std::abs(norm_profile(family_w(n), wp, order) - alpha_norm(w, order)) <=
                               1e-13);
      }
    });
    add("extremal-profile-consistency", t);
  }

  {  // Entropy inversion round-trips to the original parameter.
    detail::Tally t = detail::run_sharded(grid + 1, threads, [&](long long i, detail::Tally& tt) {
      const double vp = (1.0 / n) * static_cast<double>(i) / static_cast<double>(grid);
      const double vh = entropy_profile(family_v(n), vp);
      detail::expect(tt, std::abs(inverse_entropy(family_v(n), vh) - vp) <= 1e-10);
      const double wp = 1.0 / n + (1.0 - 1.0 / n) * static_cast<double>(i) / static_cast<double>(grid);
      const double wh = entropy_profile(family_w(n), wp);
      detail::expect(tt, std::abs(inverse_entropy(family_w(n), wh) - wp) <= 1e-10);
    });
    add("extremal-roundtrip-entropy", t);
  }

  {  // Norm inversion round-trips to the original parameter.
    detail::Tally t = detail::run_sharded(grid + 1, threads, [&](long long i, detail::Tally& tt) {
      for (const double alpha : {0.5, 2.0, 4.0}) {
        const Order order = Order::finite(alpha);
        const double vp = (1.0 / n) * static_cast<double>(i) / static_cast<double>(grid);
        const double vt = norm_profile(family_v(n), vp, order);
        detail::expect(tt, std::abs(inverse_norm(family_v(n), vt, order) - vp) <= 1e-10);
        const double wp =
            1.0 / n + (1.0 - 1.0 / n) * static_cast<double>(i) / static_cast<double>(grid);
        const double wt = norm_profile(family_w(n), wp, order);
        detail::expect(tt, std::abs(inverse_norm(family_w(n), wt, order) - wp) <= 1e-10);
      }
    });
    add("extremal-roundtrip-norm", t);
  }

  {  // On the overlap of the parameter domains, sorted V equals W.
    detail::Tally t = detail::run_sharded(201, threads, [&](long long i, detail::Tally& tt) {
      const double lo = 1.0 / n;
      const double hi = 1.0 / (n - 1);
      const double p = lo + (hi - lo) * static_cast<double>(i) / 200.0;
      const ProbVec v = rearrange_decreasing(v_dist(n, p));
      const ProbVec w = w_dist(n, p);
      bool ok = true;
      for (int k = 0; k < n; ++k) ok = ok && std::abs(v[k] - w[k]) <= 1e-15;
      detail::expect(tt, ok);
    });
    add("extremal-family-overlap", t);
  }

  {  // W-profile breakpoints hit ln m exactly and continuously. Just below
    // 1/m the remainder entry is r = m*delta, so the profile approaches ln m
    // with modulus -r ln r; that exceeds a flat 1e-7 once m >= 6, hence the
    // side-specific tolerance.
    detail::Tally t;
    const double delta = 1e-9;
    for (int m = 2; m <= n; ++m) {
      const double ln_m = std::log(static_cast<double>(m));
      detail::expect(t, std::abs(entropy_profile(family_w(n), 1.0 / m) - ln_m) <= 1e-12);
      detail::expect(t, std::abs(entropy_profile(family_w(n), 1.0 / m + delta) - ln_m) <= 1e-7);
      if (1.0 / m - delta >= 1.0 / n) {
        const double r = m * delta;
        const double modulus = std::max(1e-7, -1.5 * r * std::log(r));
        detail::expect(t, std::abs(entropy_profile(family_w(n), 1.0 / m - delta) - ln_m) <= modulus);
      }
    }
    add("extremal-breakpoints", t);
  }

  {  // Norm sandwich at fixed entropy, with attainment by the reported vectors.
    const std::uint64_t cs = detail::check_seed(seed, 13);
    add("bounds-norm-sandwich",
        detail::run_sharded(samples, threads, [&](long long i, detail::Tally& t) {
          const ProbVec p = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          for (const Order& order : norm_orders) {
            const BoundReport rep = norm_bounds_at_entropy(p, order);
            detail::expect(t, rep.lower - tol <= rep.value && rep.value <= rep.upper + tol);
            detail::expect(t, std::abs(alpha_norm(rep.attaining_lower, order) - rep.lower) <= 1e-9 &&
                                  std::abs(alpha_norm(rep.attaining_upper, order) - rep.upper) <=
                                      1e-9);
          }
        }));
  }

  {  // Family members attain their own side of the norm sandwich.
    const std::uint64_t cs = detail::check_seed(seed, 14);
    add("bounds-tightness",
        detail::run_sharded(medium, threads, [&](long long i, detail::Tally& t) {
          std::mt19937_64 engine = detail::engine_at(cs, i);
          const double u = detail::uniform01(engine);
          const Order& order = norm_orders[static_cast<std::size_t>(i % 5)];
          if (i % 2 == 0) {
            const double param = u / (n - 1);
            const BoundReport rep = norm_bounds_at_entropy(v_dist(n, param), order);
            // Past 1/n the sorted V vector equals the W member at the same
            // parameter, so the attained side switches there.
            const double gap = param <= 1.0 / n ? rep.upper - rep.value : rep.value - rep.lower;
            detail::expect(t, std::abs(gap) <= 1e-9);
          } else {
            const double param = 1.0 / n + u * (1.0 - 1.0 / n);
            const BoundReport rep = norm_bounds_at_entropy(w_dist(n, param), order);
            detail::expect(t, std::abs(rep.value - rep.lower) <= 1e-9);
          }
        }));
  }

  {  // For n = 2 the sandwich collapses: lower and upper coincide.
    const std::uint64_t cs = detail::check_seed(seed, 15);
    add("bounds-n2-collapse",
        detail::run_sharded(medium, threads, [&](long long i, detail::Tally& t) {
          const ProbVec p = sample_simplex_at(2, cs, static_cast<std::uint64_t>(i));
          for (const Order& order : norm_orders) {
            const BoundReport rep = norm_bounds_at_entropy(p, order);
            detail::expect(t, std::abs(rep.upper - rep.lower) <= 1e-12);
          }
        }));
  }

  {  // Entropy sandwich at fixed norm, attained by the reported vectors.
    const std::uint64_t cs = detail::check_seed(seed, 16);
    add("bounds-entropy-sandwich",
        detail::run_sharded(heavy, threads, [&](long long i, detail::Tally& t) {
          const ProbVec p = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          const Order& order = finite_orders[static_cast<std::size_t>(i % 4)];
          const BoundReport rep = entropy_bounds_at_norm(p, order);
          detail::expect(t, rep.lower - tol <= rep.value && rep.value <= rep.upper + tol);
          detail::expect(t,
                         std::abs(shannon_entropy(rep.attaining_lower) - rep.lower) <= 1e-9 &&
                             std::abs(shannon_entropy(rep.attaining_upper) - rep.upper) <= 1e-9);
        }));
  }

  {  // Transformed measure bounds reuse the norm bounds bit for bit.
    const std::uint64_t cs = detail::check_seed(seed, 17);
    add("bounds-measure-consistency",
        detail::run_sharded(medium, threads, [&](long long i, detail::Tally& t) {
          const ProbVec p = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          const MeasureSpec& spec = measure_specs[static_cast<std::size_t>(i % 10)];
          const BoundReport base = norm_bounds_at_entropy(p, spec.norm_order());
          const BoundReport rep = measure_bounds_at_entropy(p, spec);
          const double lo = spec.transform(spec.transform_increasing() ? base.lower : base.upper);
          const double hi = spec.transform(spec.transform_increasing() ? base.upper : base.lower);
          detail::expect(t, rep.lower == lo && rep.upper == hi);
          detail::expect(t, rep.value == measure_value(p, spec));
          detail::expect(t, rep.lower - tol <= rep.value && rep.value <= rep.upper + tol);
        }));
  }

  {  // Deformed-log ratio gap is nonnegative, zero exactly at x in {1, y}.
    const std::uint64_t cs = detail::check_seed(seed, 18);
    add("bounds-alpha-log-gap",
        detail::run_sharded(samples, threads, [&](long long i, detail::Tally& t) {
          std::mt19937_64 engine = detail::engine_at(cs, i);
          const double a = -2.0 + 5.0 * detail::uniform01(engine);
          const double b = a + 1e-6 + 2.0 * detail::uniform01(engine);
          const double y = 1.0 + 9.0 * std::max(detail::uniform01(engine), 1e-9);
          const long long mode = i % 10;
          double x = 1.0 + (y - 1.0) * detail::uniform01(engine);
          if (mode == 0) x = 1.0;
          if (mode == 1) x = y;
          const double gap = alpha_log_ratio_gap(a, b, x, y);
          detail::expect(t, mode <= 1 ? std::abs(gap) <= 1e-12 : gap >= -1e-12);
        }));
  }

  {  // Each measure transform moves in its documented direction.
    const std::uint64_t cs = detail::check_seed(seed, 19);
    add("bounds-measure-direction",
        detail::run_sharded(medium, threads, [&](long long i, detail::Tally& t) {
          std::mt19937_64 engine = detail::engine_at(cs, i);
          const MeasureSpec& spec = measure_specs[static_cast<std::size_t>(i % 10)];
          const double x1 = 0.05 + 2.95 * detail::uniform01(engine);
          const double x2 = x1 + 0.01 + (3.0 - x1) * detail::uniform01(engine);
          detail::expect(t, (spec.transform(x2) > spec.transform(x1)) ==
                                spec.transform_increasing());
        }));
  }

  {  // Divergence-from-uniform sandwich at matched relative entropy.
    const std::uint64_t cs = detail::check_seed(seed, 20);
    add("bounds-divergence-sandwich",
        detail::run_sharded(heavy, threads, [&](long long i, detail::Tally& t) {
          const ProbVec p = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          const Order order = (i % 2 == 0) ? Order::finite(0.5) : Order::finite(2.0);
          const BoundReport rep = renyi_divergence_bounds(p, order);
          detail::expect(t, rep.lower - tol <= rep.value && rep.value <= rep.upper + tol);
          detail::expect(t, rep.value >= 0.0 && rep.lower >= -1e-12);
          detail::expect(
              t, std::abs(renyi_divergence_from_uniform(rep.attaining_lower, order) - rep.lower) <=
                         1e-9 &&
                     std::abs(renyi_divergence_from_uniform(rep.attaining_upper, order) -
                              rep.upper) <= 1e-9);
        }));
  }

  {  // Circulant channels classify as strongly symmetric, stably under
    // row and column permutations.
    const std::uint64_t cs = detail::check_seed(seed, 21);
    add("channel-classify",
        detail::run_sharded(channels, threads, [&](long long i, detail::Tally& t) {
          const ProbVec row = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          const Channel ch = circulant_channel(row);
          const ChannelClass cls = classify(ch);
          detail::expect(t, cls.dispersive && cls.focusing && cls.strongly_symmetric);
          std::mt19937_64 engine = detail::engine_at(cs, i);
          std::vector<int> rp(static_cast<std::size_t>(n));
          std::vector<int> cp(static_cast<std::size_t>(n));
          for (int k = 0; k < n; ++k) rp[static_cast<std::size_t>(k)] = cp[static_cast<std::size_t>(k)] = k;
          std::shuffle(rp.begin(), rp.end(), engine);
          std::shuffle(cp.begin(), cp.end(), engine);
          std::vector<std::vector<double>> shuffled(static_cast<std::size_t>(n),
                                                    std::vector<double>(static_cast<std::size_t>(n)));
          for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
              shuffled[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                  ch.at(rp[static_cast<std::size_t>(x)], cp[static_cast<std::size_t>(y)]);
            }
          }
          const ChannelClass cls2 = classify(Channel(shuffled));
          detail::expect(t, cls2.dispersive == cls.dispersive && cls2.focusing == cls.focusing);
          if (i == 0) {
            const ChannelClass neg = classify(Channel({{0.5, 0.5}, {1.0, 0.0}}));
            detail::expect(t, !neg.dispersive && !neg.focusing && !neg.strongly_symmetric);
          }
        }));
  }

  {  // Focusing + uniform input: uniform output marginal, and the conditional
    // entropy matches every single-output entropy.
    const std::uint64_t cs = detail::check_seed(seed, 22);
    add("channel-single-output-entropy",
        detail::run_sharded(channels, threads, [&](long long i, detail::Tally& t) {
          const ProbVec row = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          const JointState state = posterior_state(circulant_channel(row), ProbVec::uniform(n));
          bool marginal_ok = true;
          for (int y = 0; y < n; ++y) {
            marginal_ok = marginal_ok && std::abs(state.output_marginal[y] - 1.0 / n) <= 1e-12;
          }
          detail::expect(t, marginal_ok);
          for (const Order& order : {Order::finite(0.5), Order::shannon(), Order::finite(2.0)}) {
            const double joint = conditional_entropy(state, order);
            bool ok = true;
            for (int y = 0; y < n; ++y) {
              const auto& post = state.posterior[static_cast<std::size_t>(y)];
              ok = ok && post.has_value();
              if (!ok) break;
              const double single = order.is_shannon() ? shannon_entropy(*post)
                                                       : renyi_entropy(*post, order);
              ok = ok && std::abs(joint - single) <= 1e-12;
            }
            detail::expect(t, ok);
          }
        }));
  }

  {  // E0 divided by rho equals the order-1/(1+rho) mutual information.
    const std::uint64_t cs = detail::check_seed(seed, 23);
    add("channel-e0-identity",
        detail::run_sharded(channels, threads, [&](long long i, detail::Tally& t) {
          const ProbVec row = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          const Channel ch = circulant_channel(row);
          const ProbVec input = ProbVec::uniform(n);
          const JointState state = posterior_state(ch, input);
          for (const double rho : {-0.5, 0.25, 1.0, 4.0}) {
            const double e0 = gallager_e0(ch, input, rho);
            const double info = mutual_information_alpha(state, Order::finite(1.0 / (1.0 + rho)));
            detail::expect(t, std::abs(e0 / rho - info) <= 1e-10);
          }
        }));
  }

  {  // E0 sandwich between the V- and W-family divergences.
    const std::uint64_t cs = detail::check_seed(seed, 24);
    add("channel-e0-sandwich",
        detail::run_sharded(channels, threads, [&](long long i, detail::Tally& t) {
          const ProbVec row = sample_simplex_at(n, cs, static_cast<std::uint64_t>(i));
          const Channel ch = circulant_channel(row);
          for (const double rho : {-0.9, -0.5, 0.5, 1.0, 2.0, 8.0}) {
            const BoundReport rep = e0_bounds(ch, rho);
            detail::expect(t, rep.lower - tol <= rep.value && rep.value <= rep.upper + tol);
          }
        }));
  }

  return report;
}

inline long long total_violations(const std::vector<CheckOutcome>& report) {
  long long total = 0;
  for (const CheckOutcome& check : report) total += check.violations;
  return total;
}

inline std::string format_verification_report(const std::vector<CheckOutcome>& report) {
  std::size_t width = 0;
  for (const CheckOutcome& check : report) width = std::max(width, check.name.size());
  std::ostringstream out;
  long long checks = 0;
  long long violations = 0;
  for (const CheckOutcome& check : report) {
    out << check.name << std::string(width - check.name.size(), ' ') << "  checks="
        << check.checks << "  violations=" << check.violations << "\n";
    checks += check.checks;
    violations += check.violations;
  }
  out << "total" << std::string(width - 5, ' ') << "  checks=" << checks
      << "  violations=" << violations << "\n";
  out << (violations == 0 ? "result: PASS" : "result: FAIL") << "\n";
  return out.str();
}

}  // namespace entropy_extremes
