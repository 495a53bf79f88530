#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "entropy_extremes/bounds.hpp"

using namespace entropy_extremes;

TEST_CASE("generalized logarithm values") {
  REQUIRE(alpha_log(1.0, 3.0) == std::log(3.0));
  REQUIRE(alpha_log(0.5, 4.0) == Catch::Approx(2.0).margin(1e-14));
  REQUIRE(alpha_log(2.0, 4.0) == Catch::Approx(0.75).margin(1e-14));
  REQUIRE(alpha_log(2.0, 1.0) == 0.0);
  REQUIRE(alpha_log(-1.0, 2.0) == Catch::Approx(1.5).margin(1e-14));
  REQUIRE_THROWS_AS(alpha_log(2.0, 0.0), NonPositiveArgument);
  REQUIRE_THROWS_AS(alpha_log(2.0, -1.0), NonPositiveArgument);
  // continuous through the natural-log case.
  REQUIRE(alpha_log(1.0 - 1e-9, 3.0) == Catch::Approx(std::log(3.0)).margin(1e-8));
  REQUIRE(alpha_log(1.0 + 1e-9, 3.0) == Catch::Approx(std::log(3.0)).margin(1e-8));
  // strictly decreasing in the order for arguments above 1.
  REQUIRE(alpha_log(0.5, 3.0) > std::log(3.0));
  REQUIRE(alpha_log(2.0, 3.0) < std::log(3.0));
}

TEST_CASE("log-ratio gap reference value and domain") {
  REQUIRE(alpha_log_ratio_gap(0.5, 2.0, 2.0, 3.0) ==
          Catch::Approx(0.18417375120630207).margin(1e-13));
  REQUIRE_THROWS_AS(alpha_log_ratio_gap(2.0, 0.5, 2.0, 3.0), DomainViolation);
  REQUIRE_THROWS_AS(alpha_log_ratio_gap(2.0, 2.0, 2.0, 3.0), DomainViolation);
  REQUIRE_THROWS_AS(alpha_log_ratio_gap(0.5, 2.0, 0.9, 3.0), DomainViolation);
  REQUIRE_THROWS_AS(alpha_log_ratio_gap(0.5, 2.0, 3.0, 2.0), DomainViolation);
  REQUIRE_THROWS_AS(alpha_log_ratio_gap(0.5, 2.0, 1.0, 1.0), DomainViolation);
}

TEST_CASE("log-ratio gap is nonnegative with equality at the edges") {
  std::mt19937_64 eng(7);
  std::uniform_real_distribution<double> da(-2.0, 3.0);
  std::uniform_real_distribution<double> du(0.0, 1.0);
  for (int i = 0; i < 5000; ++i) {
    const double a = da(eng);
    const double b = a + 1e-3 + 2.0 * du(eng);
    const double y = 1.0 + 1e-6 + 9.0 * du(eng);
    const double x = 1.0 + (y - 1.0) * du(eng);
    REQUIRE(alpha_log_ratio_gap(a, b, x, y) >= -1e-12);
    REQUIRE(std::abs(alpha_log_ratio_gap(a, b, 1.0, y)) <= 1e-12);
    REQUIRE(std::abs(alpha_log_ratio_gap(a, b, y, y)) <= 1e-12);
  }
}

TEST_CASE("measure specs validate their orders") {
  REQUIRE_THROWS_AS(MeasureSpec(MeasureKind::alpha_norm, Order::shannon()), InvalidOrder);
  REQUIRE_NOTHROW(MeasureSpec(MeasureKind::alpha_norm, Order::infinity()));
  REQUIRE_THROWS_AS(MeasureSpec(MeasureKind::renyi, Order::infinity()), InvalidOrder);
  REQUIRE_THROWS_AS(MeasureSpec(MeasureKind::tsallis, Order::shannon()), InvalidOrder);
  REQUIRE(MeasureSpec(MeasureKind::renyi, Order::finite(2.0)).name() == "renyi");
  REQUIRE(MeasureSpec(MeasureKind::type_beta, Order::finite(2.0)).name() == "type-beta");
  REQUIRE(MeasureSpec(MeasureKind::gamma_entropy, Order::finite(2.0)).name() == "gamma");
  REQUIRE(MeasureSpec(MeasureKind::r_norm, Order::finite(2.0)).name() == "r-norm");
  // the gamma measure reads the norm at the reciprocal order.
  REQUIRE(MeasureSpec(MeasureKind::gamma_entropy, Order::finite(2.0)).norm_order().alpha() == 0.5);
  REQUIRE(MeasureSpec(MeasureKind::renyi, Order::finite(2.0)).norm_order().alpha() == 2.0);
}

TEST_CASE("measure transform direction") {
  REQUIRE(MeasureSpec(MeasureKind::renyi, Order::finite(0.5)).transform_increasing());
  REQUIRE(!MeasureSpec(MeasureKind::renyi, Order::finite(2.0)).transform_increasing());
  REQUIRE(MeasureSpec(MeasureKind::tsallis, Order::finite(0.5)).transform_increasing());
  REQUIRE(!MeasureSpec(MeasureKind::tsallis, Order::finite(2.0)).transform_increasing());
  REQUIRE(MeasureSpec(MeasureKind::gamma_entropy, Order::finite(2.0)).transform_increasing());
  REQUIRE(!MeasureSpec(MeasureKind::gamma_entropy, Order::finite(0.5)).transform_increasing());
  REQUIRE(MeasureSpec(MeasureKind::alpha_norm, Order::finite(2.0)).transform_increasing());
}

TEST_CASE("measure reference values on the uniform vector") {
  const ProbVec u4 = ProbVec::uniform(4);
  REQUIRE(measure_value(u4, MeasureSpec(MeasureKind::tsallis, Order::finite(2.0))) ==
          Catch::Approx(0.75).margin(1e-14));
  REQUIRE(measure_value(u4, MeasureSpec(MeasureKind::gamma_entropy, Order::finite(2.0))) ==
          Catch::Approx(3.0).margin(1e-13));
  REQUIRE(measure_value(u4, MeasureSpec(MeasureKind::type_beta, Order::finite(2.0))) ==
          Catch::Approx(1.5).margin(1e-14));
  REQUIRE(measure_value(ProbVec::uniform(2), MeasureSpec(MeasureKind::r_norm, Order::finite(2.0))) ==
          Catch::Approx(2.0 * (1.0 - std::sqrt(0.5))).margin(1e-14));
  REQUIRE(measure_value(ProbVec({0.5, 0.25, 0.25}), MeasureSpec(MeasureKind::renyi, Order::finite(0.5))) ==
          Catch::Approx(1.0695999934791407).margin(1e-14));
  REQUIRE(measure_value(u4, MeasureSpec(MeasureKind::alpha_norm, Order::finite(2.0))) ==
          Catch::Approx(0.5).margin(1e-14));
}

TEST_CASE("norm bounds collapse on the uniform vector") {
  const BoundReport rep = norm_bounds_at_entropy(ProbVec::uniform(4), Order::finite(2.0));
  REQUIRE(rep.measure == "alpha-norm");
  REQUIRE(rep.value == Catch::Approx(0.5).margin(1e-12));
  REQUIRE(rep.lower == Catch::Approx(0.5).margin(1e-12));
  REQUIRE(rep.upper == Catch::Approx(0.5).margin(1e-12));
  REQUIRE(rep.attaining_lower.size() == 4);
  REQUIRE(rep.attaining_upper.size() == 4);
}

TEST_CASE("norm bounds sandwich random vectors at matched entropy") {
  for (double a : {0.5, 2.0}) {
    const Order ord = Order::finite(a);
    for (int i = 0; i < 300; ++i) {
      const ProbVec p = sample_simplex_at(5, 11, static_cast<std::uint64_t>(i));
      const BoundReport rep = norm_bounds_at_entropy(p, ord);
      REQUIRE(rep.value == alpha_norm(p, ord));
      REQUIRE(rep.lower <= rep.value + 1e-9);
      REQUIRE(rep.value <= rep.upper + 1e-9);
      // the attaining vectors really sit at the same Shannon entropy.
      const double h = shannon_entropy(p);
      REQUIRE(std::abs(shannon_entropy(rep.attaining_lower) - h) <= 1e-9);
      REQUIRE(std::abs(shannon_entropy(rep.attaining_upper) - h) <= 1e-9);
      // and they realize the bounds.
      REQUIRE(std::abs(alpha_norm(rep.attaining_lower, ord) - rep.lower) <= 1e-12);
      REQUIRE(std::abs(alpha_norm(rep.attaining_upper, ord) - rep.upper) <= 1e-12);
    }
  }
  REQUIRE_THROWS_AS(norm_bounds_at_entropy(ProbVec::uniform(3), Order::shannon()),
                    ShannonOrderUnsupported);
}

TEST_CASE("max-entry norm bounds work through the infinity order") {
  for (int i = 0; i < 200; ++i) {
    const ProbVec p = sample_simplex_at(4, 12, static_cast<std::uint64_t>(i));
    const BoundReport rep = norm_bounds_at_entropy(p, Order::infinity());
    REQUIRE(rep.lower <= p.max_entry() + 1e-9);
    REQUIRE(p.max_entry() <= rep.upper + 1e-9);
  }
}

TEST_CASE("entropy bounds at fixed norm flip across order one") {
  const ProbVec p({0.5, 0.3, 0.2});
  const double h = shannon_entropy(p);
  const BoundReport below = entropy_bounds_at_norm(p, Order::finite(0.5));
  REQUIRE(below.measure == "shannon-entropy");
  REQUIRE(below.value == h);
  REQUIRE(below.lower <= h + 1e-9);
  REQUIRE(h <= below.upper + 1e-9);
  const BoundReport above = entropy_bounds_at_norm(p, Order::finite(2.0));
  REQUIRE(above.lower <= h + 1e-9);
  REQUIRE(h <= above.upper + 1e-9);
  // attaining vectors carry the bound entropies and match the norm of p.
  for (const BoundReport* rep : {&below, &above}) {
    REQUIRE(std::abs(shannon_entropy(rep->attaining_lower) - rep->lower) <= 1e-9);
    REQUIRE(std::abs(shannon_entropy(rep->attaining_upper) - rep->upper) <= 1e-9);
  }
  REQUIRE(std::abs(alpha_norm(below.attaining_lower, Order::finite(0.5)) -
                   alpha_norm(p, Order::finite(0.5))) <= 1e-9);
  REQUIRE(std::abs(alpha_norm(above.attaining_upper, Order::finite(2.0)) -
                   alpha_norm(p, Order::finite(2.0))) <= 1e-9);
  // for orders below 1 the one-heavy family pins the minimum entropy; above 1
  // it pins the maximum. The two reports agree on the value but swap shapes.
  REQUIRE(below.lower <= above.upper + 1e-9);
  REQUIRE_THROWS_AS(entropy_bounds_at_norm(p, Order::shannon()), ShannonOrderUnsupported);
  REQUIRE_THROWS_AS(entropy_bounds_at_norm(p, Order::infinity()), InvalidOrder);
}

TEST_CASE("measure bounds are the exact transform of the norm bounds") {
  const std::vector<MeasureSpec> specs = {
      MeasureSpec(MeasureKind::renyi, Order::finite(0.5)),
      MeasureSpec(MeasureKind::renyi, Order::finite(2.0)),
      MeasureSpec(MeasureKind::tsallis, Order::finite(0.5)),
      MeasureSpec(MeasureKind::tsallis, Order::finite(2.0)),
      MeasureSpec(MeasureKind::type_beta, Order::finite(2.0)),
      MeasureSpec(MeasureKind::gamma_entropy, Order::finite(0.5)),
      MeasureSpec(MeasureKind::gamma_entropy, Order::finite(2.0)),
      MeasureSpec(MeasureKind::r_norm, Order::finite(2.0)),
  };
  for (const MeasureSpec& spec : specs) {
    for (int i = 0; i < 50; ++i) {
      const ProbVec p = sample_simplex_at(6, 13, static_cast<std::uint64_t>(i));
      const BoundReport base = norm_bounds_at_entropy(p, spec.norm_order());
      const BoundReport rep = measure_bounds_at_entropy(p, spec);
      REQUIRE(rep.measure == spec.name());
      REQUIRE(rep.value == measure_value(p, spec));
      if (spec.transform_increasing()) {
        REQUIRE(rep.lower == spec.transform(base.lower));
        REQUIRE(rep.upper == spec.transform(base.upper));
      } else {
        REQUIRE(rep.lower == spec.transform(base.upper));
        REQUIRE(rep.upper == spec.transform(base.lower));
      }
      REQUIRE(rep.lower <= rep.value + 1e-9);
      REQUIRE(rep.value <= rep.upper + 1e-9);
    }
  }
}

TEST_CASE("divergence from uniform reference values") {
  REQUIRE(renyi_divergence_from_uniform(ProbVec({0.5, 0.3, 0.2}), Order::finite(2.0)) ==
          Catch::Approx(0.13102826240640409).margin(1e-13));
  REQUIRE(renyi_divergence_from_uniform(ProbVec::uniform(5), Order::finite(2.0)) <= 1e-15);
  REQUIRE(renyi_divergence_from_uniform(ProbVec::uniform(5), Order::finite(0.5)) <= 1e-15);
  REQUIRE(renyi_divergence_from_uniform(ProbVec::deterministic(5), Order::finite(2.0)) ==
          Catch::Approx(std::log(5.0)).margin(1e-14));
  // order 1 reduces to relative entropy from the uniform vector.
  const ProbVec p({0.5, 0.3, 0.2});
  REQUIRE(renyi_divergence_from_uniform(p, Order::shannon()) ==
          Catch::Approx(std::log(3.0) - shannon_entropy(p)).margin(1e-14));
}

TEST_CASE("divergence bounds swap orientation across order one") {
  for (double a : {0.5, 2.0}) {
    const Order ord = Order::finite(a);
    for (int i = 0; i < 200; ++i) {
      const ProbVec p = sample_simplex_at(6, 14, static_cast<std::uint64_t>(i));
      const BoundReport rep = renyi_divergence_bounds(p, ord);
      REQUIRE(rep.measure == "renyi-divergence");
      REQUIRE(rep.value == renyi_divergence_from_uniform(p, ord));
      REQUIRE(rep.lower <= rep.value + 1e-9);
      REQUIRE(rep.value <= rep.upper + 1e-9);
      REQUIRE(std::abs(renyi_divergence_from_uniform(rep.attaining_lower, ord) - rep.lower) <=
              1e-12);
      REQUIRE(std::abs(renyi_divergence_from_uniform(rep.attaining_upper, ord) - rep.upper) <=
              1e-12);
    }
  }
}

TEST_CASE("repeat-rate bounds contain a coarse ternary grid") {
  // the repeat rate (index of coincidence) is the squared order-2 norm, an
  // increasing function of it, so the squared bounds must contain the grid.
  const Order two = Order::finite(2.0);
  for (int i = 0; i <= 50; ++i) {
    for (int j = 0; j <= 50 - i; ++j) {
      const double p1 = i / 50.0;
      const double p2 = j / 50.0;
      const ProbVec p({p1, p2, 1.0 - p1 - p2});
      const double repeat_rate = alpha_norm(p, two) * alpha_norm(p, two);
      const BoundReport rep = norm_bounds_at_entropy(p, two);
      REQUIRE(rep.lower * rep.lower - 1e-9 <= repeat_rate);
      REQUIRE(repeat_rate <= rep.upper * rep.upper + 1e-9);
    }
  }
}
