#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "entropy_extremes/channel.hpp"

using namespace entropy_extremes;

namespace {

Channel bsc(double e) {
  return Channel({{1.0 - e, e}, {e, 1.0 - e}});
}

}  // namespace

TEST_CASE("channel construction validates the matrix") {
  const Channel ch = bsc(0.1);
  REQUIRE(ch.input_size() == 2);
  REQUIRE(ch.output_size() == 2);
  REQUIRE(ch.at(0, 0) == 0.9);
  REQUIRE(ch.at(1, 0) == 0.1);
  REQUIRE(ch.row(0)[1] == Catch::Approx(0.1).margin(1e-15));
  REQUIRE_THROWS_AS(Channel({{1.0, 0.0}}), DimensionTooSmall);
  REQUIRE_THROWS_AS(Channel({{0.5, 0.5}, {1.0}}), DimensionMismatch);
  REQUIRE_THROWS_AS(Channel({{0.5, 0.5}, {0.6, 0.6}}), NotADistribution);
  REQUIRE_THROWS_AS(Channel({{0.5, 0.5}, {1.2, -0.2}}), NotADistribution);
}

TEST_CASE("classification by row and column multisets") {
  SECTION("symmetric crossover channel has every symmetry") {
    const ChannelClass c = classify(bsc(0.1));
    REQUIRE(c.dispersive);
    REQUIRE(c.focusing);
    REQUIRE(c.strongly_symmetric);
  }
  SECTION("row-permuted rows only: dispersive") {
    const ChannelClass c = classify(Channel({{0.6, 0.4}, {0.4, 0.6}, {0.6, 0.4}}));
    REQUIRE(c.dispersive);
    REQUIRE(!c.focusing);
    REQUIRE(!c.strongly_symmetric);
  }
  SECTION("column-permuted columns only: focusing") {
    const ChannelClass c = classify(Channel({{0.2, 0.8}, {0.8, 0.2}, {0.5, 0.5}}));
    REQUIRE(!c.dispersive);
    REQUIRE(c.focusing);
    REQUIRE(!c.strongly_symmetric);
  }
  SECTION("no symmetry at all") {
    const ChannelClass c = classify(Channel({{0.5, 0.5}, {1.0, 0.0}}));
    REQUIRE(!c.dispersive);
    REQUIRE(!c.focusing);
    REQUIRE(!c.strongly_symmetric);
  }
  SECTION("tolerance widens the multiset comparison") {
    const Channel near = Channel({{0.6, 0.4}, {0.4 + 1e-6, 0.6 - 1e-6}});
    REQUIRE(!classify(near).dispersive);
    REQUIRE(classify(near, 1e-5).dispersive);
  }
}

TEST_CASE("cyclic-shift channels are strongly symmetric") {
  const Channel ch = circulant_channel(ProbVec({0.7, 0.2, 0.1}));
  REQUIRE(ch.input_size() == 3);
  // row normalization may shave an ulp off entries, so compare with margins.
  REQUIRE(ch.at(0, 0) == Catch::Approx(0.7).margin(1e-15));
  REQUIRE(ch.at(1, 0) == Catch::Approx(0.2).margin(1e-15));
  REQUIRE(ch.at(1, 2) == Catch::Approx(0.7).margin(1e-15));
  REQUIRE(ch.at(2, 1) == Catch::Approx(0.7).margin(1e-15));
  const ChannelClass c = classify(ch);
  REQUIRE(c.dispersive);
  REQUIRE(c.focusing);
  REQUIRE(c.strongly_symmetric);
}

TEST_CASE("posterior state from channel and input") {
  SECTION("uniform input over a symmetric channel") {
    const JointState st = posterior_state(bsc(0.1), ProbVec::uniform(2));
    REQUIRE(st.output_marginal[0] == Catch::Approx(0.5).margin(1e-15));
    REQUIRE(st.posterior[0].has_value());
    REQUIRE((*st.posterior[0])[0] == Catch::Approx(0.9).margin(1e-14));
    REQUIRE((*st.posterior[1])[1] == Catch::Approx(0.9).margin(1e-14));
  }
  SECTION("skewed input reweights the posterior") {
    const JointState st = posterior_state(bsc(0.1), ProbVec({0.8, 0.2}));
    REQUIRE(st.output_marginal[0] == Catch::Approx(0.74).margin(1e-14));
    REQUIRE((*st.posterior[0])[0] == Catch::Approx(0.72 / 0.74).margin(1e-14));
  }
  SECTION("unreachable outputs carry no posterior") {
    const Channel ch({{0.5, 0.5, 0.0}, {0.5, 0.5, 0.0}});
    const JointState st = posterior_state(ch, ProbVec::uniform(2));
    REQUIRE(st.output_marginal[2] == 0.0);
    REQUIRE(!st.posterior[2].has_value());
    REQUIRE(st.posterior[0].has_value());
  }
  SECTION("input dimension must match") {
    REQUIRE_THROWS_AS(posterior_state(bsc(0.1), ProbVec::uniform(3)), DimensionMismatch);
  }
}

TEST_CASE("conditional entropy for Shannon and finite orders") {
  const JointState st = posterior_state(bsc(0.1), ProbVec::uniform(2));
  REQUIRE(conditional_entropy(st, Order::shannon()) ==
          Catch::Approx(0.32508297339144824).margin(1e-14));
  // order 2 collapses to -ln of the posterior collision probability here.
  REQUIRE(conditional_entropy(st, Order::finite(2.0)) ==
          Catch::Approx(-std::log(0.82)).margin(1e-14));
  REQUIRE_THROWS_AS(conditional_entropy(st, Order::infinity()), InvalidOrder);

  // a lossless channel leaves no conditional uncertainty.
  const JointState clean = posterior_state(Channel({{1.0, 0.0}, {0.0, 1.0}}), ProbVec::uniform(2));
  REQUIRE(conditional_entropy(clean, Order::shannon()) == 0.0);
  REQUIRE(conditional_entropy(clean, Order::finite(0.5)) == Catch::Approx(0.0).margin(1e-14));

  // unreachable outputs are skipped in the average.
  const JointState gap = posterior_state(Channel({{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}}),
                                         ProbVec::uniform(2));
  REQUIRE(conditional_entropy(gap, Order::shannon()) ==
          Catch::Approx(0.5 * std::log(2.0)).margin(1e-14));
}

TEST_CASE("order-alpha mutual information") {
  const Channel ch = circulant_channel(ProbVec({0.7, 0.2, 0.1}));
  const JointState st = posterior_state(ch, ProbVec::uniform(3));
  REQUIRE(mutual_information_alpha(st, Order::finite(2.0)) ==
          Catch::Approx(0.48242614924429271).margin(1e-13));
  REQUIRE(mutual_information_alpha(st, Order::shannon()) ==
          Catch::Approx(std::log(3.0) - shannon_entropy(ProbVec({0.7, 0.2, 0.1}))).margin(1e-13));
}

TEST_CASE("error exponent function values and domain") {
  const Channel ch = bsc(0.1);
  const ProbVec u = ProbVec::uniform(2);
  REQUIRE(gallager_e0(ch, u, 1.0) == Catch::Approx(0.22314355131420976).margin(1e-13));
  REQUIRE(gallager_e0(ch, u, 0.0) == Catch::Approx(0.0).margin(1e-14));
  REQUIRE(gallager_e0(ch, u, -0.5) < 0.0);
  REQUIRE_THROWS_AS(gallager_e0(ch, u, -1.0), RhoOutOfRange);
  REQUIRE_THROWS_AS(gallager_e0(ch, u, -2.0), RhoOutOfRange);
  REQUIRE_THROWS_AS(gallager_e0(ch, u, HUGE_VAL), RhoOutOfRange);
  REQUIRE_THROWS_AS(gallager_e0(ch, ProbVec::uniform(3), 1.0), DimensionMismatch);
}

TEST_CASE("error exponent over rho matches order-alpha information") {
  // under the uniform input E0(rho)/rho equals I_alpha at alpha = 1/(1+rho).
  for (const ProbVec& row : {ProbVec({0.7, 0.2, 0.1}), ProbVec({0.5, 0.25, 0.25})}) {
    const Channel ch = circulant_channel(row);
    const ProbVec u = ProbVec::uniform(3);
    const JointState st = posterior_state(ch, u);
    for (double rho : {-0.9, -0.5, 0.5, 1.0, 2.0, 8.0}) {
      const double lhs = gallager_e0(ch, u, rho) / rho;
      const double rhs = mutual_information_alpha(st, Order::finite(1.0 / (1.0 + rho)));
      REQUIRE(lhs == Catch::Approx(rhs).margin(1e-12));
    }
  }
}

TEST_CASE("error exponent bounds sandwich and attain") {
  SECTION("sandwich on a symmetric channel for both rho signs") {
    const Channel ch = bsc(0.1);
    for (double rho : {-0.9, -0.5, 0.5, 1.0, 2.0, 8.0}) {
      const BoundReport rep = e0_bounds(ch, rho);
      REQUIRE(rep.measure == "gallager-e0");
      REQUIRE(rep.lower <= rep.value + 1e-9);
      REQUIRE(rep.value <= rep.upper + 1e-9);
    }
  }
  SECTION("channels built from the extremal families sit on their bound") {
    for (double rho : {-0.5, 0.5, 2.0}) {
      const Channel heavy = circulant_channel(v_dist(4, 0.15));
      const BoundReport hv = e0_bounds(heavy, rho);
      REQUIRE(std::abs(hv.value - hv.lower) <= 1e-9);
      const Channel flat = circulant_channel(w_dist(4, 0.4));
      const BoundReport hw = e0_bounds(flat, rho);
      REQUIRE(std::abs(hw.value - hw.upper) <= 1e-9);
    }
  }
  SECTION("rejects non-focusing channels and bad rho") {
    REQUIRE_THROWS_AS(e0_bounds(Channel({{0.5, 0.5}, {1.0, 0.0}}), 1.0), NotFocusing);
    REQUIRE_THROWS_AS(e0_bounds(bsc(0.1), -1.0), RhoOutOfRange);
  }
}
