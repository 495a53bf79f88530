#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entropy_extremes/bounds.hpp"
#include "entropy_extremes/errors.hpp"
#include "entropy_extremes/extremal.hpp"
#include "entropy_extremes/order.hpp"
#include "entropy_extremes/prob_vec.hpp"

namespace entropy_extremes {

// A discrete memoryless channel: a row-stochastic |X| x |Y| matrix of
// transition probabilities P(y|x). Rows are validated as probability vectors.
class Channel {
 public:
  explicit Channel(const std::vector<std::vector<double>>& matrix) {
    if (matrix.size() < 2) {
      throw DimensionTooSmall("channel needs at least 2 input symbols, got " +
                              std::to_string(matrix.size()));
    }
    rows_.reserve(matrix.size());
    for (std::size_t x = 0; x < matrix.size(); ++x) {
      if (matrix[x].size() != matrix[0].size()) {
        throw DimensionMismatch("channel row " + std::to_string(x) + " has " +
                                std::to_string(matrix[x].size()) + " entries, expected " +
                                std::to_string(matrix[0].size()));
      }
      try {
        rows_.emplace_back(matrix[x]);
      } catch (const Error& e) {
        throw NotADistribution("channel row " + std::to_string(x) + ": " + e.what());
      }
    }
  }

  int input_size() const noexcept { return static_cast<int>(rows_.size()); }
  int output_size() const noexcept { return rows_.front().size(); }

  // Transition probability P(y|x).
  double at(int x, int y) const noexcept { return rows_[static_cast<std::size_t>(x)][y]; }
  const ProbVec& row(int x) const noexcept { return rows_[static_cast<std::size_t>(x)]; }

 private:
  std::vector<ProbVec> rows_;
};

struct ChannelClass {
  bool dispersive;
  bool focusing;
  bool strongly_symmetric;
};

namespace detail {

inline bool same_multiset(std::vector<double> a, std::vector<double> b, double tolerance) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tolerance) return false;
  }
  return true;
}

}  // namespace detail

// Uniformly dispersive: every row is a permutation of the first row.
// Uniformly focusing: every column is a permutation of the first column.
// Strongly symmetric: both at once.
inline ChannelClass classify(const Channel& ch, double tolerance = 1e-9) {
  const int nx = ch.input_size();
  const int ny = ch.output_size();
  bool dispersive = true;
  for (int x = 1; x < nx && dispersive; ++x) {
    dispersive = detail::same_multiset(ch.row(0).entries(), ch.row(x).entries(), tolerance);
  }
  auto column = [&](int y) {
    std::vector<double> col(static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x) col[static_cast<std::size_t>(x)] = ch.at(x, y);
    return col;
  };
  bool focusing = true;
  const std::vector<double> col0 = column(0);
  for (int y = 1; y < ny && focusing; ++y) {
    focusing = detail::same_multiset(col0, column(y), tolerance);
  }
  return ChannelClass{dispersive, focusing, dispersive && focusing};
}

// Input distribution, output marginal and the Bayes posterior P(x|y) for
// every output with positive marginal (outputs that cannot occur carry no
// posterior and are excluded from expectations).
struct JointState {
  Channel channel;
  ProbVec input;
  ProbVec output_marginal;
  std::vector<std::optional<ProbVec>> posterior;
};

inline JointState posterior_state(const Channel& ch, const ProbVec& input) {
  const int nx = ch.input_size();
  const int ny = ch.output_size();
  if (input.size() != nx) {
    throw DimensionMismatch("input has " + std::to_string(input.size()) + " entries, channel expects " +
                            std::to_string(nx));
  }
  std::vector<double> marginal(static_cast<std::size_t>(ny), 0.0);
  for (int y = 0; y < ny; ++y) {
    for (int x = 0; x < nx; ++x) marginal[static_cast<std::size_t>(y)] += input[x] * ch.at(x, y);
  }
  std::vector<std::optional<ProbVec>> posterior(static_cast<std::size_t>(ny));
  for (int y = 0; y < ny; ++y) {
    const double py = marginal[static_cast<std::size_t>(y)];
    if (py <= 0.0) continue;
    std::vector<double> row(static_cast<std::size_t>(nx));
    for (int x = 0; x < nx; ++x) row[static_cast<std::size_t>(x)] = input[x] * ch.at(x, y) / py;
    posterior[static_cast<std::size_t>(y)] = ProbVec(std::move(row));
  }
  return JointState{ch, input, ProbVec(std::move(marginal)), std::move(posterior)};
}

// Conditional entropy of the input given the output. Shannon order averages
// the posterior entropies; a finite order alpha uses Arimoto's form
// (alpha/(1-alpha)) ln E_Y[ ||P(.|Y)||_alpha ].
inline double conditional_entropy(const JointState& state, Order order) {
  if (order.is_infinity()) {
    throw InvalidOrder("conditional entropy is provided for finite and Shannon orders only");
  }
  const int ny = state.channel.output_size();
  if (order.is_shannon()) {
    double h = 0.0;
    for (int y = 0; y < ny; ++y) {
      const auto& post = state.posterior[static_cast<std::size_t>(y)];
      if (post) h += state.output_marginal[y] * shannon_entropy(*post);
    }
    return h;
  }
  const double a = order.alpha();
  double expected_norm = 0.0;
  for (int y = 0; y < ny; ++y) {
    const auto& post = state.posterior[static_cast<std::size_t>(y)];
    if (post) expected_norm += state.output_marginal[y] * alpha_norm(*post, order);
  }
  return a / (1.0 - a) * std::log(expected_norm);
}

// Order-alpha mutual information I_alpha(X; Y) = H_alpha(X) - H_alpha(X|Y).
inline double mutual_information_alpha(const JointState& state, Order order) {
  return renyi_entropy(state.input, order) - conditional_entropy(state, order);
}

// Gallager's E0: -ln sum_y ( sum_x P(x) P(y|x)^(1/(1+rho)) )^(1+rho).
inline double gallager_e0(const Channel& ch, const ProbVec& input, double rho) {
  if (!std::isfinite(rho) || !(rho > -1.0)) {
    throw RhoOutOfRange("rho must be finite and > -1, got " + std::to_string(rho));
  }
  if (input.size() != ch.input_size()) {
    throw DimensionMismatch("input has " + std::to_string(input.size()) + " entries, channel expects " +
                            std::to_string(ch.input_size()));
  }
  const double s = 1.0 / (1.0 + rho);
  double total = 0.0;
  for (int y = 0; y < ch.output_size(); ++y) {
    double inner = 0.0;
    for (int x = 0; x < ch.input_size(); ++x) {
      const double t = ch.at(x, y);
      if (t > tol::kZeroFloor) inner += input[x] * std::pow(t, s);
    }
    if (inner > 0.0) total += std::pow(inner, 1.0 + rho);
  }
  return -std::log(total);
}

namespace detail {

// 1/(1+rho) as an Order; rho of exactly 0 (or close enough that the quotient
// rounds to 1) is the Shannon limit.
inline Order e0_order(double rho) {
  const double a = 1.0 / (1.0 + rho);
  if (a == 1.0) return Order::shannon();
  return Order::finite(a);
}

}  // namespace detail

// The E0 sandwich for a uniformly focusing channel under the uniform input:
// rho * D_{1/(1+rho)}(q || u_n) evaluated at the V/W family members whose
// Shannon entropy matches H(X|Y) brackets E0 from below/above for every
// rho > -1 (the divergence sandwich and the sign of rho flip together).
inline BoundReport e0_bounds(const Channel& ch, double rho) {
  if (!std::isfinite(rho) || !(rho > -1.0)) {
    throw RhoOutOfRange("rho must be finite and > -1, got " + std::to_string(rho));
  }
  if (!classify(ch).focusing) {
    throw NotFocusing("E0 bounds require a uniformly focusing channel");
  }
  const int n = ch.input_size();
  const ProbVec input = ProbVec::uniform(n);
  const JointState state = posterior_state(ch, input);
  const double hxy = conditional_entropy(state, Order::shannon());
  const ProbVec vhat = v_dist(n, inverse_entropy(family_v(n), hxy));
  const ProbVec what = w_dist(n, inverse_entropy(family_w(n), hxy));
  const Order order = detail::e0_order(rho);
  return BoundReport{"gallager-e0",
                     gallager_e0(ch, input, rho),
                     rho * renyi_divergence_from_uniform(vhat, order),
                     rho * renyi_divergence_from_uniform(what, order),
                     vhat,
                     what};
}

// Circulant channel built from cyclic shifts of one row; strongly symmetric
// by construction, hence uniformly focusing.
inline Channel circulant_channel(const ProbVec& first_row) {
  const int n = first_row.size();
  std::vector<std::vector<double>> matrix(static_cast<std::size_t>(n),
                                          std::vector<double>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      matrix[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = first_row[(y + x) % n];
    }
  }
  return Channel(matrix);
}

}  // namespace entropy_extremes
