#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "entropy_extremes/bounds.hpp"
#include "entropy_extremes/channel.hpp"
#include "entropy_extremes/errors.hpp"
#include "entropy_extremes/extremal.hpp"
#include "entropy_extremes/order.hpp"
#include "entropy_extremes/prob_vec.hpp"

#include "json.hpp"

namespace entropy_extremes {

// Horizontal coordinate of a boundary plot. ShannonEntropy is x = H(q);
// RelEntropyFromUniform is x = ln n - H(q) = D(q || u_n); MutualInformation
// reads x = ln n - H(q) as I(X;Y) with H(q) playing H(X|Y).
enum class XAxis { shannon_entropy, rel_entropy_from_uniform, mutual_information };

struct RegionCurve {
  std::string label;  // "V" or "W"
  std::vector<std::array<double, 2>> points;
  int n;
  std::string measure;
  std::string order;
  XAxis x_axis;
};

namespace detail {

// Parameter grids shared by every boundary plot. Each node is (h, dist) with
// h the Shannon entropy of the family member; nodes are ordered by
// strictly increasing h.
struct FamilyNode {
  double entropy;
  ProbVec dist;
};

inline std::vector<FamilyNode> v_nodes(int n, int resolution) {
  const ExtremalFamily fam = family_v(n);
  const double hmax = std::log(static_cast<double>(n));
  std::vector<FamilyNode> nodes;
  nodes.reserve(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    const double h = hmax * static_cast<double>(i) / static_cast<double>(resolution - 1);
    nodes.push_back(FamilyNode{h, v_dist(n, inverse_entropy(fam, h))});
  }
  return nodes;
}

// W nodes walk the brackets [1/m, 1/(m-1)] in increasing entropy: interior
// points are equally spaced in entropy, breakpoints H = ln m are inserted
// exactly at parameter 1/m so the kinks of the curve are preserved.
inline std::vector<FamilyNode> w_nodes(int n, int resolution) {
  const ExtremalFamily fam = family_w(n);
  const int per_bracket = std::max(1, resolution / (n - 1));
  std::vector<FamilyNode> nodes;
  nodes.reserve(static_cast<std::size_t>((per_bracket + 1) * (n - 1) + 1));
  nodes.push_back(FamilyNode{0.0, w_dist(n, 1.0)});
  for (int m = 2; m <= n; ++m) {
    const double lo = std::log(static_cast<double>(m - 1));
    const double hi = std::log(static_cast<double>(m));
    for (int j = 1; j <= per_bracket; ++j) {
      const double h = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(per_bracket + 1);
      nodes.push_back(FamilyNode{h, w_dist(n, inverse_entropy(fam, h))});
    }
    nodes.push_back(FamilyNode{hi, w_dist(n, 1.0 / static_cast<double>(m))});
  }
  return nodes;
}

inline RegionCurve assemble_curve(std::string label, std::vector<FamilyNode> nodes, int n,
                                  std::string measure_name, std::string order_name, XAxis x_axis,
                                  const std::function<double(const ProbVec&)>& y_of) {
  const double hmax = std::log(static_cast<double>(n));
  RegionCurve curve{std::move(label), {}, n, std::move(measure_name), std::move(order_name), x_axis};
  curve.points.reserve(nodes.size());
  for (const FamilyNode& node : nodes) {
    const double x = x_axis == XAxis::shannon_entropy ? node.entropy : hmax - node.entropy;
    curve.points.push_back({x, y_of(node.dist)});
  }
  // Divergence-style axes reverse the entropy ordering.
  if (x_axis != XAxis::shannon_entropy) {
    std::reverse(curve.points.begin(), curve.points.end());
  }
  return curve;
}

}  // namespace detail

// Boundary polylines of the feasible (x, measure) region, traced along the V
// and W families. With the Shannon-entropy axis the vertical coordinate is
// the measure itself; with the divergence axis it is the Renyi divergence
// from uniform at the measure's order.
inline std::pair<RegionCurve, RegionCurve> boundary_curves(int n, const MeasureSpec& measure,
                                                           XAxis x_axis, int resolution = 512) {
  if (n < 2) throw DimensionTooSmall("region needs n >= 2, got " + std::to_string(n));
  if (resolution < 2) {
    throw ParamOutOfRange("resolution must be >= 2, got " + std::to_string(resolution));
  }
  if (x_axis == XAxis::mutual_information) {
    throw DomainViolation("mutual-information axis plots the Gallager exponent; use e0_boundary_curves");
  }
  std::function<double(const ProbVec&)> y_of;
  std::string measure_name;
  std::string order_name = to_string(measure.order());
  if (x_axis == XAxis::shannon_entropy) {
    y_of = [&measure](const ProbVec& q) { return measure_value(q, measure); };
    measure_name = measure.name();
  } else {
    const Order order = measure.order();
    y_of = [order](const ProbVec& q) { return renyi_divergence_from_uniform(q, order); };
    measure_name = "renyi-divergence";
  }
  return {detail::assemble_curve("V", detail::v_nodes(n, resolution), n, measure_name, order_name,
                                 x_axis, y_of),
          detail::assemble_curve("W", detail::w_nodes(n, resolution), n, measure_name, order_name,
                                 x_axis, y_of)};
}

// Gallager-exponent bounds versus mutual information for uniformly focusing
// channels under the uniform input: a family member with entropy h sits at
// x = ln n - h = I(X;Y) and y = rho * D_{1/(1+rho)}(q || u_n).
inline std::pair<RegionCurve, RegionCurve> e0_boundary_curves(int n, double rho,
                                                              int resolution = 512) {
  if (n < 2) throw DimensionTooSmall("region needs n >= 2, got " + std::to_string(n));
  if (resolution < 2) {
    throw ParamOutOfRange("resolution must be >= 2, got " + std::to_string(resolution));
  }
  if (!std::isfinite(rho) || !(rho > -1.0)) {
    throw RhoOutOfRange("rho must be finite and > -1, got " + std::to_string(rho));
  }
  const Order order = detail::e0_order(rho);
  auto y_of = [rho, order](const ProbVec& q) {
    return rho * renyi_divergence_from_uniform(q, order);
  };
  const std::string order_name = to_string(order);
  return {detail::assemble_curve("V", detail::v_nodes(n, resolution), n, "gallager-e0", order_name,
                                 XAxis::mutual_information, y_of),
          detail::assemble_curve("W", detail::w_nodes(n, resolution), n, "gallager-e0", order_name,
                                 XAxis::mutual_information, y_of)};
}

namespace detail {

inline std::string format_17g(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace detail

inline void emit_csv(const std::vector<RegionCurve>& curves, std::ostream& out) {
  if (curves.empty()) throw IoError("no curves to emit");
  out << "label,x,y,n,measure,order\n";
  for (const RegionCurve& curve : curves) {
    for (const auto& point : curve.points) {
      out << curve.label << ',' << detail::format_17g(point[0]) << ','
          << detail::format_17g(point[1]) << ',' << curve.n << ',' << curve.measure << ','
          << curve.order << '\n';
    }
  }
  if (!out) throw IoError("failed while writing curve rows");
}

inline void emit_csv(const std::vector<RegionCurve>& curves, const std::string& path) {
  if (curves.empty()) throw IoError("no curves to emit");
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out) throw IoError("cannot open for writing: " + path);
  emit_csv(curves, static_cast<std::ostream&>(out));
  out.flush();
  if (!out) throw IoError("failed to write: " + path);
}

inline nlohmann::ordered_json curves_to_json(const std::vector<RegionCurve>& curves) {
  if (curves.empty()) throw IoError("no curves to emit");
  nlohmann::ordered_json doc;
  doc["curves"] = nlohmann::ordered_json::array();
  for (const RegionCurve& curve : curves) {
    nlohmann::ordered_json entry;
    entry["label"] = curve.label;
    entry["points"] = nlohmann::ordered_json::array();
    for (const auto& point : curve.points) {
      entry["points"].push_back({point[0], point[1]});
    }
    doc["curves"].push_back(std::move(entry));
  }
  return doc;
}

}  // namespace entropy_extremes
