#pragma once

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "entropy_extremes/errors.hpp"

namespace entropy_extremes {

// Norm / entropy order. The Shannon case (order 1) and the max-entry limit
// (order infinity) are distinct variants rather than sentinel doubles, so a
// caller can never confuse "alpha = 1" with a finite order.
class Order {
 public:
  enum class Kind { finite, shannon, infinity };

  static Order finite(double alpha) {
    if (!std::isfinite(alpha) || !(alpha > 0.0) || alpha == 1.0) {
      throw InvalidOrder("finite order requires alpha > 0 and alpha != 1, got " +
                         std::to_string(alpha));
    }
    return Order(Kind::finite, alpha);
  }

  static Order shannon() noexcept { return Order(Kind::shannon, 1.0); }

  static Order infinity() noexcept {
    return Order(Kind::infinity, std::numeric_limits<double>::infinity());
  }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  bool is_shannon() const noexcept { return kind_ == Kind::shannon; }
  bool is_infinity() const noexcept { return kind_ == Kind::infinity; }

  double alpha() const {
    if (kind_ != Kind::finite) {
      throw InvalidOrder("alpha() is only defined for finite orders");
    }
    return alpha_;
  }

 private:
  Order(Kind kind, double alpha) noexcept : kind_(kind), alpha_(alpha) {}

  Kind kind_;
  double alpha_;
};

// Accepts "inf"/"infinity" (any case), "1" (Shannon), or a positive real.
inline Order parse_order(const std::string& text) {
  std::string lower;
  lower.reserve(text.size());
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "inf" || lower == "infinity") return Order::infinity();

  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw InvalidOrder("cannot parse order '" + text + "'");
  }
  if (consumed != text.size()) throw InvalidOrder("cannot parse order '" + text + "'");
  if (value == 1.0) return Order::shannon();
  return Order::finite(value);
}

inline std::string to_string(const Order& order) {
  switch (order.kind()) {
    case Order::Kind::shannon:
      return "1";
    case Order::Kind::infinity:
      return "inf";
    case Order::Kind::finite:
    default: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", order.alpha());
      return buf;
    }
  }
}

}  // namespace entropy_extremes
