#pragma once

#include <stdexcept>
#include <string>

namespace entropy_extremes {

// Base type for every error this library throws on bad input or failed I/O.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionTooSmall final : Error {
  using Error::Error;
};

struct NotADistribution final : Error {
  using Error::Error;
};

struct ParamOutOfRange final : Error {
  using Error::Error;
};

struct EntropyOutOfRange final : Error {
  using Error::Error;
};

struct NormOutOfRange final : Error {
  using Error::Error;
};

struct ShannonOrderUnsupported final : Error {
  using Error::Error;
};

struct NonPositiveArgument final : Error {
  using Error::Error;
};

struct DomainViolation final : Error {
  using Error::Error;
};

struct InvalidOrder final : Error {
  using Error::Error;
};

struct RhoOutOfRange final : Error {
  using Error::Error;
};

struct NotFocusing final : Error {
  using Error::Error;
};

struct DimensionMismatch final : Error {
  using Error::Error;
};

struct IoError final : Error {
  using Error::Error;
};

}  // namespace entropy_extremes
