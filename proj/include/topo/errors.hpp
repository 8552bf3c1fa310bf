#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonUnimodular final : Error {
  NonUnimodular() : Error("matrix determinant must be +1 or -1") {}
};

struct NotDefinite final : Error {
  NotDefinite() : Error("form is not definite (discriminant >= 0)") {}
};

struct NotAllPositive final : Error {
  NotAllPositive() : Error("descent requires a triple of strictly positive values") {}
};

// Integral rivers are periodic, so hitting the cap signals a bug, not bad input.
struct PeriodCapExceeded final : Error {
  explicit PeriodCapExceeded(std::size_t cap)
      : Error("river walked " + std::to_string(cap) + " steps without recurrence or a lake") {}
};

struct NotCoprime final : Error {
  NotCoprime() : Error("parameters p and q must be coprime") {}
};

struct ZeroParameter final : Error {
  ZeroParameter() : Error("parameters p and q must be nonzero") {}
};

struct CongruentInputs final : Error {
  CongruentInputs() : Error("v0 and v1 must not be congruent to +-each other mod u") {}
};

struct EqualValues final : Error {
  EqualValues() : Error("equal lake-adjacent values form a lake, not a lake pair") {}
};

struct DepthExceeded final : Error {
  explicit DepthExceeded(int limit)
      : Error("render depth exceeds the configured maximum of " + std::to_string(limit)) {}
};

struct IncompleteGrid final : Error {
  IncompleteGrid() : Error("grid has unscanned cells") {}
};

struct InvalidParameter final : Error {
  explicit InvalidParameter(const std::string& what) : Error(what) {}
};

}  // namespace topo
