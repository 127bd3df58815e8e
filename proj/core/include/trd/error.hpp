#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trd {

/// Failure categories shared by every module. The CLI maps these onto
/// exit codes, tests match on them.
enum class Errc {
  OutOfRange,
  SelfLoop,
  EdgeExists,
  NotANonEdge,
  MalformedGraph6,
  MalformedEdgeList,
  TooLarge,
  TooSmall,
  IsolatedVertex,
  LengthMismatch,
  BudgetExceeded,
  ValueTooSmall,
  InvalidSpec,
  TooFewLegs,
  Disconnected,
  UniverseTooLarge,
  UnknownTheorem,
  IncompatibleUniverse,
  UnknownQuestion,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace trd
