#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trd/verify.hpp"

namespace trd::detail {

/// Outcome of one instance: not covered by the hypotheses, holds, or a
/// violation with a readable trace.
struct Check {
  bool counted = true;
  std::string violation;

  static Check skip() { return {false, {}}; }
  static Check ok() { return {}; }
  static Check bad(std::string why) { return {true, std::move(why)}; }
};

using CheckFn = std::function<Check(const Instance&, const SolveOptions&)>;

struct Theorem {
  TheoremInfo info;
  CheckFn check;
};

const std::vector<Theorem>& theorems();

}  // namespace trd::detail
