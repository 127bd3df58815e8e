#include <string>

#include "trd/error.hpp"
#include "trd/solver.hpp"

namespace trd {

int brute_oracle_gamma_tR(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw Error(Errc::TooSmall, "total Roman domination needs at least 2 vertices");
  if (n > kEnumerationCap)
    throw Error(Errc::TooLarge, "brute-force oracle is capped at " + std::to_string(kEnumerationCap) + " vertices");
  if (g.has_isolated_vertex()) throw Error(Errc::IsolatedVertex, "graph has an isolated vertex");

  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n), 0);
  int best = 2 * n + 1;
  while (true) {
    int weight = 0;
    for (auto d : digits) weight += d;
    if (weight < best && is_trd_function(g, WeightFunction(digits))) best = weight;

    // base-3 odometer
    int i = 0;
    while (i < n && digits[i] == 2) digits[i++] = 0;
    if (i == n) break;
    ++digits[i];
  }
  return best;
}

}  // namespace trd
