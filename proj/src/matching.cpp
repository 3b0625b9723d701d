#include "linerec/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace linerec {

std::vector<std::size_t> match_by_position(
    std::span<const Conductor> recovered,
    std::span<const Conductor> reference) {
  if (recovered.size() != reference.size())
    throw InvalidArgument("match_by_position: size mismatch");
  const std::size_t n = reference.size();
  if (n > 8)
    throw InvalidArgument("match_by_position: exhaustive matching capped at 8");

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      cost += distance(recovered[perm[i]].position, reference[i].position);
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace linerec
