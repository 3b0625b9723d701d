#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "linerec/types.hpp"

namespace linerec {

/// Minimum-total-distance assignment of recovered conductors to reference
/// conductors, exhaustive over permutations (sizes must match, N <= 8).
/// Returns perm with perm[i] = index into `recovered` matched to
/// reference[i].
std::vector<std::size_t> match_by_position(
    std::span<const Conductor> recovered,
    std::span<const Conductor> reference);

}  // namespace linerec
