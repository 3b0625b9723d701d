#pragma once

#include <vector>

#include "linerec/types.hpp"

namespace linerec {

struct SolveResult {
  std::vector<Phasor> x;
  /// max |pivot| / min |pivot| from the elimination; a cheap conditioning
  /// proxy adequate for the tiny systems used here.
  double condition_estimate = 0.0;
};

/// Dense complex Gaussian elimination with partial pivoting. `matrix` is
/// row-major n x n with n = rhs.size(). Throws SingularSystemError when the
/// pivot ratio min|p|/max|p| falls below 1e-13.
SolveResult solve_dense(std::vector<Phasor> matrix, std::vector<Phasor> rhs);

}  // namespace linerec
