#pragma once

#include <span>
#include <vector>

#include "linerec/types.hpp"

namespace linerec {

/// All complex roots of the monic polynomial
///   f^n + c_{n-1} f^{n-1} + ... + c_1 f + c_0,
/// coeffs = (c_0, ..., c_{n-1}). Aberth-Ehrlich simultaneous iteration,
/// tolerance 1e-12, cap 100 iterations. Every returned root satisfies
/// |p(root)| <= 1e-8 * max(1, max|c_i|); otherwise ConvergenceError.
std::vector<Phasor> roots_of_monic(std::span<const Phasor> coeffs);

/// True when the minimum pairwise distance is <= rel_tol * max|root|
/// (also for repeated zeros).
bool roots_clustered(std::span<const Phasor> roots, double rel_tol = 1e-8);

}  // namespace linerec
