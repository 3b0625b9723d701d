#pragma once

#include <span>
#include <vector>

#include "linerec/kernel.hpp"
#include "linerec/types.hpp"

namespace linerec {

/// Full inversion output plus the ill-posedness diagnostics.
struct ReconstructionResult {
  /// Recovered conductors in canonical order (ascending x, then y).
  std::vector<Conductor> conductors;
  /// Kernel values f_n, aligned with `conductors`.
  std::vector<Phasor> root_values;
  /// Pivot-ratio condition estimates of the coefficient and current systems.
  double cond_c = 0.0;
  double cond_f = 0.0;
  /// max over consumed m of |sum_n I_n f_n^m - b_m|.
  double moment_residual = 0.0;
};

/// Coefficients (c_0..c_{n-1}) of the monic node polynomial, from the
/// Hankel-structured system C_L c = -(b_{L+n}, ..., b_{L+2n-1}) where row i
/// of C_L is (b_{L+i}, ..., b_{L+i+n-1}). Requires moments up to L+2n-1.
std::vector<Phasor> solve_coefficients(const MomentVector& b, int n,
                                       int l_offset);

/// Currents from known kernel values: solves the Vandermonde-structured
/// system with row i = (f_1^{M+i}, ..., f_N^{M+i}) against (b_{M+i}).
/// Roots must be pairwise separated by more than 1e-8 * max|root|.
std::vector<Phasor> solve_currents(std::span<const Phasor> roots,
                                   const MomentVector& b, int m_offset);

/// End-to-end inversion: solve_coefficients -> roots_of_monic ->
/// solve_currents -> kernel inversion per root, with canonical ordering and
/// diagnostics. Moment indices min(L, M)..L+2n-1 must be available.
ReconstructionResult reconstruct(const MomentVector& b,
                                 const HarmonicKernel& kernel, int n,
                                 int m_offset = 1, int l_offset = 1);

/// Currents-only problem: kernel values evaluated at known positions, then
/// solve_currents. Positions must be distinct and inside the kernel strip.
std::vector<Phasor> currents_only(std::span<const Point2> positions,
                                  const MomentVector& b,
                                  const HarmonicKernel& kernel,
                                  int m_offset = 1);

}  // namespace linerec
