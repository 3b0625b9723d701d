#pragma once

#include <span>

#include "linerec/kernel.hpp"
#include "linerec/types.hpp"

namespace linerec {

/// b_m = sum_n I_n f(w_n)^m for m = 0..m_max, computed directly from known
/// conductors (the left-hand side of the moment relation). Conductors must
/// lie inside the kernel's invertibility strip.
MomentVector exact_moments(std::span<const Conductor> conductors,
                           const HarmonicKernel& kernel, int m_max);

/// Contribution of one straight segment between samples a and b:
///   (|r2 - r1| / mu0) * int_0^1 [Bx(t)(tx + j ty) + By(t)(ty - j tx)]
///                               f(r(t))^m dt
/// with the field interpolated linearly between the endpoint samples and the
/// integral evaluated by fixed-order Gauss-Legendre quadrature.
Phasor segment_moment(const FieldSample& a, const FieldSample& b,
                      const HarmonicKernel& kernel, int m, int quad_order);

/// Closed-loop moments of a counterclockwise measurement set: the sum of
/// segment_moment over all segments, for each m = 0..m_max.
MomentVector contour_moments(const MeasurementSet& ms,
                             const HarmonicKernel& kernel, int m_max,
                             int quad_order);

/// Elementwise (8 b_all - b_even - b_odd) / 6; cancels the leading O(h^2)
/// interpolation error of the half-resolution sets.
MomentVector richardson(const MomentVector& b_all, const MomentVector& b_even,
                        const MomentVector& b_odd);

struct MomentTriple {
  MomentVector all;
  MomentVector even;
  MomentVector odd;
};

/// Full-set moments plus the two index-parity half-set moments.
/// Requires an even sample count.
MomentTriple split_moments(const MeasurementSet& ms,
                           const HarmonicKernel& kernel, int m_max,
                           int quad_order);

/// richardson() applied to split_moments().
MomentVector extrapolated_moments(const MeasurementSet& ms,
                                  const HarmonicKernel& kernel, int m_max,
                                  int quad_order);

}  // namespace linerec
