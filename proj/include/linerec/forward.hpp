#pragma once

#include <cstdint>
#include <span>

#include "linerec/types.hpp"

namespace linerec {

/// Noise description: sigma is derived per measurement set, not stored.
struct NoiseSpec {
  double sigma_ref = 0.0;
  std::uint64_t seed = 0;

  NoiseSpec() = default;
  NoiseSpec(double sigma_ref_, std::uint64_t seed_)
      : sigma_ref(sigma_ref_), seed(seed_) {
    if (!is_finite(sigma_ref) || sigma_ref < 0.0)
      throw InvalidArgument("NoiseSpec: sigma_ref must be finite and >= 0");
  }
};

struct FieldVec {
  Phasor bx;
  Phasor by;
};

/// Transverse field of a set of line currents,
///   B(r) = (mu0 / 2 pi) sum_n I_n z x (r - r_n) / |r - r_n|^2.
/// Throws EvaluationAtConductorError when |r - r_n| < 1e-12 m.
FieldVec field_at(std::span<const Conductor> conductors, const Point2& r);

/// Uniform circular sampling: n_meas points at angles 2 pi k / n_meas about
/// `center`, starting at angle 0, counterclockwise.
MeasurementSet sample_circle(std::span<const Conductor> conductors,
                             double r_meas, int n_meas,
                             Point2 center = Point2{});

/// Scenario sampling; internal AND external conductors contribute.
MeasurementSet sample_circle(const Scenario& s);

/// Mean over samples of sqrt(|Bx|^2 + |By|^2).
double mean_field_magnitude(const MeasurementSet& ms);

/// Adds independent zero-mean Gaussian deviates with standard deviation
/// sigma = sigma_ref * mean_field_magnitude(ms) to each of the four real
/// scalars (Re/Im of bx, by) of every sample. Deterministic given the seed;
/// sigma_ref == 0 returns the input unchanged.
MeasurementSet add_noise(const MeasurementSet& ms, const NoiseSpec& spec);

}  // namespace linerec
