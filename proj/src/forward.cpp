#include "linerec/forward.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "linerec/rng.hpp"

namespace linerec {

FieldVec field_at(std::span<const Conductor> conductors, const Point2& r) {
  constexpr double kCoef = kMu0 / (2.0 * std::numbers::pi);
  Phasor bx{};
  Phasor by{};
  for (const auto& c : conductors) {
    const double dx = r.x - c.position.x;
    const double dy = r.y - c.position.y;
    const double rho2 = dx * dx + dy * dy;
    if (rho2 < 1e-24)
      throw EvaluationAtConductorError(
          "field_at: evaluation point coincides with a conductor");
    const double scale = kCoef / rho2;
    bx += c.current * (-dy * scale);
    by += c.current * (dx * scale);
  }
  return {bx, by};
}

MeasurementSet sample_circle(std::span<const Conductor> conductors,
                             double r_meas, int n_meas, Point2 center) {
  if (!is_finite(r_meas) || r_meas <= 0.0)
    throw InvalidArgument("sample_circle: r_meas must be finite and > 0");
  if (n_meas < 3) throw InvalidArgument("sample_circle: n_meas must be >= 3");
  std::vector<FieldSample> samples;
  samples.reserve(static_cast<std::size_t>(n_meas));
  for (int k = 0; k < n_meas; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n_meas;
    const Point2 p(center.x + r_meas * std::cos(angle),
                   center.y + r_meas * std::sin(angle));
    const FieldVec field = field_at(conductors, p);
    samples.emplace_back(p, field.bx, field.by);
  }
  return MeasurementSet(std::move(samples), r_meas, center);
}

MeasurementSet sample_circle(const Scenario& s) {
  std::vector<Conductor> scene = s.internal_conductors;
  scene.insert(scene.end(), s.external_conductors.begin(),
               s.external_conductors.end());
  return sample_circle(scene, s.r_meas, s.n_meas);
}

double mean_field_magnitude(const MeasurementSet& ms) {
  double total = 0.0;
  for (const auto& s : ms.samples())
    total += std::sqrt(std::norm(s.bx) + std::norm(s.by));
  return total / static_cast<double>(ms.size());
}

MeasurementSet add_noise(const MeasurementSet& ms, const NoiseSpec& spec) {
  if (spec.sigma_ref == 0.0) return ms;
  const double sigma = spec.sigma_ref * mean_field_magnitude(ms);
  GaussianSampler rng(spec.seed);
  std::vector<FieldSample> noisy;
  noisy.reserve(ms.size());
  for (const auto& s : ms.samples()) {
    const Phasor bx(s.bx.real() + sigma * rng.next(),
                    s.bx.imag() + sigma * rng.next());
    const Phasor by(s.by.real() + sigma * rng.next(),
                    s.by.imag() + sigma * rng.next());
    noisy.emplace_back(s.position, bx, by);
  }
  return MeasurementSet(std::move(noisy), ms.r_meas(), ms.center());
}

}  // namespace linerec
