#include "linerec/silent.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "linerec/forward.hpp"
#include "linerec/moments.hpp"
#include "linerec/quadrature.hpp"

namespace linerec {

namespace {

void require_profile(const CoaxialProfile& p) {
  if (!is_finite(p.radius) || p.radius <= 0.0)
    throw InvalidArgument("CoaxialProfile: radius must be finite and > 0");
  if (!p.density) throw InvalidArgument("CoaxialProfile: density not set");
}

}  // namespace

double coaxial_net_current(const CoaxialProfile& p, int radial_order) {
  require_profile(p);
  const auto& rule = GaussLegendre::cached(radial_order);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
    const double rho = p.radius * rule.nodes()[i];
    total += p.radius * rule.weights()[i] * p.density(rho) * rho;
  }
  return total;
}

std::pair<Phasor, Phasor> disk_scalar_contribution(
    const CoaxialProfile& p, const std::function<Phasor(const Point2&)>& field,
    int radial_order, int angular_samples) {
  require_profile(p);
  if (angular_samples < 4)
    throw InvalidArgument("disk_scalar_contribution: too few angular samples");
  const auto& rule = GaussLegendre::cached(radial_order);
  const double dphi = 2.0 * std::numbers::pi / angular_samples;
  Phasor total{};
  for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
    const double rho = p.radius * rule.nodes()[i];
    const double w = p.radius * rule.weights()[i] * p.density(rho) * rho;
    Phasor ring{};
    for (int k = 0; k < angular_samples; ++k) {
      const double phi = dphi * k;
      const Point2 pt(p.center.x + rho * std::cos(phi),
                      p.center.y + rho * std::sin(phi));
      ring += field(pt);
    }
    total += w * dphi * ring;
  }
  // grad(G) = field * (x_hat + j y_hat) for the analytic kernel family.
  return {total, Phasor(0.0, 1.0) * total};
}

std::pair<Phasor, Phasor> coaxial_moment_contribution(
    const CoaxialProfile& p, const HarmonicKernel& kernel, int m,
    int radial_order, int angular_samples) {
  if (m < 0)
    throw InvalidArgument("coaxial_moment_contribution: m must be >= 0");
  return disk_scalar_contribution(
      p, [&kernel, m](const Point2& pt) { return kernel.eval_pow(pt, m); },
      radial_order, angular_samples);
}

double coaxial_contribution_scale(const CoaxialProfile& p,
                                  const HarmonicKernel& kernel, int m,
                                  int radial_order, int angular_samples) {
  require_profile(p);
  const auto& rule = GaussLegendre::cached(radial_order);
  const double dphi = 2.0 * std::numbers::pi / angular_samples;
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
    const double rho = p.radius * rule.nodes()[i];
    const double w =
        p.radius * rule.weights()[i] * std::abs(p.density(rho)) * rho;
    double ring = 0.0;
    for (int k = 0; k < angular_samples; ++k) {
      const double phi = dphi * k;
      const Point2 pt(p.center.x + rho * std::cos(phi),
                      p.center.y + rho * std::sin(phi));
      ring += std::abs(kernel.eval_pow(pt, m));
    }
    total += w * dphi * ring;
  }
  return total;
}

std::vector<Conductor> coaxial_rings(const CoaxialProfile& p, int n_radial,
                                     int n_angular) {
  require_profile(p);
  if (n_angular < 4)
    throw InvalidArgument("coaxial_rings: too few angular samples");
  const auto& rule = GaussLegendre::cached(n_radial);
  const double dphi = 2.0 * std::numbers::pi / n_angular;
  std::vector<Conductor> lines;
  lines.reserve(rule.nodes().size() * static_cast<std::size_t>(n_angular));
  for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
    const double rho = p.radius * rule.nodes()[i];
    const double ring_current =
        p.radius * rule.weights()[i] * p.density(rho) * rho * dphi;
    for (int k = 0; k < n_angular; ++k) {
      const double phi = dphi * k;
      lines.emplace_back(Point2(p.center.x + rho * std::cos(phi),
                                p.center.y + rho * std::sin(phi)),
                         Phasor(ring_current, 0.0));
    }
  }
  return lines;
}

SurfaceCanceller build_canceller(const Conductor& inner, Point2 center,
                                 double radius, int n_samples) {
  if (!is_finite(radius) || radius <= 0.0)
    throw InvalidArgument("build_canceller: radius must be finite and > 0");
  if (n_samples < 3)
    throw InvalidArgument("build_canceller: n_samples must be >= 3");
  if (inner.current.imag() != 0.0)
    throw InvalidArgument(
        "build_canceller: surface density samples are real; use a real "
        "inner current");
  const double dx = inner.position.x - center.x;
  const double dy = inner.position.y - center.y;
  const double offset = std::hypot(dx, dy);
  if (offset >= radius)
    throw InvalidArgument("build_canceller: conductor not inside the circle");

  // Image of the interior line current in the circle; at the exact center
  // the image recedes to infinity and the density is uniform.
  const bool centered = offset < 1e-12 * radius;
  Point2 image = center;
  if (!centered) {
    const double scale = radius * radius / (offset * offset);
    image = Point2(center.x + scale * dx, center.y + scale * dy);
  }

  SurfaceCanceller canceller;
  canceller.center = center;
  canceller.radius = radius;
  canceller.inner = inner;
  canceller.angles.reserve(static_cast<std::size_t>(n_samples));
  canceller.density.reserve(static_cast<std::size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / n_samples;
    canceller.angles.push_back(theta);
    const double nx = std::cos(theta);
    const double ny = std::sin(theta);
    const Point2 p(center.x + radius * nx, center.y + radius * ny);
    // K0 = (1/mu0) dA0/dn for A0 built from the source and its image.
    double g = 0.0;
    {
      const double vx = p.x - inner.position.x;
      const double vy = p.y - inner.position.y;
      g -= (vx * nx + vy * ny) / (vx * vx + vy * vy);
    }
    if (!centered) {
      const double vx = p.x - image.x;
      const double vy = p.y - image.y;
      g += (vx * nx + vy * ny) / (vx * vx + vy * vy);
    }
    canceller.density.push_back(inner.current.real() / (2.0 * std::numbers::pi) * g);
  }
  return canceller;
}

double canceller_total_current(const SurfaceCanceller& c) {
  if (c.density.empty()) return 0.0;
  const double dl =
      2.0 * std::numbers::pi * c.radius / static_cast<double>(c.density.size());
  double total = 0.0;
  for (const double k0 : c.density) total += k0 * dl;
  return total;
}

std::vector<Conductor> canceller_line_currents(const SurfaceCanceller& c) {
  if (c.density.empty())
    throw InvalidArgument("canceller_line_currents: empty density");
  const double dl =
      2.0 * std::numbers::pi * c.radius / static_cast<double>(c.density.size());
  std::vector<Conductor> lines;
  lines.reserve(c.density.size());
  for (std::size_t k = 0; k < c.density.size(); ++k) {
    const double theta = c.angles[k];
    lines.emplace_back(Point2(c.center.x + c.radius * std::cos(theta),
                              c.center.y + c.radius * std::sin(theta)),
                       Phasor(c.density[k] * dl, 0.0));
  }
  return lines;
}

bool SilentReport::all_pass() const {
  for (const auto& row : rows)
    if (!row.pass) return false;
  return !rows.empty();
}

SilentReport verify_silent_moments(const CoaxialProfile& p,
                                   const HarmonicKernel& kernel, int m_max,
                                   double rel_tol) {
  SilentReport report;
  for (int m = 0; m <= m_max; ++m) {
    const auto [cx, cy] = coaxial_moment_contribution(p, kernel, m);
    const double mag = std::max(std::abs(cx), std::abs(cy));
    const double scale = coaxial_contribution_scale(p, kernel, m);
    report.rows.push_back({m, mag, scale, rel_tol, mag <= rel_tol * scale});
  }
  return report;
}

SilentReport verify_silent_moments(const SurfaceCanceller& c,
                                   const HarmonicKernel& kernel, int m_max,
                                   double rel_tol, int n_meas, int quad_order,
                                   double contour_radius_factor) {
  std::vector<Conductor> scene = canceller_line_currents(c);
  scene.push_back(c.inner);
  const MeasurementSet ms = sample_circle(
      scene, contour_radius_factor * c.radius, n_meas, c.center);
  const MomentVector b = contour_moments(ms, kernel, m_max, quad_order);

  SilentReport report;
  const Phasor f_inner = kernel.eval(c.inner.position);
  Phasor inner_term = c.inner.current;
  for (int m = 0; m <= m_max; ++m) {
    const double scale = std::abs(inner_term);
    const double mag = std::abs(b[static_cast<std::size_t>(m)]);
    report.rows.push_back({m, mag, scale, rel_tol, mag <= rel_tol * scale});
    inner_term *= f_inner;
  }
  return report;
}

}  // namespace linerec
