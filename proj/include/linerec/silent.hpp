#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "linerec/kernel.hpp"
#include "linerec/types.hpp"

namespace linerec {

/// Rotationally symmetric volume current J0(rho) z supported on
/// rho <= radius about `center`. Silent outside its support when the
/// zero-net-current condition int_0^radius J0(rho) rho drho = 0 holds.
struct CoaxialProfile {
  Point2 center;
  double radius = 0.0;
  std::function<double(double)> density;  // J0(rho), A/m^2
};

/// int_0^radius J0(rho) rho drho by Gauss-Legendre (should be ~0 for a
/// silent profile).
double coaxial_net_current(const CoaxialProfile& p, int radial_order = 64);

/// The two cartesian components of the silent source's contribution to the
/// moment integral identity, i.e. of int J0 grad(G_m) dS with
/// grad(G_m) = f^m (x_hat + j y_hat). Tensor-product quadrature: radial
/// Gauss-Legendre x uniform angular grid.
std::pair<Phasor, Phasor> coaxial_moment_contribution(
    const CoaxialProfile& p, const HarmonicKernel& kernel, int m,
    int radial_order = 64, int angular_samples = 256);

/// Same quadrature with an arbitrary scalar field in the f^m slot; used by
/// negative controls with non-harmonic test functions.
std::pair<Phasor, Phasor> disk_scalar_contribution(
    const CoaxialProfile& p, const std::function<Phasor(const Point2&)>& field,
    int radial_order = 64, int angular_samples = 256);

/// Absolute-integrand mass int |J0| |f^m| dS; the scale against which the
/// contribution magnitudes are judged.
double coaxial_contribution_scale(const CoaxialProfile& p,
                                  const HarmonicKernel& kernel, int m,
                                  int radial_order = 64,
                                  int angular_samples = 256);

/// Forward-field discretization: concentric rings of line currents, ring
/// radii at radial Gauss-Legendre nodes, each ring split into n_angular
/// equal line currents carrying weight * J0(rho) * rho * dphi.
std::vector<Conductor> coaxial_rings(const CoaxialProfile& p, int n_radial,
                                     int n_angular);

/// Surface current density on a circle that cancels the external field of a
/// single interior line conductor (interior Dirichlet problem solved by the
/// image method; K0 = (1/mu0) dA0/dn).
struct SurfaceCanceller {
  Point2 center;
  double radius = 0.0;
  Conductor inner;
  std::vector<double> angles;   // sample angles, radians
  std::vector<double> density;  // K0 at those angles, A/m
};

/// Builds the canceller for `inner` strictly inside the circle. The
/// conductor at the exact center is the image-at-infinity case and yields
/// the uniform density -I / (2 pi radius).
SurfaceCanceller build_canceller(const Conductor& inner, Point2 center,
                                 double radius, int n_samples);

/// Trapezoid integral of K0 over the circle (should equal -inner current).
double canceller_total_current(const SurfaceCanceller& c);

/// The canceller discretized as n_samples line currents K0 dl.
std::vector<Conductor> canceller_line_currents(const SurfaceCanceller& c);

struct SilentReport {
  struct Row {
    int m = 0;
    double magnitude = 0.0;  // |contribution|
    double scale = 0.0;      // characteristic moment scale
    double tolerance = 0.0;  // relative
    bool pass = false;
  };
  std::vector<Row> rows;
  bool all_pass() const;
};

/// Per-m check that the coaxial profile's moment contributions vanish
/// relative to the contribution scale.
SilentReport verify_silent_moments(const CoaxialProfile& p,
                                   const HarmonicKernel& kernel, int m_max,
                                   double rel_tol = 1e-8);

/// Per-m check that the canceller scene (inner conductor + discretized
/// surface current) yields vanishing contour moments, measured on a circle
/// of contour_radius_factor * radius about the canceller center.
SilentReport verify_silent_moments(const SurfaceCanceller& c,
                                   const HarmonicKernel& kernel, int m_max,
                                   double rel_tol = 1e-6, int n_meas = 2048,
                                   int quad_order = 8,
                                   double contour_radius_factor = 3.0);

}  // namespace linerec
