#pragma once

// Shared scene builders for tests: the reference five-conductor layout and
// seeded random scenes for property checks.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "linerec/types.hpp"

namespace linerec::testing {

inline std::vector<Conductor> table1_internal() {
  return {Conductor(Point2(-0.5, -0.5), Phasor(0.0, -1.0)),
          Conductor(Point2(0.0, -0.5), Phasor(2.0, 0.0)),
          Conductor(Point2(0.5, -0.5), Phasor(-1.0, 0.0))};
}

inline std::vector<Conductor> table1_external() {
  return {Conductor(Point2(-1.5, -0.5), Phasor(-1.0, 0.0)),
          Conductor(Point2(1.0, 1.0), Phasor(0.0, 2.0))};
}

inline Scenario table1_scenario(int n_meas = 36) {
  Scenario s;
  s.internal_conductors = table1_internal();
  s.external_conductors = table1_external();
  s.r_meas = 1.0;
  s.n_meas = n_meas;
  s.recon.n = 3;
  return s;
}

/// Random scene: n conductors uniform in the disk of radius 0.7 r_meas with
/// pairwise separation >= 0.2 r_meas and current magnitudes in [0.5, 2].
inline std::vector<Conductor> random_scene(std::mt19937_64& gen, int n,
                                           double r_meas = 1.0) {
  std::uniform_real_distribution<double> coord(-0.7 * r_meas, 0.7 * r_meas);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<Conductor> scene;
  while (static_cast<int>(scene.size()) < n) {
    const Point2 p(coord(gen), coord(gen));
    if (std::hypot(p.x, p.y) > 0.7 * r_meas) continue;
    bool separated = true;
    for (const auto& c : scene)
      if (distance(c.position, p) < 0.2 * r_meas) separated = false;
    if (!separated) continue;
    const double a = phase(gen);
    const double m = mag(gen);
    scene.emplace_back(p, Phasor(m * std::cos(a), m * std::sin(a)));
  }
  return scene;
}

}  // namespace linerec::testing
