#include "linerec/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace linerec {

namespace {

Phasor eval_monic(std::span<const Phasor> coeffs, const Phasor& z) {
  Phasor value(1.0, 0.0);  // leading coefficient
  for (std::size_t k = coeffs.size(); k-- > 0;) value = value * z + coeffs[k];
  return value;
}

Phasor eval_monic_derivative(std::span<const Phasor> coeffs, const Phasor& z) {
  const std::size_t n = coeffs.size();
  Phasor value(static_cast<double>(n), 0.0);
  for (std::size_t k = n; k-- > 1;)
    value = value * z + static_cast<double>(k) * coeffs[k];
  return value;
}

}  // namespace

std::vector<Phasor> roots_of_monic(std::span<const Phasor> coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 0) return {};
  for (const auto& c : coeffs)
    if (!is_finite(c))
      throw InvalidArgument("roots_of_monic: non-finite coefficient");

  double max_coef = 0.0;
  for (const auto& c : coeffs) max_coef = std::max(max_coef, std::abs(c));
  if (max_coef == 0.0) return std::vector<Phasor>(n, Phasor{});  // z^n

  // Aberth-Ehrlich from points spread inside the Cauchy root bound, with an
  // angular offset so real-axis root sets do not stall the iteration.
  const double radius = 0.5 * (1.0 + max_coef);
  std::vector<Phasor> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle =
        2.0 * std::numbers::pi * (static_cast<double>(i) + 0.35) /
        static_cast<double>(n);
    z[i] = radius * Phasor(std::cos(angle), std::sin(angle));
  }

  constexpr double kTol = 1e-12;
  constexpr int kMaxIterations = 100;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    double worst_step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Phasor p = eval_monic(coeffs, z[i]);
      const Phasor dp = eval_monic_derivative(coeffs, z[i]);
      Phasor newton = dp == Phasor{} ? Phasor{} : p / dp;
      Phasor repulsion{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Phasor diff = z[i] - z[j];
        if (diff == Phasor{}) diff = Phasor(1e-14 * (1.0 + radius), 0.0);
        repulsion += 1.0 / diff;
      }
      const Phasor denom = Phasor(1.0, 0.0) - newton * repulsion;
      const Phasor step = denom == Phasor{} ? newton : newton / denom;
      z[i] -= step;
      worst_step =
          std::max(worst_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst_step <= kTol) break;
  }

  const double residual_bound = 1e-8 * std::max(1.0, max_coef);
  for (const auto& root : z)
    if (!is_finite(root) || std::abs(eval_monic(coeffs, root)) > residual_bound)
      throw ConvergenceError(
          "roots_of_monic: residual target not met within iteration cap");
  return z;
}

bool roots_clustered(std::span<const Phasor> roots, double rel_tol) {
  double max_mag = 0.0;
  for (const auto& r : roots) max_mag = std::max(max_mag, std::abs(r));
  const double threshold = rel_tol * std::max(max_mag, 1e-300);
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= threshold) return true;
  return false;
}

}  // namespace linerec
