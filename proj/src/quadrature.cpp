#include "linerec/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "linerec/errors.hpp"

namespace linerec {

GaussLegendre::GaussLegendre(int order) {
  if (order < 1 || order > 512)
    throw InvalidArgument("GaussLegendre: order must be in [1, 512]");
  const int n = order;
  nodes_.resize(n);
  weights_.resize(n);
  const double eps = 1e-15;
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the Chebyshev-based initial guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= eps) break;
    }
    // Map [-1, 1] -> [0, 1].
    nodes_[i] = 0.5 * (1.0 - z);
    nodes_[n - 1 - i] = 0.5 * (1.0 + z);
    const double w = 1.0 / ((1.0 - z * z) * pp * pp);
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
}

const GaussLegendre& GaussLegendre::cached(int order) {
  static std::map<int, GaussLegendre> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end())
    it = cache.emplace(order, GaussLegendre(order)).first;
  return it->second;
}

}  // namespace linerec
