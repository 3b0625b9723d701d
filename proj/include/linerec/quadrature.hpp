#pragma once

#include <span>
#include <vector>

namespace linerec {

/// Gauss-Legendre nodes and weights mapped to [0, 1].
class GaussLegendre {
 public:
  explicit GaussLegendre(int order);

  int order() const { return static_cast<int>(nodes_.size()); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  /// Shared, lazily built rule cache (orders are small and reused a lot).
  static const GaussLegendre& cached(int order);

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace linerec
