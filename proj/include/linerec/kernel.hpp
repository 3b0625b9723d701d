#pragma once

#include "linerec/types.hpp"

namespace linerec {

/// The analytic moment kernel f(x, y) = exp((j x - y) / r_scale) with the
/// sign convention s = +1. Invertible (principal logarithm) on the open
/// strip |x| < pi * r_scale.
class HarmonicKernel {
 public:
  explicit HarmonicKernel(double r_scale) : r_scale_(r_scale) {
    if (!is_finite(r_scale) || r_scale <= 0.0)
      throw InvalidArgument("HarmonicKernel: r_scale must be finite and > 0");
  }

  double r_scale() const { return r_scale_; }

  Phasor eval(const Point2& r) const {
    return std::exp(Phasor(-r.y / r_scale_, r.x / r_scale_));
  }

  /// exp(m (j x - y) / r_scale); avoids accumulating power products.
  Phasor eval_pow(const Point2& r, int m) const {
    return std::exp(Phasor(-m * r.y / r_scale_, m * r.x / r_scale_));
  }

  /// Principal-branch inverse: x = r_scale Im ln f, y = -r_scale Re ln f.
  /// Throws DomainError for zero or non-finite arguments.
  Point2 invert(const Phasor& f_val) const;

  bool in_strip(const Point2& r) const {
    return std::abs(r.x) < std::numbers::pi * r_scale_;
  }

 private:
  double r_scale_;
};

}  // namespace linerec
