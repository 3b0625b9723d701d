#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "linerec/errors.hpp"

namespace linerec {

/// Complex amplitude of a time-harmonic quantity, exp(j w t) suppressed.
using Phasor = std::complex<double>;

/// Vacuum permeability, exactly 4 pi x 10^-7 (SI units throughout).
inline constexpr double kMu0 = 4e-7 * std::numbers::pi;

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const Phasor& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

/// A point in the transverse plane, in meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double x_, double y_) : x(x_), y(y_) {
    if (!is_finite(x) || !is_finite(y))
      throw InvalidArgument("Point2: non-finite coordinate");
  }
};

inline double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// An infinitely long line conductor: position plus complex current in A.
struct Conductor {
  Point2 position;
  Phasor current;

  Conductor() = default;
  Conductor(Point2 position_, Phasor current_)
      : position(position_), current(current_) {
    if (!is_finite(current))
      throw InvalidArgument("Conductor: non-finite current");
  }
};

/// One measured field value: contour point plus transverse components in T.
struct FieldSample {
  Point2 position;
  Phasor bx;
  Phasor by;

  FieldSample() = default;
  FieldSample(Point2 position_, Phasor bx_, Phasor by_)
      : position(position_), bx(bx_), by(by_) {
    if (!is_finite(bx) || !is_finite(by))
      throw InvalidArgument("FieldSample: non-finite field component");
  }
};

/// An ordered closed loop of field samples. Segment i runs from sample i to
/// sample (i+1) mod size(); orientation must be counterclockwise for moment
/// evaluation. r_meas > 0 declares a circular contour of that radius about
/// `center`; r_meas == 0 marks a general polygon.
class MeasurementSet {
 public:
  MeasurementSet(std::vector<FieldSample> samples, double r_meas,
                 Point2 center = Point2{});

  const std::vector<FieldSample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double r_meas() const { return r_meas_; }
  const Point2& center() const { return center_; }
  bool circular() const { return r_meas_ > 0.0; }

  /// Signed area of the sample polygon (positive = counterclockwise).
  double signed_area() const;
  bool counterclockwise() const { return signed_area() > 0.0; }

  /// Samples at even (parity 0) or odd (parity 1) indices, as a closed loop.
  /// Requires an even sample count.
  MeasurementSet parity_subset(int parity) const;

  /// Same loop traversed in reverse order.
  MeasurementSet reversed() const;

 private:
  std::vector<FieldSample> samples_;
  double r_meas_ = 0.0;
  Point2 center_;
};

/// Contour moments b_m, indexed m = 0..max_order(), in amperes.
class MomentVector {
 public:
  MomentVector() = default;
  explicit MomentVector(std::vector<Phasor> values);

  std::size_t size() const { return values_.size(); }
  int max_order() const { return static_cast<int>(values_.size()) - 1; }
  const Phasor& operator[](std::size_t m) const { return values_[m]; }
  const std::vector<Phasor>& values() const { return values_; }

 private:
  std::vector<Phasor> values_;
};

struct ReconParams {
  int n = 3;
  int m_offset = 1;
  int l_offset = 1;
  int quadrature_order = 8;
};

struct NoiseParams {
  double sigma_ref = 0.0;
  std::uint64_t seed = 0;
  int runs = 1;
};

/// A complete experiment description: the scene, the contour, and the
/// noise / reconstruction settings.
struct Scenario {
  std::vector<Conductor> internal_conductors;
  std::vector<Conductor> external_conductors;
  double r_meas = 1.0;
  int n_meas = 36;
  NoiseParams noise;
  ReconParams recon;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Reports every violated scenario invariant; an empty report means valid.
ValidationReport validate_scenario(const Scenario& s);

/// Reports orientation and on-contour violations of a measurement set.
ValidationReport validate_measurement_set(const MeasurementSet& ms);

/// Canonical output ordering: ascending x, ties broken by ascending y.
void sort_canonical(std::vector<Conductor>& conductors);

}  // namespace linerec
