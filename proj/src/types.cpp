#include "linerec/types.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>
#include <utility>

namespace linerec {

MeasurementSet::MeasurementSet(std::vector<FieldSample> samples, double r_meas,
                               Point2 center)
    : samples_(std::move(samples)), r_meas_(r_meas), center_(center) {
  if (!is_finite(r_meas_) || r_meas_ < 0.0)
    throw InvalidArgument("MeasurementSet: r_meas must be finite and >= 0");
  if (samples_.size() < 3)
    throw InvalidArgument("MeasurementSet: at least 3 samples required");
  const std::size_t n = samples_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = samples_[i].position;
    const auto& b = samples_[(i + 1) % n].position;
    if (a.x == b.x && a.y == b.y)
      throw InvalidArgument(
          "MeasurementSet: consecutive sample positions coincide");
  }
}

double MeasurementSet::signed_area() const {
  // Shoelace over the closed sample polygon.
  double twice_area = 0.0;
  const std::size_t n = samples_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = samples_[i].position;
    const auto& b = samples_[(i + 1) % n].position;
    twice_area += a.x * b.y - b.x * a.y;
  }
  return 0.5 * twice_area;
}

MeasurementSet MeasurementSet::parity_subset(int parity) const {
  if (parity != 0 && parity != 1)
    throw InvalidArgument("parity_subset: parity must be 0 or 1");
  if (samples_.size() % 2 != 0)
    throw InvalidArgument("parity_subset: sample count must be even");
  std::vector<FieldSample> half;
  half.reserve(samples_.size() / 2);
  for (std::size_t i = static_cast<std::size_t>(parity); i < samples_.size();
       i += 2)
    half.push_back(samples_[i]);
  return MeasurementSet(std::move(half), r_meas_, center_);
}

MeasurementSet MeasurementSet::reversed() const {
  std::vector<FieldSample> rev(samples_.rbegin(), samples_.rend());
  return MeasurementSet(std::move(rev), r_meas_, center_);
}

MomentVector::MomentVector(std::vector<Phasor> values)
    : values_(std::move(values)) {
  for (const auto& v : values_)
    if (!is_finite(v)) throw InvalidArgument("MomentVector: non-finite value");
}

namespace {

std::string describe(const char* what, std::size_t index) {
  std::ostringstream os;
  os << what << " (conductor " << index << ")";
  return os.str();
}

}  // namespace

ValidationReport validate_scenario(const Scenario& s) {
  ValidationReport report;
  auto add = [&report](std::string msg) {
    report.violations.push_back(std::move(msg));
  };

  if (!is_finite(s.r_meas) || s.r_meas <= 0.0)
    add("r_meas must be finite and > 0");
  if (s.n_meas < 3) add("n_meas must be >= 3");
  if (!is_finite(s.noise.sigma_ref) || s.noise.sigma_ref < 0.0)
    add("noise.sigma_ref must be finite and >= 0");
  if (s.noise.runs < 1) add("noise.runs must be >= 1");
  if (s.recon.n < 0) add("recon.n must be >= 0");
  if (s.recon.m_offset < 0) add("recon.m_offset must be >= 0");
  if (s.recon.l_offset < 0) add("recon.l_offset must be >= 0");
  if (s.recon.quadrature_order < 1) add("recon.quadrature_order must be >= 1");

  if (!(is_finite(s.r_meas) && s.r_meas > 0.0)) return report;

  const double strip = std::numbers::pi * s.r_meas;
  for (std::size_t i = 0; i < s.internal_conductors.size(); ++i) {
    const auto& c = s.internal_conductors[i];
    const double rho = std::hypot(c.position.x, c.position.y);
    if (rho >= s.r_meas) add(describe("conductor outside contour", i));
    if (std::abs(c.position.x) >= strip)
      add(describe("kernel invertibility |x| < pi*R violated", i));
  }
  for (std::size_t i = 0; i < s.external_conductors.size(); ++i) {
    const auto& c = s.external_conductors[i];
    const double rho = std::hypot(c.position.x, c.position.y);
    if (rho <= s.r_meas) add(describe("external conductor not outside contour", i));
  }
  return report;
}

ValidationReport validate_measurement_set(const MeasurementSet& ms) {
  ValidationReport report;
  if (!ms.counterclockwise())
    report.violations.push_back("orientation is not counterclockwise");
  if (ms.circular()) {
    const double tol = 1e-12 * ms.r_meas();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const auto& p = ms.samples()[i].position;
      const double rho = std::hypot(p.x - ms.center().x, p.y - ms.center().y);
      if (std::abs(rho - ms.r_meas()) > tol) {
        std::ostringstream os;
        os << "sample " << i << " off the declared circle by "
           << std::abs(rho - ms.r_meas());
        report.violations.push_back(os.str());
      }
    }
  }
  return report;
}

void sort_canonical(std::vector<Conductor>& conductors) {
  std::sort(conductors.begin(), conductors.end(),
            [](const Conductor& a, const Conductor& b) {
              if (a.position.x != b.position.x)
                return a.position.x < b.position.x;
              return a.position.y < b.position.y;
            });
}

}  // namespace linerec
