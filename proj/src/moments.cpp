#include "linerec/moments.hpp"

#include <cmath>
#include <vector>

#include "linerec/quadrature.hpp"

namespace linerec {

namespace {

/// Adds one segment's contributions for all m = 0..m_max into acc.
/// The integrand combines the tangential/normal field projections,
/// B_x (t_x + j t_y) + B_y (t_y - j t_x), with n = t x z and s = +1.
void accumulate_segment(const FieldSample& a, const FieldSample& b,
                        const HarmonicKernel& kernel, int m_max,
                        const GaussLegendre& rule, std::vector<Phasor>& acc) {
  const double dx = b.position.x - a.position.x;
  const double dy = b.position.y - a.position.y;
  const double len = std::hypot(dx, dy);
  if (len < 1e-300)
    throw DegenerateSegmentError("segment_moment: coincident endpoints");
  const double tx = dx / len;
  const double ty = dy / len;
  const Phasor proj_x(tx, ty);   // t_x + j t_y
  const Phasor proj_y(ty, -tx);  // t_y - j t_x
  const double jacobian = len / kMu0;

  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    const double t = nodes[q];
    const Point2 rt(a.position.x * (1.0 - t) + b.position.x * t,
                    a.position.y * (1.0 - t) + b.position.y * t);
    const Phasor bx = a.bx * (1.0 - t) + b.bx * t;
    const Phasor by = a.by * (1.0 - t) + b.by * t;
    const Phasor g = (bx * proj_x + by * proj_y) * (jacobian * weights[q]);
    const Phasor f = kernel.eval(rt);
    Phasor fpow(1.0, 0.0);
    for (int m = 0; m <= m_max; ++m) {
      acc[static_cast<std::size_t>(m)] += g * fpow;
      fpow *= f;
    }
  }
}

}  // namespace

MomentVector exact_moments(std::span<const Conductor> conductors,
                           const HarmonicKernel& kernel, int m_max) {
  if (m_max < 0) throw InvalidArgument("exact_moments: m_max must be >= 0");
  for (const auto& c : conductors)
    if (!kernel.in_strip(c.position))
      throw DomainError("exact_moments: conductor outside the kernel strip");
  std::vector<Phasor> b(static_cast<std::size_t>(m_max) + 1, Phasor{});
  for (const auto& c : conductors) {
    const Phasor f = kernel.eval(c.position);
    Phasor term = c.current;
    for (int m = 0; m <= m_max; ++m) {
      b[static_cast<std::size_t>(m)] += term;
      term *= f;
    }
  }
  return MomentVector(std::move(b));
}

Phasor segment_moment(const FieldSample& a, const FieldSample& b,
                      const HarmonicKernel& kernel, int m, int quad_order) {
  if (m < 0) throw InvalidArgument("segment_moment: m must be >= 0");
  std::vector<Phasor> acc(static_cast<std::size_t>(m) + 1, Phasor{});
  accumulate_segment(a, b, kernel, m, GaussLegendre::cached(quad_order), acc);
  return acc[static_cast<std::size_t>(m)];
}

MomentVector contour_moments(const MeasurementSet& ms,
                             const HarmonicKernel& kernel, int m_max,
                             int quad_order) {
  if (m_max < 0) throw InvalidArgument("contour_moments: m_max must be >= 0");
  if (!ms.counterclockwise())
    throw InvalidArgument("contour_moments: counterclockwise loop required");
  const auto& rule = GaussLegendre::cached(quad_order);
  std::vector<Phasor> acc(static_cast<std::size_t>(m_max) + 1, Phasor{});
  const auto& samples = ms.samples();
  const std::size_t n = samples.size();
  for (std::size_t i = 0; i < n; ++i)
    accumulate_segment(samples[i], samples[(i + 1) % n], kernel, m_max, rule,
                       acc);
  return MomentVector(std::move(acc));
}

MomentVector richardson(const MomentVector& b_all, const MomentVector& b_even,
                        const MomentVector& b_odd) {
  if (b_all.size() != b_even.size() || b_all.size() != b_odd.size())
    throw InvalidArgument("richardson: length mismatch");
  std::vector<Phasor> out(b_all.size());
  for (std::size_t m = 0; m < b_all.size(); ++m)
    out[m] = (8.0 * b_all[m] - b_even[m] - b_odd[m]) / 6.0;
  return MomentVector(std::move(out));
}

MomentTriple split_moments(const MeasurementSet& ms,
                           const HarmonicKernel& kernel, int m_max,
                           int quad_order) {
  MomentTriple triple{
      contour_moments(ms, kernel, m_max, quad_order),
      contour_moments(ms.parity_subset(0), kernel, m_max, quad_order),
      contour_moments(ms.parity_subset(1), kernel, m_max, quad_order)};
  return triple;
}

MomentVector extrapolated_moments(const MeasurementSet& ms,
                                  const HarmonicKernel& kernel, int m_max,
                                  int quad_order) {
  const MomentTriple t = split_moments(ms, kernel, m_max, quad_order);
  return richardson(t.all, t.even, t.odd);
}

}  // namespace linerec
