#include "linerec/prony.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "linerec/linalg.hpp"
#include "linerec/polyroots.hpp"

namespace linerec {

namespace {

struct CoefficientSolve {
  std::vector<Phasor> c;
  double cond = 0.0;
};

CoefficientSolve solve_coefficients_impl(const MomentVector& b, int n,
                                         int l_offset) {
  if (n < 1) throw InvalidArgument("solve_coefficients: n must be >= 1");
  if (l_offset < 0)
    throw InvalidArgument("solve_coefficients: l_offset must be >= 0");
  const int needed = l_offset + 2 * n - 1;
  if (b.max_order() < needed)
    throw InvalidArgument(
        "solve_coefficients: moment vector too short for requested offsets");

  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Phasor> matrix(un * un);
  std::vector<Phasor> rhs(un);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      matrix[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] =
          b[static_cast<std::size_t>(l_offset + i + j)];
    rhs[static_cast<std::size_t>(i)] =
        -b[static_cast<std::size_t>(l_offset + n + i)];
  }
  SolveResult solved = solve_dense(std::move(matrix), std::move(rhs));
  return {std::move(solved.x), solved.condition_estimate};
}

struct CurrentSolve {
  std::vector<Phasor> currents;
  double cond = 0.0;
};

CurrentSolve solve_currents_impl(std::span<const Phasor> roots,
                                 const MomentVector& b, int m_offset) {
  const int n = static_cast<int>(roots.size());
  if (n < 1) throw InvalidArgument("solve_currents: empty root list");
  if (m_offset < 0)
    throw InvalidArgument("solve_currents: m_offset must be >= 0");
  if (b.max_order() < m_offset + n - 1)
    throw InvalidArgument(
        "solve_currents: moment vector too short for requested offset");
  if (roots_clustered(roots))
    throw ClusteredRootsError("solve_currents: roots are not separated");

  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<Phasor> matrix(un * un);
  std::vector<Phasor> rhs(un);
  for (std::size_t j = 0; j < un; ++j) {
    Phasor power = Phasor(1.0, 0.0);
    for (int k = 0; k < m_offset; ++k) power *= roots[j];
    for (std::size_t i = 0; i < un; ++i) {
      matrix[i * un + j] = power;
      power *= roots[j];
    }
  }
  for (std::size_t i = 0; i < un; ++i)
    rhs[i] = b[static_cast<std::size_t>(m_offset) + i];
  SolveResult solved = solve_dense(std::move(matrix), std::move(rhs));
  return {std::move(solved.x), solved.condition_estimate};
}

double residual_over_used_range(const MomentVector& b,
                                std::span<const Phasor> roots,
                                std::span<const Phasor> currents, int m_lo,
                                int m_hi) {
  double worst = 0.0;
  for (int m = m_lo; m <= m_hi; ++m) {
    Phasor acc{};
    for (std::size_t j = 0; j < roots.size(); ++j) {
      Phasor power(1.0, 0.0);
      for (int k = 0; k < m; ++k) power *= roots[j];
      acc += currents[j] * power;
    }
    worst = std::max(worst, std::abs(acc - b[static_cast<std::size_t>(m)]));
  }
  return worst;
}

}  // namespace

std::vector<Phasor> solve_coefficients(const MomentVector& b, int n,
                                       int l_offset) {
  return solve_coefficients_impl(b, n, l_offset).c;
}

std::vector<Phasor> solve_currents(std::span<const Phasor> roots,
                                   const MomentVector& b, int m_offset) {
  return solve_currents_impl(roots, b, m_offset).currents;
}

ReconstructionResult reconstruct(const MomentVector& b,
                                 const HarmonicKernel& kernel, int n,
                                 int m_offset, int l_offset) {
  if (n < 1) throw InvalidArgument("reconstruct: n must be >= 1");

  CoefficientSolve coef = solve_coefficients_impl(b, n, l_offset);
  const std::vector<Phasor> roots = roots_of_monic(coef.c);
  CurrentSolve cur = solve_currents_impl(roots, b, m_offset);

  // Kernel inversion per root; a zero/non-finite root is a domain error and
  // the raw root is recorded in the message rather than wrapped around.
  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Point2> positions(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    try {
      positions[i] = kernel.invert(roots[i]);
    } catch (const DomainError&) {
      throw DomainError("reconstruct: root (" +
                        std::to_string(roots[i].real()) + ", " +
                        std::to_string(roots[i].imag()) +
                        ") has no position in the kernel strip");
    }
  }
  std::sort(order.begin(), order.end(), [&positions](std::size_t a,
                                                     std::size_t b2) {
    if (positions[a].x != positions[b2].x)
      return positions[a].x < positions[b2].x;
    return positions[a].y < positions[b2].y;
  });

  ReconstructionResult result;
  result.conductors.reserve(roots.size());
  result.root_values.reserve(roots.size());
  for (const std::size_t idx : order) {
    result.conductors.emplace_back(positions[idx], cur.currents[idx]);
    result.root_values.push_back(roots[idx]);
  }
  result.cond_c = coef.cond;
  result.cond_f = cur.cond;
  result.moment_residual = residual_over_used_range(
      b, roots, cur.currents, std::min(l_offset, m_offset),
      std::max(l_offset + 2 * n - 1, m_offset + n - 1));
  return result;
}

std::vector<Phasor> currents_only(std::span<const Point2> positions,
                                  const MomentVector& b,
                                  const HarmonicKernel& kernel, int m_offset) {
  std::vector<Phasor> node_values;
  node_values.reserve(positions.size());
  for (const auto& p : positions) {
    if (!kernel.in_strip(p))
      throw DomainError("currents_only: position outside the kernel strip");
    node_values.push_back(kernel.eval(p));
  }
  return solve_currents(node_values, b, m_offset);
}

}  // namespace linerec
