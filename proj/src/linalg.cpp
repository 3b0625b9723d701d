#include "linerec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace linerec {

SolveResult solve_dense(std::vector<Phasor> matrix, std::vector<Phasor> rhs) {
  const std::size_t n = rhs.size();
  if (matrix.size() != n * n)
    throw InvalidArgument("solve_dense: matrix/rhs size mismatch");
  if (n == 0) return {{}, 1.0};

  auto at = [&matrix, n](std::size_t r, std::size_t c) -> Phasor& {
    return matrix[r * n + c];
  };

  double max_pivot = 0.0;
  double min_pivot = 0.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot_row = col;
    double best = std::abs(at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(at(r, col));
      if (mag > best) {
        best = mag;
        pivot_row = r;
      }
    }
    if (best == 0.0)
      throw SingularSystemError("solve_dense: exactly singular matrix");
    if (pivot_row != col) {
      for (std::size_t c = col; c < n; ++c)
        std::swap(at(col, c), at(pivot_row, c));
      std::swap(rhs[col], rhs[pivot_row]);
    }
    max_pivot = col == 0 ? best : std::max(max_pivot, best);
    min_pivot = col == 0 ? best : std::min(min_pivot, best);

    const Phasor pivot = at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Phasor factor = at(r, col) / pivot;
      if (factor == Phasor{}) continue;
      at(r, col) = Phasor{};
      for (std::size_t c = col + 1; c < n; ++c)
        at(r, c) -= factor * at(col, c);
      rhs[r] -= factor * rhs[col];
    }
  }

  const double ratio = min_pivot / max_pivot;
  if (ratio < 1e-13) {
    std::ostringstream os;
    os << "solve_dense: pivot ratio " << ratio << " below 1e-13";
    throw SingularSystemError(os.str());
  }

  std::vector<Phasor> x(n);
  for (std::size_t ri = n; ri-- > 0;) {
    Phasor acc = rhs[ri];
    for (std::size_t c = ri + 1; c < n; ++c) acc -= at(ri, c) * x[c];
    x[ri] = acc / at(ri, ri);
  }
  return {std::move(x), max_pivot / min_pivot};
}

}  // namespace linerec
