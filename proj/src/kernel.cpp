#include "linerec/kernel.hpp"

namespace linerec {

Point2 HarmonicKernel::invert(const Phasor& f_val) const {
  if (!is_finite(f_val))
    throw DomainError("kernel inversion: non-finite argument");
  if (f_val == Phasor{})
    throw DomainError("kernel inversion: zero argument");
  const Phasor l = std::log(f_val);  // principal branch
  return Point2(r_scale_ * l.imag(), -r_scale_ * l.real());
}

}  // namespace linerec
