#pragma once

#include <string>

namespace linerec {

/// Locale-independent float formatting for deterministic CSV output.
std::string format_double(double v);                 // shortest round-trip
std::string format_fixed(double v, int decimals);    // fixed precision

}  // namespace linerec
