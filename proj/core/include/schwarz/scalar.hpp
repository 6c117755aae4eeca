#pragma once

#include <cmath>
#include <complex>
#include <string_view>

namespace schwarz {

using Cx = std::complex<double>;

/// Scalar field of the data. Real mode is an explicit ingestion-time flag;
/// it is never inferred per element. Classical bounds require real mode.
enum class Mode { Real, Complex };

inline bool is_finite(double v) noexcept { return std::isfinite(v); }
inline bool is_finite(Cx v) noexcept {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

inline const char* to_string(Mode m) noexcept {
  return m == Mode::Real ? "real" : "complex";
}

}  // namespace schwarz
