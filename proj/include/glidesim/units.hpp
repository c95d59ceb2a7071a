#pragma once

// All quantities in the library are SI doubles. These constants convert the
// units the glider literature prefers (kPa, cm^3, mL) at the boundaries.

#include <numbers>

namespace glidesim::units {

inline constexpr double kPa = 1.0e3;           // Pa
inline constexpr double MPa = 1.0e6;           // Pa
inline constexpr double cm3 = 1.0e-6;          // m^3
inline constexpr double mL = 1.0e-6;           // m^3
inline constexpr double liter = 1.0e-3;        // m^3
inline constexpr double mm = 1.0e-3;           // m
inline constexpr double mW = 1.0e-3;           // W
inline constexpr double deg = std::numbers::pi / 180.0;  // rad

inline constexpr double gas_constant = 8.314462618;  // J/(mol K)

}  // namespace glidesim::units
