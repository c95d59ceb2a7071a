#pragma once

#include "glidesim/pneumatics.hpp"

#include <string_view>

namespace glidesim {

enum class ControllerMode { Deflating, Inflating };

std::string_view to_string(ControllerMode mode);

/// Bang-bang state realized by the bistable valve. Deflating switches to
/// Inflating when the hydrostatic gauge pressure reaches p_high; Inflating
/// switches back when it falls to p_low. Comparisons are inclusive.
struct ControllerState {
    ControllerMode mode = ControllerMode::Deflating;
    double p_high = 10.0e3;  // Pa
    double p_low = 1.0e3;    // Pa
    long transition_count = 0;

    static ControllerState with_thresholds(double p_high, double p_low);

    /// True if `step` at this pressure would change the mode.
    bool would_transition(double p_hydro) const;
};

ControllerState step(const ControllerState& state, double p_hydro);

struct Thresholds {
    double p_high;
    double p_low;
};

/// Hydrostatic gauge pressures at which the valve flips with no extra applied
/// pressure, found as the fixed point p = hydro(d(p)) + threshold(d(p)).
/// Throws ConfigError on an empty band or if the iteration fails to settle
/// to 1 Pa within 100 iterations.
Thresholds thresholds_from_valve(const ValveModel& valve, const PhysicalConstants& constants);

}  // namespace glidesim
