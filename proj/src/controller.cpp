#include "glidesim/controller.hpp"

#include <cmath>

namespace glidesim {

std::string_view to_string(ControllerMode mode) {
    return mode == ControllerMode::Inflating ? "INFLATING" : "DEFLATING";
}

ControllerState ControllerState::with_thresholds(double p_high, double p_low) {
    if (!(p_high > p_low)) {
        throw ConfigError("controller.p_high", "must exceed p_low");
    }
    ControllerState s;
    s.p_high = p_high;
    s.p_low = p_low;
    return s;
}

bool ControllerState::would_transition(double p_hydro) const {
    return mode == ControllerMode::Deflating ? p_hydro >= p_high : p_hydro <= p_low;
}

ControllerState step(const ControllerState& state, double p_hydro) {
    ControllerState next = state;
    if (state.would_transition(p_hydro)) {
        next.mode = state.mode == ControllerMode::Deflating ? ControllerMode::Inflating
                                                            : ControllerMode::Deflating;
        ++next.transition_count;
    }
    return next;
}

namespace {

template <typename Threshold>
double flip_pressure(Threshold&& threshold, const PhysicalConstants& constants, const char* key) {
    double pressure = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double depth = std::max(0.0, depth_for_pressure(pressure, constants));
        const double next = hydrostatic_pressure(depth, constants) + threshold(depth);
        if (std::fabs(next - pressure) < 1.0) return next;
        pressure = next;
    }
    throw ConfigError(key, "threshold fixed point did not converge in 100 iterations");
}

}  // namespace

Thresholds thresholds_from_valve(const ValveModel& valve, const PhysicalConstants& constants) {
    valve.validate();
    const double p_high = flip_pressure(
        [&](double d) { return snap_through_threshold(valve, d, constants); }, constants,
        "valve.p_snap_through");
    const double p_low = flip_pressure(
        [&](double d) { return snap_back_threshold(valve, d, constants); }, constants,
        "valve.p_snap_back");
    if (!(p_high > p_low)) {
        throw ConfigError("valve", "derived thresholds leave an empty hysteresis band");
    }
    return {p_high, p_low};
}

}  // namespace glidesim
