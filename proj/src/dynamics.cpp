#include "glidesim/dynamics.hpp"

#include "glidesim/errors.hpp"

#include <algorithm>
#include <numbers>

namespace glidesim {

void GlideGeometry::validate() const {
    constexpr double half_pi = 0.5 * std::numbers::pi;
    if (!(theta > 0.0 && theta < half_pi)) throw ConfigError("glide.theta", "must lie in (0, pi/2)");
    if (!(phi > 0.0 && phi < half_pi)) throw ConfigError("glide.phi", "must lie in (0, pi/2)");
}

void DragModel::validate() const {
    if (!(c_d_a > 0.0)) throw ConfigError("drag.c_d_a", "must be > 0");
    if (!(rho > 0.0)) throw ConfigError("drag.rho", "must be > 0");
    if (!(linear_damping > 0.0)) throw ConfigError("drag.linear_damping", "must be > 0");
}

double terminal_speed(double f_net, const DragModel& drag) {
    return std::sqrt(2.0 * std::fabs(f_net) / (drag.rho * drag.c_d_a));
}

double relaxation_time(double v, const DragModel& drag, double effective_mass) {
    return effective_mass / (drag.rho * drag.c_d_a * std::fabs(v) + drag.linear_damping);
}

GlideRates glide_rates(double v, double depth, double f_net, const GlideGeometry& geometry,
                       const DragModel& drag, double effective_mass) {
    const double speed = terminal_speed(f_net, drag);
    const double target = f_net < 0.0 ? speed : (f_net > 0.0 ? -speed : 0.0);
    if (depth <= 0.0 && v <= 0.0 && target <= 0.0) return {0.0, 0.0, 0.0};  // floating
    const double dv =
        (target - v) * (drag.rho * drag.c_d_a * std::fabs(v) + drag.linear_damping) / effective_mass;
    if (v >= 0.0) return {dv, v * std::sin(geometry.theta), v * std::cos(geometry.theta)};
    return {dv, v * std::sin(geometry.phi), -v * std::cos(geometry.phi)};
}

KinematicState clamp_to_surface(KinematicState state, double previous_x) {
    state.x = std::max(previous_x, state.x);
    if (state.depth <= 0.0) {
        state.depth = 0.0;
        if (state.v_along_path < 0.0) state.v_along_path = 0.0;
    }
    return state;
}

KinematicState step_kinematics(const KinematicState& state, double f_net,
                               const GlideGeometry& geometry, const DragModel& drag,
                               double effective_mass, double dt) {
    if (!(dt > 0.0)) throw DomainError("step_kinematics: dt must be > 0");

    auto rates = [&](const KinematicState& y) {
        return glide_rates(y.v_along_path, y.depth, f_net, geometry, drag, effective_mass);
    };
    auto shift = [](const KinematicState& y, double h, const GlideRates& k) {
        return KinematicState{y.depth + h * k.ddepth, y.x + h * k.dx, y.v_along_path + h * k.dv};
    };
    const GlideRates k1 = rates(state);
    const GlideRates k2 = rates(shift(state, 0.5 * dt, k1));
    const GlideRates k3 = rates(shift(state, 0.5 * dt, k2));
    const GlideRates k4 = rates(shift(state, dt, k3));

    KinematicState next;
    next.v_along_path = state.v_along_path + dt / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    next.depth = state.depth + dt / 6.0 * (k1.ddepth + 2.0 * k2.ddepth + 2.0 * k3.ddepth + k4.ddepth);
    next.x = state.x + dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    return clamp_to_surface(next, state.x);
}

}  // namespace glidesim
