#pragma once

#include <cmath>

namespace glidesim {

/// Prescribed glide path angles, both measured from the horizontal.
struct GlideGeometry {
    double theta = std::atan2(8.0, 15.0);  // rad, descent
    double phi = std::atan2(8.0, 15.0);    // rad, ascent

    void validate() const;
};

/// Lumped quadratic drag. `linear_damping` keeps the relaxation rate finite
/// when the glider is at rest.
struct DragModel {
    double c_d_a = 0.05;          // m^2
    double rho = 1000.0;          // kg/m^3
    double linear_damping = 0.05; // kg/s

    void validate() const;
};

/// Longitudinal state. `v_along_path` is signed: positive while descending
/// along theta, negative while ascending along phi.
struct KinematicState {
    double depth = 0.0;        // m, positive down, never negative
    double x = 0.0;            // m, horizontal distance, never decreases
    double v_along_path = 0.0; // m/s
};

/// Speed at which quadratic drag balances |f_net|.
double terminal_speed(double f_net, const DragModel& drag);

/// First-order relaxation time at speed `v`.
double relaxation_time(double v, const DragModel& drag, double effective_mass);

struct GlideRates {
    double dv;      // m/s^2
    double ddepth;  // m/s
    double dx;      // m/s
};

/// Right-hand side of the glide equations: the path speed relaxes toward
/// the signed terminal speed, and descends along theta or climbs along phi.
/// All rates vanish while the glider floats at the surface.
GlideRates glide_rates(double v, double depth, double f_net, const GlideGeometry& geometry,
                       const DragModel& drag, double effective_mass);

/// Surface stop applied after a step: depth >= 0, no upward speed at the
/// surface, x never decreases below `previous_x`.
KinematicState clamp_to_surface(KinematicState state, double previous_x);

/// Advances the glide state by `dt` with classical RK4 at constant f_net.
/// Speed relaxes toward the terminal speed in the direction the net force
/// points; the surface is a hard stop.
KinematicState step_kinematics(const KinematicState& state, double f_net,
                               const GlideGeometry& geometry, const DragModel& drag,
                               double effective_mass, double dt);

}  // namespace glidesim
