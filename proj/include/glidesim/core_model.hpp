#pragma once

#include "glidesim/errors.hpp"

namespace glidesim {

/// Environment constants. Pressures are gauge (relative to the surface)
/// everywhere in the library except `p_atm`, which is absolute.
struct PhysicalConstants {
    double rho_water = 1000.0;             // kg/m^3, fresh water (pool trials)
    double g = 9.81;                       // m/s^2
    double hydrostatic_gradient = 10.0e3;  // Pa/m
    double p_atm = 101.325e3;              // Pa, absolute

    /// Throws ConfigError naming the first non-positive field.
    void validate() const;
};

/// Static glider parameters that enter the force balance.
struct GliderDesign {
    double mass = 3.722;              // kg, includes ballast
    double hull_volume = 0.0;         // m^3 displaced with the bladder empty
    double bladder_capacity = 300e-6; // m^3, three 100 cm^3 balloons
    double added_mass_fraction = 0.5; // entrained fluid, as a fraction of `mass`

    /// Hull volume chosen so the deflated net force equals `trim_force`
    /// (negative = sinks).
    static GliderDesign from_trim(double mass, double trim_force, double bladder_capacity,
                                  const PhysicalConstants& constants);

    double effective_mass() const { return mass * (1.0 + added_mass_fraction); }

    void validate() const;
};

/// Vertical force decomposition, upward positive. The constructor enforces
/// f_net = (f_buoyancy_glider - f_gravity_glider) + f_buoyancy_bladder.
class ForceBalance {
public:
    ForceBalance(double f_buoyancy_glider, double f_gravity_glider, double f_buoyancy_bladder);

    double f_buoyancy_glider() const { return f_buoyancy_glider_; }
    double f_gravity_glider() const { return f_gravity_glider_; }
    double f_buoyancy_bladder() const { return f_buoyancy_bladder_; }
    double f_net() const { return f_net_; }

private:
    double f_buoyancy_glider_;
    double f_gravity_glider_;
    double f_buoyancy_bladder_;
    double f_net_;
};

/// Gauge pressure at `depth` metres below the surface.
double hydrostatic_pressure(double depth, const PhysicalConstants& constants);

/// Depth at which the hydrostatic gauge pressure equals `pressure`.
double depth_for_pressure(double pressure, const PhysicalConstants& constants);

/// Buoyant force rho * g * V of a displaced volume. The printed form of the
/// bladder-force relation drops g; the force form is used everywhere here.
double bladder_buoyancy_force(double displaced_volume, const PhysicalConstants& constants);

ForceBalance net_force(const GliderDesign& design, double bladder_volume,
                       const PhysicalConstants& constants);

/// Net force with an empty bladder.
double trim_force(const GliderDesign& design, const PhysicalConstants& constants);

}  // namespace glidesim
