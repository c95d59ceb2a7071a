#include "glidesim/core_model.hpp"

#include <cmath>
#include <string>

namespace glidesim {

namespace {

void require_positive(double value, const char* key) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ConfigError(key, "must be finite and > 0, got " + std::to_string(value));
    }
}

}  // namespace

void PhysicalConstants::validate() const {
    require_positive(rho_water, "constants.rho_water");
    require_positive(g, "constants.g");
    require_positive(hydrostatic_gradient, "constants.hydrostatic_gradient");
    require_positive(p_atm, "constants.p_atm");
}

GliderDesign GliderDesign::from_trim(double mass, double trim_force, double bladder_capacity,
                                     const PhysicalConstants& constants) {
    GliderDesign design;
    design.mass = mass;
    design.bladder_capacity = bladder_capacity;
    design.hull_volume = (mass * constants.g + trim_force) / (constants.rho_water * constants.g);
    return design;
}

void GliderDesign::validate() const {
    require_positive(mass, "design.mass");
    require_positive(hull_volume, "design.hull_volume");
    if (!(bladder_capacity >= 0.0) || !std::isfinite(bladder_capacity)) {
        throw ConfigError("design.bladder_capacity", "must be finite and >= 0");
    }
    if (!(added_mass_fraction >= 0.0) || !std::isfinite(added_mass_fraction)) {
        throw ConfigError("design.added_mass_fraction", "must be finite and >= 0");
    }
}

ForceBalance::ForceBalance(double f_buoyancy_glider, double f_gravity_glider,
                           double f_buoyancy_bladder)
    : f_buoyancy_glider_(f_buoyancy_glider),
      f_gravity_glider_(f_gravity_glider),
      f_buoyancy_bladder_(f_buoyancy_bladder),
      f_net_((f_buoyancy_glider - f_gravity_glider) + f_buoyancy_bladder) {}

double hydrostatic_pressure(double depth, const PhysicalConstants& constants) {
    if (!(depth >= 0.0)) {
        throw DomainError("hydrostatic_pressure: depth must be >= 0");
    }
    return constants.hydrostatic_gradient * depth;
}

double depth_for_pressure(double pressure, const PhysicalConstants& constants) {
    return pressure / constants.hydrostatic_gradient;
}

double bladder_buoyancy_force(double displaced_volume, const PhysicalConstants& constants) {
    if (!(displaced_volume >= 0.0)) {
        throw DomainError("bladder_buoyancy_force: volume must be >= 0");
    }
    return displaced_volume * constants.rho_water * constants.g;
}

ForceBalance net_force(const GliderDesign& design, double bladder_volume,
                       const PhysicalConstants& constants) {
    if (!(bladder_volume >= 0.0) || bladder_volume > design.bladder_capacity) {
        throw DomainError("net_force: bladder volume outside [0, capacity]");
    }
    return ForceBalance(constants.rho_water * constants.g * design.hull_volume,
                        design.mass * constants.g,
                        bladder_buoyancy_force(bladder_volume, constants));
}

double trim_force(const GliderDesign& design, const PhysicalConstants& constants) {
    return net_force(design, 0.0, constants).f_net();
}

}  // namespace glidesim
