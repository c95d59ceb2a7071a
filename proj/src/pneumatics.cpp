#include "glidesim/pneumatics.hpp"

#include "glidesim/numeric.hpp"
#include "glidesim/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace glidesim {

namespace {

void require_non_negative(double value, const char* key) {
    if (!(value >= 0.0)) throw ConfigError(key, "must be >= 0");
}

double solve_threshold(double p_membrane, double back_pressure, double depth,
                       const PhysicalConstants& constants) {
    const double hydro = hydrostatic_pressure(depth, constants);
    // residual(P) = P + hydro - back_pressure - p_membrane, increasing in P
    auto residual = [&](double applied) { return applied + hydro - back_pressure - p_membrane; };
    const double span = std::fabs(hydro) + std::fabs(back_pressure) + std::fabs(p_membrane) + 1.0;
    return numeric::bisect(residual, -span, span, 1e-9, 1e-9);
}

}  // namespace

void ValveModel::validate() const {
    if (!(p_snap_back >= 0.0)) throw ConfigError("valve.p_snap_back", "must be >= 0");
    if (!(p_snap_through > p_snap_back)) {
        throw ConfigError("valve.p_snap_through", "must exceed p_snap_back (empty hysteresis band)");
    }
    require_non_negative(membrane_displacement_volume, "valve.membrane_displacement_volume");
    require_non_negative(sealed_chamber_volume, "valve.sealed_chamber_volume");
    require_non_negative(additional_sealed_volume, "valve.additional_sealed_volume");
    if (membrane_displacement_volume > sealed_volume()) {
        throw ConfigError("valve.membrane_displacement_volume", "exceeds the sealed volume");
    }
    require_non_negative(membrane_thickness, "valve.membrane_thickness");
    if (!(opening_angle > 0.0 && opening_angle < 180.0)) {
        throw ConfigError("valve.opening_angle", "must lie in (0, 180) degrees");
    }
}

double membrane_swept_volume(double radius, double opening_angle_deg) {
    const double rim_angle = 0.5 * (180.0 - opening_angle_deg) * units::deg;
    const double sphere_radius = radius / std::sin(rim_angle);
    const double height = sphere_radius * (1.0 - std::cos(rim_angle));
    const double cap = std::numbers::pi * height * (3.0 * radius * radius + height * height) / 6.0;
    return 2.0 * cap;
}

ValveModel default_valve() {
    ValveModel valve;
    valve.membrane_displacement_volume = membrane_swept_volume(5.0e-3, valve.opening_angle);
    valve.sealed_chamber_volume = 2.0 * units::mL;
    valve.additional_sealed_volume = 150.0 * units::mL;
    return valve;
}

double sealed_back_pressure(const ValveModel& valve, double displacement, double p_atm) {
    const double volume = valve.sealed_volume();
    if (displacement >= volume) {
        throw ModelSingularityError("sealed chamber fully swept by the membrane");
    }
    if (std::isinf(volume)) return 0.0;
    // p_atm * V / (V - d) - p_atm, written to stay accurate for V >> d
    return p_atm * displacement / (volume - displacement);
}

double snap_through_threshold(const ValveModel& valve, double depth,
                              const PhysicalConstants& constants) {
    const double back =
        sealed_back_pressure(valve, valve.membrane_displacement_volume, constants.p_atm);
    return solve_threshold(valve.p_snap_through, back, depth, constants);
}

double snap_back_threshold(const ValveModel& valve, double depth,
                           const PhysicalConstants& constants) {
    const double back =
        sealed_back_pressure(valve, -valve.membrane_displacement_volume, constants.p_atm);
    return solve_threshold(valve.p_snap_back, back, depth, constants);
}

void SwimBladder::validate() const {
    require_non_negative(capacity, "bladder.capacity");
    if (!(fill_volume >= 0.0 && fill_volume <= capacity)) {
        throw ConfigError("bladder.fill_volume", "must lie in [0, capacity]");
    }
    require_non_negative(inflation_differential, "bladder.inflation_differential");
    require_non_negative(gas_moles, "bladder.gas_moles");
}

Cartridge Cartridge::ideal_gas(double p_cartridge, double v_cartridge, double temperature,
                               double rated_energy) {
    Cartridge c;
    c.p_cartridge = p_cartridge;
    c.v_cartridge = v_cartridge;
    c.temperature = temperature;
    c.gas_remaining = p_cartridge * v_cartridge / (units::gas_constant * temperature);
    c.initial_gas = c.gas_remaining;
    c.rated_energy = rated_energy;
    return c;
}

void Cartridge::validate() const {
    require_non_negative(p_cartridge, "cartridge.p_cartridge");
    require_non_negative(v_cartridge, "cartridge.v_cartridge");
    if (!(temperature > 0.0)) throw ConfigError("cartridge.temperature", "must be > 0");
    require_non_negative(gas_remaining, "cartridge.gas_remaining");
    require_non_negative(rated_energy, "cartridge.energy");
}

void Regulator::validate() const {
    if (!(setpoint > 0.0)) throw ConfigError("regulator.setpoint", "must be > 0");
}

double bladder_gas_pressure(const SwimBladder& bladder, double depth,
                            const PhysicalConstants& constants, GasConvention convention) {
    const double gauge = hydrostatic_pressure(depth, constants) + bladder.inflation_differential;
    return convention == GasConvention::Absolute ? constants.p_atm + gauge : gauge;
}

double moles_for_volume(const SwimBladder& bladder, double volume, double depth, double temperature,
                        const PhysicalConstants& constants, GasConvention convention) {
    return bladder_gas_pressure(bladder, depth, constants, convention) * volume /
           (units::gas_constant * temperature);
}

InflateResult inflate_step(const SwimBladder& bladder, const Regulator& regulator,
                           const Cartridge& cartridge, double depth, double dt,
                           double flow_coefficient, const PhysicalConstants& constants,
                           GasConvention convention) {
    if (!(dt >= 0.0)) throw DomainError("inflate_step: dt must be >= 0");
    InflateResult out{bladder, cartridge, 0.0};

    const double back_pressure =
        hydrostatic_pressure(depth, constants) + bladder.inflation_differential;
    const double drive = regulator.setpoint - back_pressure;
    if (drive <= 0.0 || cartridge.gas_remaining <= 0.0) return out;

    double added = std::min(flow_coefficient * drive * dt, bladder.capacity - bladder.fill_volume);
    if (added <= 0.0) return out;

    const double pressure = bladder_gas_pressure(bladder, depth, constants, convention);
    const double rt = units::gas_constant * cartridge.temperature;
    double moles = pressure * added / rt;
    if (moles > cartridge.gas_remaining) {
        moles = cartridge.gas_remaining;
        added = moles * rt / pressure;
    }

    out.cartridge.gas_remaining = cartridge.gas_remaining - moles;
    // the bladder receives exactly what left the cartridge
    moles = cartridge.gas_remaining - out.cartridge.gas_remaining;
    out.bladder.gas_moles = bladder.gas_moles + moles;
    out.bladder.fill_volume = std::min(bladder.capacity, bladder.fill_volume + added);
    out.moles_transferred = moles;
    return out;
}

VentResult vent_step(const SwimBladder& bladder, double depth, double dt, double flow_coefficient,
                     const PhysicalConstants& constants) {
    if (!(dt >= 0.0)) throw DomainError("vent_step: dt must be >= 0");
    VentResult out{bladder, 0.0};
    if (bladder.fill_volume <= 0.0) return out;

    const double ambient = constants.p_atm + hydrostatic_pressure(depth, constants);
    const double internal = ambient + bladder.inflation_differential;
    const double drive = internal - ambient;
    if (drive <= 0.0) return out;  // diode blocks reverse flow

    const double released = flow_coefficient * drive * dt;
    if (released >= bladder.fill_volume) {
        out.vented_moles = bladder.gas_moles;
        out.bladder.fill_volume = 0.0;
        out.bladder.gas_moles = 0.0;
        return out;
    }
    const double moles = bladder.gas_moles * (released / bladder.fill_volume);
    out.bladder.fill_volume = bladder.fill_volume - released;
    out.bladder.gas_moles = bladder.gas_moles - moles;
    out.vented_moles = bladder.gas_moles - out.bladder.gas_moles;
    return out;
}

double cartridge_energy(const Cartridge& cartridge) {
    if (cartridge.initial_gas <= 0.0) return 0.0;
    return cartridge.rated_energy * (cartridge.gas_remaining / cartridge.initial_gas);
}

}  // namespace glidesim
