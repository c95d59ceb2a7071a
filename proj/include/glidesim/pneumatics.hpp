#pragma once

#include "glidesim/core_model.hpp"

namespace glidesim {

/// Soft bistable valve used as a hydrostatic pressure switch. One chamber is
/// sealed at atmospheric pressure, the other sees the water. Flipping the
/// membrane sweeps `membrane_displacement_volume` of gas in the sealed side.
struct ValveModel {
    double p_snap_through = 10.0e3;           // Pa, intrinsic membrane differential
    double p_snap_back = 1.0e3;               // Pa
    double membrane_displacement_volume = 0;  // m^3
    double sealed_chamber_volume = 2.0e-6;    // m^3
    double additional_sealed_volume = 0;      // m^3, tubing attached to the sealed port
    double membrane_thickness = 3.0e-3;       // m
    double opening_angle = 87.5;              // deg

    double sealed_volume() const { return sealed_chamber_volume + additional_sealed_volume; }

    void validate() const;
};

/// Gas volume swept when a spherical-cap membrane of base radius `radius`
/// inverts. The cap meets the rim at (180 - opening_angle) / 2 degrees.
double membrane_swept_volume(double radius, double opening_angle_deg);

/// 3 mm membrane, 87.5 deg opening angle, 5 mm radius, 2 mL chamber plus the
/// largest (150 mL) characterization tube.
ValveModel default_valve();

/// Gauge back-pressure of the sealed chamber after it has been compressed
/// isothermally by `displacement` (negative = expanded).
double sealed_back_pressure(const ValveModel& valve, double displacement, double p_atm);

/// Pressure that must be applied on top of the hydrostatic pressure at
/// `depth` to flip the membrane forward. Negative once the depth alone is
/// enough.
double snap_through_threshold(const ValveModel& valve, double depth,
                              const PhysicalConstants& constants);

/// Same for the return flip (sealed chamber displacement reversed).
double snap_back_threshold(const ValveModel& valve, double depth,
                           const PhysicalConstants& constants);

struct SwimBladder {
    double capacity = 300e-6;           // m^3
    double fill_volume = 0;             // m^3
    double inflation_differential = 0;  // Pa, wall pressure over ambient
    double gas_moles = 0;               // mol currently inside

    void validate() const;
};

struct Cartridge {
    double p_cartridge = 0;     // Pa, absolute
    double v_cartridge = 0;     // m^3
    double temperature = 293.15;// K
    double gas_remaining = 0;   // mol
    double initial_gas = 0;     // mol
    double rated_energy = 0;    // J when full

    /// Ideal-gas fill: gas_remaining = p V / (R T).
    static Cartridge ideal_gas(double p_cartridge, double v_cartridge, double temperature,
                               double rated_energy);

    void validate() const;
};

inline constexpr double co2_16g_energy = 3820.0;  // J

struct Regulator {
    double setpoint = 40.0e3;  // Pa, gauge

    void validate() const;
};

/// Pressure basis used to convert a bladder volume into moles. `Absolute`
/// is the physical accounting; `Gauge` charges volume at the gauge supply
/// pressure, which is how the closed-form range model counts gas.
enum class GasConvention { Absolute, Gauge };

/// Pressure of gas inside the bladder at `depth` under `convention`.
double bladder_gas_pressure(const SwimBladder& bladder, double depth,
                            const PhysicalConstants& constants, GasConvention convention);

/// Moles needed to fill `volume` of bladder at `depth`.
double moles_for_volume(const SwimBladder& bladder, double volume, double depth, double temperature,
                        const PhysicalConstants& constants, GasConvention convention);

struct InflateResult {
    SwimBladder bladder;
    Cartridge cartridge;
    double moles_transferred = 0;
};

/// Linear flow from the regulator into the bladder for `dt` seconds. Flow
/// stops when the setpoint cannot beat hydrostatic plus wall pressure, the
/// bladder is full, or the cartridge is empty.
InflateResult inflate_step(const SwimBladder& bladder, const Regulator& regulator,
                           const Cartridge& cartridge, double depth, double dt,
                           double flow_coefficient, const PhysicalConstants& constants,
                           GasConvention convention = GasConvention::Absolute);

struct VentResult {
    SwimBladder bladder;
    double vented_moles = 0;
};

/// One-way vent through the diode, driven by the wall pressure.
VentResult vent_step(const SwimBladder& bladder, double depth, double dt, double flow_coefficient,
                     const PhysicalConstants& constants);

/// Energy left in the cartridge, prorated linearly by remaining gas.
double cartridge_energy(const Cartridge& cartridge);

}  // namespace glidesim
