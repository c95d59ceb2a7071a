#pragma once

#include "glidesim/pneumatics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace glidesim {

/// Inputs of the closed-form gas-budget range model.
struct RangeModelInput {
    double p_cartridge = 0;      // Pa
    double v_cartridge = 0;      // m^3
    double p_swim_bladder = 0;   // Pa, wall pressure
    double v_swim_bladder = 0;   // m^3
    double depth = 0;            // m
    double hydrostatic_gradient = 10.0e3;  // Pa/m
    double p_atm = 101.325e3;    // Pa, used only under GasConvention::Absolute
};

/// Number of bladder fills the cartridge supports:
///   P_cart V_cart / ((P_sb + gradient * d) V_sb)
/// `Absolute` adds p_atm to the per-fill pressure.
double closed_form_cycles(const RangeModelInput& input,
                          GasConvention convention = GasConvention::Gauge);

/// closed_form_cycles(input) * depth. Throws DomainError on a non-positive
/// denominator or negative inputs.
double closed_form_range(const RangeModelInput& input,
                         GasConvention convention = GasConvention::Gauge);

struct PowerEfficiency {
    double power_w;
    double efficiency_mw_per_m;
};

/// power = energy / time; efficiency = power / distance, in mW/m.
PowerEfficiency power_and_efficiency(double total_energy, double total_time, double total_distance);

enum class EfficiencyUnit { MilliwattPerMeter, JoulePerMeter };

/// One row of the literature comparison. Missing cells are nullopt; the
/// estimated_* flags mark values that were derived rather than reported.
struct EfficiencyRecord {
    std::string system_name;
    std::string propulsion;
    double power_efficiency = 0;
    EfficiencyUnit efficiency_unit = EfficiencyUnit::MilliwattPerMeter;
    std::optional<double> gliding_range;       // m
    std::optional<double> gliding_depth;       // m
    std::optional<double> deployment_time;     // h
    bool estimated_efficiency = false;
    bool estimated_range = false;
    bool estimated_depth = false;

    bool estimated() const { return estimated_efficiency || estimated_range || estimated_depth; }
    /// False for rows whose efficiency is an energy per metre (no deployment time).
    bool comparable() const { return efficiency_unit == EfficiencyUnit::MilliwattPerMeter; }
};

const std::vector<EfficiencyRecord>& comparison_table();

}  // namespace glidesim
