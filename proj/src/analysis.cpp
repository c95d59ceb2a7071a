#include "glidesim/analysis.hpp"

namespace glidesim {

double closed_form_cycles(const RangeModelInput& in, GasConvention convention) {
    if (in.p_cartridge < 0 || in.v_cartridge < 0 || in.p_swim_bladder < 0 || in.depth < 0) {
        throw DomainError("closed_form_range: inputs must be non-negative");
    }
    double per_fill_pressure = in.p_swim_bladder + in.hydrostatic_gradient * in.depth;
    if (convention == GasConvention::Absolute) per_fill_pressure += in.p_atm;
    const double denominator = per_fill_pressure * in.v_swim_bladder;
    if (!(denominator > 0.0)) {
        throw DomainError("closed_form_range: zero denominator (bladder pressure times volume)");
    }
    return in.p_cartridge * in.v_cartridge / denominator;
}

double closed_form_range(const RangeModelInput& input, GasConvention convention) {
    return closed_form_cycles(input, convention) * input.depth;
}

PowerEfficiency power_and_efficiency(double total_energy, double total_time, double total_distance) {
    if (!(total_time > 0.0)) throw DomainError("power_and_efficiency: time must be > 0");
    if (!(total_distance > 0.0)) throw DomainError("power_and_efficiency: distance must be > 0");
    const double power = total_energy / total_time;
    return {power, power / total_distance * 1.0e3};
}

const std::vector<EfficiencyRecord>& comparison_table() {
    using U = EfficiencyUnit;
    static const std::vector<EfficiencyRecord> table = {
        {"Seaglider", "Mechanical / Electrical", 3.84e-4, U::MilliwattPerMeter, 2.826e6, 1019.0,
         3144.0, true, true, false},
        {"Slocum", "Hybrid gliding propulsion", 42.8125, U::JoulePerMeter, std::nullopt, 100.0,
         std::nullopt, false, false, false},
        {"Tianjin University", "Thermal", 2.0697, U::MilliwattPerMeter, 6.77e5, 1000.0, 648.0,
         true, false, false},
        {"Wave Glider", "Wave and Solar", 2.16e-2, U::MilliwattPerMeter, 3.982e6, std::nullopt,
         5928.0, true, true, false},
        {"Fast Moving Manta Ray", "Ionic Hydrogel and DEA", 42.10, U::MilliwattPerMeter, 128.7,
         std::nullopt, 3.25, true, true, false},
        {"Wireless Flatfish", "Thermoelectric Pneumatic Actuator", 3.236e5, U::MilliwattPerMeter,
         72.0, 10.5, 1.0, true, false, true},
        {"SoFi", "Hydraulic Pump", 178.67, U::MilliwattPerMeter, 296.8, 8.1, 0.66, true, false,
         false},
        {"Our Implementation", "Fluidic circuit", 28.0, U::MilliwattPerMeter, 150.0, 4.0, 0.25,
         false, false, false},
    };
    return table;
}

}  // namespace glidesim
