#include "glidesim/claims.hpp"

#include "glidesim/report.hpp"
#include "glidesim/units.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace glidesim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ClaimCheck relative_check(const std::string& name, double measured, double target, double tol) {
    const bool ok = std::isfinite(measured) && std::fabs(measured - target) <= tol * std::fabs(target);
    return {name, measured, target, tol, true, ok};
}

ClaimCheck absolute_check(const std::string& name, double measured, double target, double tol) {
    const bool ok = std::isfinite(measured) && std::fabs(measured - target) <= tol;
    return {name, measured, target, tol, false, ok};
}

double ratio(double a, double b) { return b > 0.0 ? a / b : kNaN; }

}  // namespace

const ReferenceClaims& ReferenceClaims::reported() {
    static const ReferenceClaims claims({
        {"max_depth", 4.0, "m", "pool trial, dive depth"},
        {"per_cycle_range", 15.0, "m", "pool trial, horizontal distance per cycle"},
        {"cycle_time", 90.0, "s", "pool trial, duration of one cycle"},
        {"cycles", 10.0, "", "cycles supported by one 16 g CO2 cartridge"},
        {"total_range", 150.0, "m", "range on one cartridge"},
        {"total_time", 900.0, "s", "mission time on one cartridge"},
        {"cartridge_energy", 3820.0, "J", "stored energy of a 16 g CO2 cartridge"},
        {"power", 4.2, "W", "average power over the mission"},
        {"efficiency", 28.0, "mW/m", "power per metre travelled"},
        {"glider_mass", 3.722, "kg", "design table, total glider weight"},
        {"hull_volume", 3861.12 * units::cm3, "m^3", "design table, total glider volume"},
        {"bladder_capacity", 3.0 * 100.0 * units::cm3, "m^3", "design table, three 100 cm^3 balloons"},
    });
    return claims;
}

const Claim& ReferenceClaims::get(const std::string& name) const {
    for (const auto& c : claims_) {
        if (c.name == name) return c;
    }
    throw std::out_of_range("unknown claim: " + name);
}

bool ClaimReport::all_passed() const {
    if (checks.empty()) return false;
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

ClaimReport verify_claims(const MissionSummary& s, const ReferenceClaims& claims,
                          const ClaimTolerances& tol) {
    const double cycles = static_cast<double>(s.cycles_completed);
    const double power = ratio(s.energy_used, s.total_time);
    const double efficiency = ratio(power * 1000.0, s.total_range);
    auto v = [&](const char* name) { return claims.get(name).value; };

    ClaimReport r;
    r.checks.push_back(relative_check("cycle_time", ratio(s.total_time, cycles), v("cycle_time"),
                                      tol.cycle_time));
    r.checks.push_back(relative_check("per_cycle_range", ratio(s.total_range, cycles),
                                      v("per_cycle_range"), tol.per_cycle_range));
    r.checks.push_back(absolute_check("cycles", cycles, v("cycles"), tol.cycles));
    r.checks.push_back(
        relative_check("total_range", s.total_range, v("total_range"), tol.total_range));
    r.checks.push_back(relative_check("total_time", s.total_time, v("total_time"), tol.total_time));
    r.checks.push_back(relative_check("max_depth", s.max_depth, v("max_depth"), tol.max_depth));
    r.checks.push_back(
        relative_check("cartridge_energy", s.energy_used, v("cartridge_energy"), tol.energy));
    r.checks.push_back(relative_check("power", power, v("power"), tol.power));
    r.checks.push_back(relative_check("efficiency", efficiency, v("efficiency"), tol.efficiency));
    return r;
}

ClaimReport verify_design_claims(const GliderDesign& design, double hull_envelope_volume,
                                 const ReferenceClaims& claims, const ClaimTolerances& tol) {
    ClaimReport r;
    r.checks.push_back(relative_check("glider_mass", design.mass, claims.get("glider_mass").value, 1e-9));
    r.checks.push_back(relative_check("bladder_capacity", design.bladder_capacity,
                                      claims.get("bladder_capacity").value, 1e-9));
    r.checks.push_back(relative_check("hull_volume", hull_envelope_volume,
                                      claims.get("hull_volume").value, tol.design));
    return r;
}

std::string format_claim_report(const ClaimReport& report) {
    std::string out;
    char line[200];
    std::snprintf(line, sizeof line, "%-18s %14s %14s %12s  %s\n", "claim", "measured", "target",
                  "tolerance", "result");
    out += line;
    for (const auto& c : report.checks) {
        const std::string tol = c.relative ? format_number(c.tolerance * 100.0) + "%"
                                           : "+/-" + format_number(c.tolerance);
        std::snprintf(line, sizeof line, "%-18s %14s %14s %12s  %s\n", c.name.c_str(),
                      format_number(c.measured).c_str(), format_number(c.target).c_str(),
                      tol.c_str(), c.passed ? "PASS" : "FAIL");
        out += line;
    }
    return out;
}

}  // namespace glidesim
