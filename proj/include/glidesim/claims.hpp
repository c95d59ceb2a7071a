#pragma once

#include "glidesim/core_model.hpp"
#include "glidesim/mission.hpp"

#include <string>
#include <vector>

namespace glidesim {

struct Claim {
    std::string name;
    double value;
    std::string unit;
    std::string citation;
};

/// Reported figures of the tested glider. Immutable.
class ReferenceClaims {
public:
    static const ReferenceClaims& reported();

    const Claim& get(const std::string& name) const;
    const std::vector<Claim>& all() const { return claims_; }

private:
    explicit ReferenceClaims(std::vector<Claim> claims) : claims_(std::move(claims)) {}
    std::vector<Claim> claims_;
};

/// Relative tolerances except `cycles`, which is absolute.
struct ClaimTolerances {
    double cycle_time = 0.10;
    double per_cycle_range = 0.10;
    double total_range = 0.10;
    double total_time = 0.10;
    double cycles = 1.0;
    double max_depth = 0.05;
    double power = 0.02;
    double efficiency = 0.02;
    double energy = 0.02;
    double design = 0.01;
};

struct ClaimCheck {
    std::string name;
    double measured;
    double target;
    double tolerance;
    bool relative;
    bool passed;
};

struct ClaimReport {
    std::vector<ClaimCheck> checks;

    bool all_passed() const;
};

/// Mission-level claims. Power is recomputed as energy / time.
ClaimReport verify_claims(const MissionSummary& summary, const ReferenceClaims& claims,
                          const ClaimTolerances& tolerances = {});

/// Mass, bladder capacity and hull envelope volume.
ClaimReport verify_design_claims(const GliderDesign& design, double hull_envelope_volume,
                                 const ReferenceClaims& claims,
                                 const ClaimTolerances& tolerances = {});

/// Fixed-width text table, one line per check.
std::string format_claim_report(const ClaimReport& report);

}  // namespace glidesim
