#include "catch_amalgamated.hpp"

#include "glidesim/claims.hpp"
#include "glidesim/geometry.hpp"
#include "glidesim/units.hpp"

using namespace glidesim;
using Catch::Approx;

namespace {

MissionSummary nominal() {
    MissionSummary s;
    s.cycles_completed = 10;
    s.transitions = 20;
    s.total_range = 150.0;
    s.total_time = 900.0;
    s.max_depth = 4.0;
    s.energy_used = 3820.0;
    return s;
}

}  // namespace

TEST_CASE("reported values are frozen", "[claims]") {
    const ReferenceClaims& c = ReferenceClaims::reported();
    CHECK(c.all().size() == 12);
    CHECK(c.get("max_depth").value == 4.0);
    CHECK(c.get("per_cycle_range").value == 15.0);
    CHECK(c.get("cycle_time").value == 90.0);
    CHECK(c.get("cycles").value == 10.0);
    CHECK(c.get("total_range").value == 150.0);
    CHECK(c.get("total_time").value == 900.0);
    CHECK(c.get("cartridge_energy").value == 3820.0);
    CHECK(c.get("power").value == 4.2);
    CHECK(c.get("efficiency").value == 28.0);
    CHECK(c.get("glider_mass").value == 3.722);
    CHECK(c.get("hull_volume").value == Approx(3861.12e-6));
    CHECK(c.get("bladder_capacity").value == Approx(300e-6));
    CHECK_THROWS(c.get("top_speed"));
}

TEST_CASE("the nominal summary satisfies every claim", "[claims]") {
    const ClaimReport r = verify_claims(nominal(), ReferenceClaims::reported());
    CHECK(r.all_passed());
    for (const auto& check : r.checks) CHECK(check.passed);
    CHECK(format_claim_report(r).find("FAIL") == std::string::npos);
}

TEST_CASE("an empty summary fails every claim", "[claims]") {
    const ClaimReport r = verify_claims(MissionSummary{}, ReferenceClaims::reported());
    CHECK_FALSE(r.all_passed());
    for (const auto& check : r.checks) CHECK_FALSE(check.passed);
}

TEST_CASE("tolerance edges", "[claims]") {
    MissionSummary s = nominal();
    s.cycles_completed = 11;
    s.total_range = 160.0;
    s.total_time = 980.0;
    CHECK(verify_claims(s, ReferenceClaims::reported()).all_passed() == false);  // power drifts

    s = nominal();
    s.max_depth = 4.3;
    CHECK_FALSE(verify_claims(s, ReferenceClaims::reported()).all_passed());
}

TEST_CASE("design claims", "[claims]") {
    const PhysicalConstants c;
    const GliderDesign d = GliderDesign::from_trim(3.722, -2.0, 300e-6, c);
    const ClaimReport r =
        verify_design_claims(d, displaced_volume(reference_wing()), ReferenceClaims::reported());
    CHECK(r.all_passed());

    const GliderDesign heavy = GliderDesign::from_trim(4.0, -2.0, 300e-6, c);
    CHECK_FALSE(verify_design_claims(heavy, displaced_volume(reference_wing()),
                                     ReferenceClaims::reported())
                    .all_passed());
}
