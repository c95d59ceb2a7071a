#include "catch_amalgamated.hpp"

#include "glidesim/controller.hpp"
#include "glidesim/units.hpp"

using namespace glidesim;
using Catch::Approx;

TEST_CASE("inclusive thresholds", "[controller]") {
    const ControllerState s = ControllerState::with_thresholds(10e3, 1e3);
    const ControllerState in = step(s, 10e3);
    CHECK(in.mode == ControllerMode::Inflating);
    CHECK(in.transition_count == 1);

    CHECK(step(in, 5e3).mode == ControllerMode::Inflating);
    CHECK(step(in, 5e3).transition_count == 1);

    const ControllerState out = step(in, 1e3);
    CHECK(out.mode == ControllerMode::Deflating);
    CHECK(out.transition_count == 2);

    CHECK(step(s, 9999.0).mode == ControllerMode::Deflating);
    CHECK(to_string(ControllerMode::Inflating) == "INFLATING");
    CHECK(to_string(ControllerMode::Deflating) == "DEFLATING");
}

TEST_CASE("thresholds from the valve", "[controller]") {
    const PhysicalConstants c;
    ValveModel v = default_valve();
    v.additional_sealed_volume = 1000.0;
    const Thresholds big = thresholds_from_valve(v, c);
    CHECK(big.p_high == Approx(10e3).epsilon(1e-6));
    CHECK(big.p_low == Approx(1e3).epsilon(1e-6));
    CHECK(depth_for_pressure(big.p_high, c) == Approx(1.0).epsilon(1e-6));
    CHECK(depth_for_pressure(big.p_low, c) == Approx(0.1).epsilon(1e-6));

    v.additional_sealed_volume = 0.0;
    CHECK(thresholds_from_valve(v, c).p_high > 10e3);

    v.p_snap_back = v.p_snap_through;
    CHECK_THROWS_AS(thresholds_from_valve(v, c), ConfigError);
}
