#include "catch_amalgamated.hpp"

#include "glidesim/dynamics.hpp"

#include <cmath>
#include <random>

using namespace glidesim;
using Catch::Approx;

TEST_CASE("terminal speed formula", "[dynamics]") {
    DragModel d;
    d.c_d_a = 0.05;
    CHECK(terminal_speed(0.0, d) == 0.0);
    CHECK(terminal_speed(1.0, d) == Approx(0.2));
    CHECK(terminal_speed(-1.0, d) == Approx(0.2));
}

TEST_CASE("surface clamp", "[dynamics]") {
    const GlideGeometry g;
    const DragModel d;
    const KinematicState s{0.0, 3.0, 0.0};
    const KinematicState next = step_kinematics(s, +1.0, g, d, 5.0, 0.05);
    CHECK(next.depth == 0.0);
    CHECK(next.x == 3.0);
    CHECK(next.v_along_path == 0.0);

    // ascending into the surface stops there
    const KinematicState rising{0.01, 1.0, -0.3};
    const KinematicState top = step_kinematics(rising, +1.0, g, d, 5.0, 0.5);
    CHECK(top.depth == 0.0);
    CHECK(top.v_along_path == 0.0);
    CHECK(top.x >= rising.x);
}

TEST_CASE("descent and ascent follow their path angles", "[dynamics]") {
    GlideGeometry g;
    g.theta = 0.4;
    g.phi = 0.7;
    const DragModel d;
    KinematicState s{2.0, 0.0, 0.2};
    const auto rd = glide_rates(s.v_along_path, s.depth, -1.0, g, d, 5.0);
    CHECK(rd.ddepth / rd.dx == Approx(std::tan(0.4)));
    const auto ru = glide_rates(-0.2, 2.0, +1.0, g, d, 5.0);
    CHECK(ru.ddepth / ru.dx == Approx(-std::tan(0.7)));
    CHECK(ru.dx > 0.0);
}

TEST_CASE("x never decreases", "[dynamics][property]") {
    const GlideGeometry g;
    const DragModel d;
    Catch::SimplePcg32 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    KinematicState s{1.0, 0.0, 0.0};
    for (int i = 0; i < 5000; ++i) {
        const KinematicState next = step_kinematics(s, 2.0 * u(rng), g, d, 5.0, 0.05);
        REQUIRE(next.x >= s.x);
        REQUIRE(next.depth >= 0.0);
        s = next;
    }
}

TEST_CASE("constant force relaxes to terminal speed", "[dynamics]") {
    const GlideGeometry g;
    const DragModel d;
    const double mass = 5.583;
    const double v_t = terminal_speed(-1.0, d);
    const double tau = relaxation_time(v_t, d, mass);
    KinematicState s{0.0, 0.0, 0.0};
    for (int i = 0; i < static_cast<int>(10.0 * tau / 0.01) + 1; ++i) {
        s = step_kinematics(s, -1.0, g, d, mass, 0.01);
    }
    CHECK(s.v_along_path == Approx(v_t).epsilon(0.01));
    CHECK(s.depth > 0.0);
}
