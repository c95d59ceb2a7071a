#include "catch_amalgamated.hpp"

#include "glidesim/pneumatics.hpp"
#include "glidesim/units.hpp"

#include <cmath>
#include <random>

using namespace glidesim;
using Catch::Approx;

namespace {

ValveModel bare_valve(double displacement, double sealed, double extra) {
    ValveModel v;
    v.membrane_displacement_volume = displacement;
    v.sealed_chamber_volume = sealed;
    v.additional_sealed_volume = extra;
    return v;
}

}  // namespace

TEST_CASE("infinite sealed reservoir recovers the intrinsic thresholds", "[pneumatics][valve]") {
    const PhysicalConstants c;
    const ValveModel v = bare_valve(0.2e-6, 2e-6, 1000.0);  // 1000 m^3 of tubing
    CHECK(snap_through_threshold(v, 0.0, c) == Approx(10.0e3).epsilon(1e-6));
    CHECK(snap_back_threshold(v, 0.0, c) == Approx(1.0e3).epsilon(1e-6));

    const ValveModel inf = bare_valve(0.2e-6, 2e-6, INFINITY);
    CHECK(sealed_back_pressure(inf, 0.2e-6, c.p_atm) == 0.0);
}

TEST_CASE("Boyle's-law back-pressure at V_s = 10 delta", "[pneumatics][valve]") {
    const PhysicalConstants c;
    const double delta = 0.1e-6;
    const ValveModel v = bare_valve(delta, 10.0 * delta, 0.0);
    // p_atm (V / (V - delta) - 1) = p_atm / 9
    const double expected = 10.0e3 + c.p_atm * (10.0 / 9.0 - 1.0);
    CHECK(expected == Approx(21.258e3).margin(1.0));
    CHECK(snap_through_threshold(v, 0.0, c) == Approx(expected).epsilon(1e-9));
    // expansion on the return flip lowers the snap-back threshold
    CHECK(snap_back_threshold(v, 0.0, c) == Approx(1.0e3 - c.p_atm * (1.0 - 10.0 / 11.0)).epsilon(1e-9));
}

TEST_CASE("threshold falls with depth and with added sealed volume", "[pneumatics][valve]") {
    const PhysicalConstants c;
    ValveModel v = default_valve();
    double previous = INFINITY;
    for (double extra : {0.0, 10e-6, 50e-6, 100e-6, 150e-6, 1e-3}) {
        v.additional_sealed_volume = extra;
        const double t = snap_through_threshold(v, 2.0, c);
        CHECK(t <= previous);
        previous = t;
    }
    CHECK(snap_through_threshold(v, 1.0, c) == Approx(snap_through_threshold(v, 0.0, c) - 10.0e3));
}

TEST_CASE("fully swept sealed chamber is a singularity", "[pneumatics][valve]") {
    const PhysicalConstants c;
    const ValveModel v = bare_valve(2e-6, 2e-6, 0.0);
    CHECK_THROWS_AS(snap_through_threshold(v, 0.0, c), ModelSingularityError);
}

TEST_CASE("membrane swept volume of a spherical cap", "[pneumatics][valve]") {
    // hemisphere: opening angle 0 gives rim angle 90 deg, cap = 2/3 pi r^3
    const double r = 5e-3;
    CHECK(membrane_swept_volume(r, 0.0) == Approx(2.0 * 2.0 / 3.0 * M_PI * r * r * r));
    CHECK(membrane_swept_volume(r, 87.5) < membrane_swept_volume(r, 40.0));
}

TEST_CASE("empty valve band is rejected", "[pneumatics][valve]") {
    ValveModel v = default_valve();
    v.p_snap_back = v.p_snap_through;
    try {
        v.validate();
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key_path() == "valve.p_snap_through");
    }
}

TEST_CASE("ideal-gas cartridge fill", "[pneumatics][gas]") {
    const Cartridge cart = Cartridge::ideal_gas(1.0e6, 42.0e-6, 290.0, co2_16g_energy);
    CHECK(cart.gas_remaining == Approx(1.0e6 * 42.0e-6 / (8.314462618 * 290.0)));
    CHECK(cart.gas_remaining == Approx(0.0174).margin(5e-5));
    CHECK(cartridge_energy(cart) == Approx(3820.0));

    Cartridge half = cart;
    half.gas_remaining *= 0.5;
    CHECK(cartridge_energy(half) == Approx(1910.0));
    CHECK(cartridge_energy(Cartridge{}) == 0.0);
}

TEST_CASE("inflate needs a driving pressure", "[pneumatics][gas]") {
    const PhysicalConstants c;
    const Cartridge cart = Cartridge::ideal_gas(5.72e6, 21e-6, 293.15, co2_16g_energy);
    SwimBladder b;
    b.capacity = 300e-6;

    // 40 kPa regulator at 4 m with no wall pressure: balance, nothing moves
    auto held = inflate_step(b, Regulator{40e3}, cart, 4.0, 1.0, 1e-9, c);
    CHECK(held.bladder.fill_volume == 0.0);
    CHECK(held.cartridge.gas_remaining == cart.gas_remaining);

    auto none = inflate_step(b, Regulator{10e3}, cart, 2.0, 1.0, 1e-9, c);
    CHECK(none.moles_transferred == 0.0);

    auto flow = inflate_step(b, Regulator{40e3}, cart, 1.0, 1.0, 1e-9, c);
    CHECK(flow.bladder.fill_volume == Approx(1e-9 * 30e3));
    CHECK(flow.cartridge.gas_remaining + flow.bladder.gas_moles == Approx(cart.gas_remaining).epsilon(1e-15));

    CHECK_THROWS_AS(inflate_step(b, Regulator{40e3}, cart, 1.0, -1.0, 1e-9, c), DomainError);

    Cartridge empty = cart;
    empty.gas_remaining = 0.0;
    CHECK(inflate_step(b, Regulator{40e3}, empty, 1.0, 1.0, 1e-9, c).bladder.fill_volume == 0.0);
}

TEST_CASE("inflate clamps to capacity and to the gas left", "[pneumatics][gas]") {
    const PhysicalConstants c;
    SwimBladder b;
    b.capacity = 300e-6;
    const Cartridge big = Cartridge::ideal_gas(5.72e6, 21e-6, 293.15, co2_16g_energy);
    auto full = inflate_step(b, Regulator{40e3}, big, 0.0, 1e3, 1e-6, c);
    CHECK(full.bladder.fill_volume == 300e-6);

    Cartridge tiny = big;
    tiny.gas_remaining = 1e-4;
    auto drained = inflate_step(b, Regulator{40e3}, tiny, 0.0, 1e3, 1e-6, c);
    CHECK(drained.cartridge.gas_remaining == 0.0);
    CHECK(drained.bladder.gas_moles == 1e-4);
    CHECK(drained.bladder.fill_volume < 300e-6);
}

TEST_CASE("vent is a one-way diode", "[pneumatics][gas]") {
    const PhysicalConstants c;
    SwimBladder b;
    b.capacity = 300e-6;
    b.inflation_differential = 500.0;

    CHECK(vent_step(b, 1.0, 1.0, 1e-7, c).bladder.fill_volume == 0.0);

    b.fill_volume = 300e-6;
    b.gas_moles = 0.0138;
    auto all = vent_step(b, 1.0, 1e4, 1e-7, c);
    CHECK(all.bladder.fill_volume == 0.0);
    CHECK(all.vented_moles == b.gas_moles);

    double fill = b.fill_volume;
    SwimBladder cur = b;
    for (int i = 0; i < 5; ++i) {
        auto r = vent_step(cur, 2.0, 0.1, 1e-7, c);
        CHECK(r.bladder.fill_volume < fill);
        CHECK(r.bladder.gas_moles + r.vented_moles == Approx(cur.gas_moles).epsilon(1e-15));
        fill = r.bladder.fill_volume;
        cur = r.bladder;
    }

    SwimBladder slack = b;
    slack.inflation_differential = 0.0;
    CHECK(vent_step(slack, 1.0, 1.0, 1e-7, c).bladder.fill_volume == b.fill_volume);
    CHECK_THROWS_AS(vent_step(b, 1.0, -0.1, 1e-7, c), DomainError);
}

TEST_CASE("randomized inflate/vent sequences conserve moles", "[pneumatics][gas][property]") {
    const PhysicalConstants c;
    Catch::SimplePcg32 rng(1234);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        Cartridge cart = Cartridge::ideal_gas(5.72e6, 30e-6 * (0.1 + u(rng)), 293.15, co2_16g_energy);
        SwimBladder b;
        b.capacity = 300e-6;
        b.inflation_differential = 1000.0 * u(rng);
        double vented = 0.0;
        const double total = cart.gas_remaining;
        for (int k = 0; k < 50; ++k) {
            const double depth = 5.0 * u(rng);
            const double dt = 2.0 * u(rng);
            if (u(rng) < 0.6) {
                auto r = inflate_step(b, Regulator{40e3 + 10e3 * u(rng)}, cart, depth, dt, 2e-9, c,
                                      u(rng) < 0.5 ? GasConvention::Absolute : GasConvention::Gauge);
                CHECK(r.bladder.fill_volume >= b.fill_volume);
                b = r.bladder;
                cart = r.cartridge;
            } else {
                auto r = vent_step(b, depth, dt, 1e-7, c);
                CHECK(r.bladder.fill_volume <= b.fill_volume);
                b = r.bladder;
                vented += r.vented_moles;
            }
            REQUIRE(std::fabs(cart.gas_remaining + b.gas_moles + vented - total) <= 1e-12 * total);
        }
    }
}
