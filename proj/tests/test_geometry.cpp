#include "catch_amalgamated.hpp"

#include "glidesim/errors.hpp"
#include "glidesim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <random>
#include <sstream>

using namespace glidesim;
using Catch::Approx;

TEST_CASE("NACA half thickness", "[geometry]") {
    CHECK(naca_half_thickness(0.0, 0.10) == 0.0);
    CHECK(naca_half_thickness(1.0, 0.10) == 0.0);
    CHECK(naca_half_thickness(0.1, 0.10) == Approx(0.03902298186519959).epsilon(1e-12));
    CHECK(naca_half_thickness(0.3, 0.10) == Approx(0.0500058836616419).epsilon(1e-12));
    CHECK(naca_half_thickness(0.9, 0.10) == Approx(0.011375405595598742).epsilon(1e-12));
    CHECK(naca_half_thickness(0.3, 0.12) == Approx(0.06000706039397028).epsilon(1e-12));
    CHECK_THROWS_AS(naca_half_thickness(-0.01, 0.1), DomainError);
    CHECK_THROWS_AS(naca_half_thickness(1.01, 0.1), DomainError);
}

TEST_CASE("rectangular prism volume", "[geometry]") {
    WingParams p;
    p.section = SectionShape::Rectangle;
    p.chord_root = p.chord_tip = 0.2;
    p.thickness_ratio = p.body_thickness_ratio = 0.1;
    // 2 * half span * chord * (t * chord)
    CHECK(displaced_volume(p) == Approx(2.0 * p.half_span() * 0.2 * 0.02).epsilon(1e-12));
}

TEST_CASE("volume scales with the cube of length", "[geometry]") {
    const WingParams p = reference_wing();
    WingParams q = p;
    const double k = 1.7;
    q.l1 *= k;
    q.l2 *= k;
    q.lb *= k;
    q.chord_root *= k;
    q.chord_tip *= k;
    q.wingtip_height *= k;
    CHECK(displaced_volume(q) == Approx(k * k * k * displaced_volume(p)).epsilon(1e-10));
    CHECK(wetted_area(q) == Approx(k * k * wetted_area(p)).epsilon(1e-10));
}

TEST_CASE("volume increases with thickness ratio", "[geometry]") {
    WingParams p = reference_wing();
    double last = 0.0;
    for (double t : {0.06, 0.08, 0.10, 0.12, 0.15}) {
        p.thickness_ratio = t;
        const double v = displaced_volume(p);
        CHECK(v > last);
        last = v;
    }
}

TEST_CASE("reference wing matches the hull volume", "[geometry]") {
    CHECK(displaced_volume(reference_wing()) == Approx(3861e-6).epsilon(0.01));
    CHECK(unit_section_area(0.10, SectionShape::Naca) == Approx(0.068088).epsilon(1e-4));
}

TEST_CASE("Monte Carlo volume agrees with quadrature", "[geometry][property]") {
    const WingParams p = reference_wing();
    const double half = p.half_span();
    const double x_max = p.leading_edge_at(half) + p.chord_tip;
    double z_max = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double y = half * i / 200.0;
        z_max = std::max(z_max, p.chord_at(y) * naca_half_thickness(0.3, p.thickness_at(y)) * 1.01);
    }
    std::mt19937_64 rng(20261019);
    std::uniform_real_distribution<double> ux(0.0, x_max), uy(-half, half), uz(-z_max, z_max);
    constexpr int n = 1000000;
    int inside = 0;
    for (int i = 0; i < n; ++i) {
        const double x = ux(rng), y = uy(rng), z = uz(rng);
        const double c = p.chord_at(y);
        const double s = (x - p.leading_edge_at(y)) / c;
        if (s < 0.0 || s > 1.0) continue;
        if (std::fabs(z) <= c * naca_half_thickness(s, p.thickness_at(y))) ++inside;
    }
    const double box = x_max * 2.0 * half * 2.0 * z_max;
    CHECK(box * inside / n == Approx(displaced_volume(p)).epsilon(0.01));
}

TEST_CASE("Simpson refinement converges", "[geometry]") {
    const WingParams p = reference_wing();
    CHECK(displaced_volume(p, 400) == Approx(displaced_volume(p, 100)).epsilon(1e-6));
    CHECK_THROWS_AS(displaced_volume(p, 3), DomainError);
}

TEST_CASE("STL layout", "[geometry]") {
    std::ostringstream out;
    const std::size_t n = write_stl(reference_wing(), out, 11, 9);
    CHECK(n == 2 * 10 * 8 * 2 + 2 * 8 * 2);
    const std::string bytes = out.str();
    CHECK(bytes.size() == 84 + 50 * n);
    std::uint32_t count = 0;
    std::memcpy(&count, bytes.data() + 80, 4);
    CHECK(count == n);
}

TEST_CASE("invalid geometry names the field", "[geometry]") {
    WingParams p;
    p.chord_tip = 0.5;
    try {
        p.validate();
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.key_path() == "geometry.chord_tip");
    }
}
