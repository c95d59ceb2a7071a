#include "glidesim/geometry.hpp"

#include "glidesim/errors.hpp"
#include "glidesim/units.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <ostream>
#include <vector>

namespace glidesim {

namespace {

double lerp(double a, double b, double f) { return a + (b - a) * f; }

// Composite Simpson over [a, b] with n (even) intervals.
template <typename F>
double simpson(F&& f, double a, double b, int n) {
    if (b <= a) return 0.0;
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return sum * h / 3.0;
}

// Arc length of upper plus lower surface for unit chord, ξ = s^2 removes the
// leading-edge square-root singularity.
double unit_section_perimeter(double t, SectionShape shape) {
    if (shape == SectionShape::Rectangle) return 2.0 * (1.0 + t);
    constexpr int n = 2000;
    double length = 0.0;
    double px = 0.0, py = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double s = static_cast<double>(i) / n;
        const double x = s * s;
        const double y = naca_half_thickness(x, t);
        length += std::hypot(x - px, y - py);
        px = x;
        py = y;
    }
    return 2.0 * length;
}

double section_area(const WingParams& p, double y) {
    const double c = p.chord_at(y);
    return unit_section_area(p.thickness_at(y), p.section) * c * c;
}

template <typename F>
double integrate_span(const WingParams& p, F&& f, int n) {
    if (n < 2 || n % 2) throw DomainError("span integration needs an even interval count >= 2");
    const double y1 = p.l1, y2 = p.l1 + p.l2, y3 = p.half_span();
    return simpson(f, 0.0, y1, n) + simpson(f, y1, y2, n) + simpson(f, y2, y3, n);
}

struct Vec3 {
    double x, y, z;
};

void put_f32(std::ostream& out, float v) {
    static_assert(std::endian::native == std::endian::little, "STL writer assumes little-endian");
    char bytes[4];
    std::memcpy(bytes, &v, 4);
    out.write(bytes, 4);
}

void put_triangle(std::ostream& out, const Vec3& a, const Vec3& b, const Vec3& c) {
    const Vec3 u{b.x - a.x, b.y - a.y, b.z - a.z};
    const Vec3 v{c.x - a.x, c.y - a.y, c.z - a.z};
    Vec3 n{u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
    const double len = std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z);
    if (len > 0) n = {n.x / len, n.y / len, n.z / len};
    for (const Vec3& p : {n, a, b, c}) {
        put_f32(out, static_cast<float>(p.x));
        put_f32(out, static_cast<float>(p.y));
        put_f32(out, static_cast<float>(p.z));
    }
    const char attr[2] = {0, 0};
    out.write(attr, 2);
}

}  // namespace

double WingParams::chord_at(double y) const {
    const double a = std::fabs(y);
    if (a <= l1) return chord_root;
    if (a <= l1 + l2) return lerp(chord_root, chord_tip, (a - l1) / l2);
    return chord_tip;
}

double WingParams::thickness_at(double y) const {
    const double a = std::fabs(y);
    if (a <= l1) return body_thickness_ratio;
    if (a <= l1 + l2) return lerp(body_thickness_ratio, thickness_ratio, (a - l1) / l2);
    return thickness_ratio;
}

double WingParams::leading_edge_at(double y) const {
    return std::tan(alpha * units::deg) * std::max(0.0, std::fabs(y) - l1);
}

void WingParams::validate() const {
    if (!(alpha > 0.0 && alpha < 90.0)) throw ConfigError("geometry.alpha", "must lie in (0, 90)");
    if (!(l1 > 0.0)) throw ConfigError("geometry.l1", "must be > 0");
    if (!(l2 > 0.0)) throw ConfigError("geometry.l2", "must be > 0");
    if (!(lb > 0.0)) throw ConfigError("geometry.lb", "must be > 0");
    if (!(chord_root > 0.0)) throw ConfigError("geometry.chord_root", "must be > 0");
    if (!(chord_tip > 0.0 && chord_tip <= chord_root)) {
        throw ConfigError("geometry.chord_tip", "must lie in (0, chord_root]");
    }
    if (!(thickness_ratio > 0.0)) throw ConfigError("geometry.thickness_ratio", "must be > 0");
    if (!(body_thickness_ratio > 0.0)) {
        throw ConfigError("geometry.body_thickness_ratio", "must be > 0");
    }
    if (!(wingtip_height >= 0.0)) throw ConfigError("geometry.wingtip_height", "must be >= 0");
}

double naca_half_thickness(double x_over_c, double t) {
    if (!(x_over_c >= 0.0 && x_over_c <= 1.0)) {
        throw DomainError("naca_half_thickness: x/c must lie in [0, 1]");
    }
    const double x = x_over_c;
    // the closed-trailing-edge coefficients sum to zero only in exact arithmetic
    if (x == 1.0) return 0.0;
    const double poly = 0.2969 * std::sqrt(x) + x * (-0.1260 + x * (-0.3516 + x * (0.2843 + x * -0.1036)));
    return 5.0 * t * poly;
}

double unit_section_area(double t, SectionShape shape) {
    if (shape == SectionShape::Rectangle) return t;
    // 2 * ∫ y_t dξ, integrated term by term
    const double integral = 0.2969 * 2.0 / 3.0 - 0.1260 / 2.0 - 0.3516 / 3.0 + 0.2843 / 4.0 -
                            0.1036 / 5.0;
    return 2.0 * 5.0 * t * integral;
}

double displaced_volume(const WingParams& params, int intervals_per_segment) {
    params.validate();
    auto area = [&](double y) { return section_area(params, y); };
    return 2.0 * integrate_span(params, area, intervals_per_segment);
}

double wetted_area(const WingParams& params, int intervals_per_segment) {
    params.validate();
    auto perimeter = [&](double y) {
        return params.chord_at(y) * unit_section_perimeter(params.thickness_at(y), params.section);
    };
    const double skin = 2.0 * integrate_span(params, perimeter, intervals_per_segment);
    const double caps = 2.0 * section_area(params, params.half_span());
    const double winglets = 2.0 * 2.0 * params.chord_tip * params.wingtip_height;
    return skin + caps + winglets;
}

std::size_t write_stl(const WingParams& params, std::ostream& out, int span_stations,
                      int chord_points) {
    params.validate();
    if (span_stations < 2 || chord_points < 3) throw DomainError("write_stl: mesh too coarse");

    const double half = params.half_span();
    // cosine spacing clusters points at the leading and trailing edges
    std::vector<double> xi(chord_points);
    for (int j = 0; j < chord_points; ++j) {
        xi[j] = 0.5 * (1.0 - std::cos(std::numbers::pi * j / (chord_points - 1)));
    }
    auto point = [&](double y, double s, bool upper) {
        const double c = params.chord_at(y);
        const double z = c * naca_half_thickness(s, params.thickness_at(y));
        const double t_rect = params.thickness_at(y) * c * 0.5;
        const double h = params.section == SectionShape::Rectangle ? t_rect : z;
        return Vec3{(params.leading_edge_at(y) + s * c) / units::mm, y / units::mm,
                    (upper ? h : -h) / units::mm};
    };

    std::vector<double> ys(span_stations);
    for (int i = 0; i < span_stations; ++i) ys[i] = -half + 2.0 * half * i / (span_stations - 1);

    std::vector<std::array<Vec3, 3>> tris;
    for (int i = 0; i + 1 < span_stations; ++i) {
        for (int j = 0; j + 1 < chord_points; ++j) {
            for (bool upper : {true, false}) {
                const Vec3 a = point(ys[i], xi[j], upper), b = point(ys[i], xi[j + 1], upper);
                const Vec3 c = point(ys[i + 1], xi[j], upper), d = point(ys[i + 1], xi[j + 1], upper);
                if (upper) {
                    tris.push_back({a, c, b});
                    tris.push_back({b, c, d});
                } else {
                    tris.push_back({a, b, c});
                    tris.push_back({b, d, c});
                }
            }
        }
    }
    for (double y : {-half, half}) {  // tip caps
        for (int j = 0; j + 1 < chord_points; ++j) {
            const Vec3 a = point(y, xi[j], true), b = point(y, xi[j + 1], true);
            const Vec3 c = point(y, xi[j], false), d = point(y, xi[j + 1], false);
            if (y > 0) {
                tris.push_back({a, b, c});
                tris.push_back({b, d, c});
            } else {
                tris.push_back({a, c, b});
                tris.push_back({b, c, d});
            }
        }
    }

    char header[80] = {};
    std::strncpy(header, "glidesim blended-wing glider, units mm", sizeof(header) - 1);
    out.write(header, 80);
    const auto count = static_cast<std::uint32_t>(tris.size());
    char count_bytes[4];
    std::memcpy(count_bytes, &count, 4);
    out.write(count_bytes, 4);
    for (const auto& t : tris) put_triangle(out, t[0], t[1], t[2]);
    return tris.size();
}

WingParams reference_wing() { return WingParams{}; }

}  // namespace glidesim
