#pragma once

#include <iosfwd>

namespace glidesim {

enum class SectionShape { Naca, Rectangle };

/// Blended-wing-body planform. Spanwise stations from the midplane:
///   t1 at y = 0, t2 at y = l1, t3 at y = l1 + l2, tip at y = l1 + l2 + lb.
/// The chord is chord_root over the body (t1..t2), tapers linearly to
/// chord_tip at t3 and stays constant to the tip. The thickness ratio goes
/// from body_thickness_ratio to thickness_ratio over the same transition.
/// The leading edge sweeps back by alpha outboard of t2.
struct WingParams {
    double alpha = 40.0;                // deg
    double l1 = 0.10;                   // m
    double l2 = 0.12;                   // m
    double lb = 0.25;                   // m
    double chord_root = 0.26;           // m
    double chord_tip = 0.14;            // m
    double thickness_ratio = 0.10;      // NACA 0010
    double body_thickness_ratio = 0.221;
    double wingtip_height = 0.06;       // m, flat winglet plates
    SectionShape section = SectionShape::Naca;

    double half_span() const { return l1 + l2 + lb; }
    double chord_at(double y) const;
    double thickness_at(double y) const;
    double leading_edge_at(double y) const;

    void validate() const;
};

/// Closed-trailing-edge NACA 4-digit symmetric half thickness y_t / c
/// (last coefficient -0.1036, so the value at x/c = 1 is zero).
double naca_half_thickness(double x_over_c, double thickness_ratio);

/// Cross-section area of a unit-chord section with thickness ratio t.
double unit_section_area(double thickness_ratio, SectionShape shape);

/// Displaced volume of the full glider (both half-wings), by composite
/// Simpson over each spanwise segment with `intervals_per_segment` (even)
/// intervals.
double displaced_volume(const WingParams& params, int intervals_per_segment = 100);

/// Wetted area: section perimeters integrated along the span, both tip caps
/// and both sides of each winglet plate.
double wetted_area(const WingParams& params, int intervals_per_segment = 100);

/// Binary little-endian STL of the parametric surface, in millimetres.
/// Returns the triangle count.
std::size_t write_stl(const WingParams& params, std::ostream& out, int span_stations = 41,
                      int chord_points = 41);

/// Reconstructed parameter set sized to the 3861 cm^3 hull of the tested glider.
WingParams reference_wing();

}  // namespace glidesim
