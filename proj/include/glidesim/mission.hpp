#pragma once

#include "glidesim/controller.hpp"
#include "glidesim/core_model.hpp"
#include "glidesim/dynamics.hpp"
#include "glidesim/pneumatics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace glidesim {

enum class Objective { Range, Efficiency };

/// Everything a mission run needs. Loaded from JSON by `load_scenario`.
struct ScenarioConfig {
    PhysicalConstants constants;
    GliderDesign design;
    ValveModel valve = default_valve();
    std::optional<Thresholds> threshold_override;  // replaces the valve-derived band
    double inflation_differential = 200.0;         // Pa, bladder wall pressure
    Cartridge cartridge;
    Regulator regulator;
    double inflate_flow_coefficient = 7.061e-10;  // m^3/(s Pa)
    double vent_flow_coefficient = 1.25e-7;       // m^3/(s Pa)
    GlideGeometry glide;
    DragModel drag;
    double dt = 0.05;             // s
    double max_time = 3600.0;     // s
    double depth_limit = 100.0;   // m, sinking past this is a failed mission
    bool instantaneous_pneumatics = false;
    GasConvention gas_convention = GasConvention::Absolute;
    Objective objective = Objective::Range;

    void validate() const;
    Thresholds thresholds() const;
};

enum class EventType { SnapThrough, SnapBack, Apex, Nadir };

std::string_view to_string(EventType type);

struct TrajectoryRow {
    double t = 0;              // s
    double depth = 0;          // m
    double x = 0;              // m
    double v_along_path = 0;   // m/s
    ControllerMode mode = ControllerMode::Deflating;
    double bladder_fill = 0;   // m^3
    double cartridge_mol = 0;
    double bladder_mol = 0;
    double vented_mol = 0;
    double p_hydro = 0;        // Pa
    std::optional<EventType> event;
};

using TrajectoryLog = std::vector<TrajectoryRow>;

struct MissionSummary {
    long cycles_completed = 0;
    long transitions = 0;
    double total_range = 0;  // m
    double total_time = 0;   // s
    double max_depth = 0;    // m
    double gas_used = 0;     // mol
    double energy_used = 0;  // J
    std::string termination;
};

struct MissionResult {
    TrajectoryLog log;
    MissionSummary summary;
};

/// Closed-loop run: each step reads the hydrostatic pressure, steps the
/// valve controller, inflates or vents, recomputes the force balance and
/// advances the glide state. Controller switches are located inside the
/// step by bisection to 1 ms and logged as extra rows.
///
/// Ends when the cartridge cannot complete an inflation at snap-through
/// or when `max_time` is reached. Throws ScenarioError when the
/// configuration cannot fly a cycle (never dives, never inflates, never
/// surfaces).
MissionResult run_mission(const GliderDesign& design, const ScenarioConfig& scenario);
MissionResult run_mission(const ScenarioConfig& scenario);

MissionSummary summarize(const TrajectoryLog& log, const Cartridge& initial_cartridge,
                         const std::string& termination);

struct CycleEvent {
    EventType type;
    double t;
    double depth;
};

/// Snap events from mode changes, nadir/apex from depth extrema (surface
/// arrival counts as an apex). Returned in time order.
std::vector<CycleEvent> detect_cycle_events(const TrajectoryLog& log);

/// Mean interval between consecutive snap-through events, 0 if fewer than two.
double mean_cycle_period(const TrajectoryLog& log);

/// Drag area for which the mean cycle period matches `target_period`,
/// found by bisection in log space over [lo, hi].
double calibrate_drag_area(const ScenarioConfig& scenario, double target_period, double lo,
                           double hi);

}  // namespace glidesim
