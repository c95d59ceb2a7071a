#include "glidesim/mission.hpp"

#include "glidesim/units.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace glidesim {

namespace {

constexpr double kEventTolerance = 1.0e-3;  // s
constexpr double kTimeEpsilon = 1.0e-9;     // s

std::string fmt(double value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

struct SimState {
    double t = 0;
    KinematicState kinematics;
    ControllerState controller;
    SwimBladder bladder;
    Cartridge cartridge;
    double vented_moles = 0;
};

class MissionRunner {
public:
    MissionRunner(const GliderDesign& design, const ScenarioConfig& scenario)
        : design_(design), sc_(scenario) {}

    MissionResult run();

private:
    double pressure_at(const SimState& s) const {
        return hydrostatic_pressure(s.kinematics.depth, sc_.constants);
    }

    SimState advance(const SimState& s, double h) const;
    void preflight(const Thresholds& th) const;
    void log_row(const SimState& s, std::optional<EventType> event);
    // returns true when the mission should stop
    bool on_transition(SimState& s, EventType type);
    // returns true when the mission should stop
    bool check_sinking(const SimState& s);

    const GliderDesign& design_;
    const ScenarioConfig& sc_;
    TrajectoryLog log_;
    std::string termination_ = "time limit reached";
};

void MissionRunner::preflight(const Thresholds& th) const {
    const double trim = trim_force(design_, sc_.constants);
    if (!(trim < 0.0)) {
        throw ScenarioError("never dives", "deflated net force " + fmt(trim) + " N is not negative");
    }
    const double lift = trim + bladder_buoyancy_force(design_.bladder_capacity, sc_.constants);
    if (!(lift > 0.0)) {
        throw ScenarioError("never surfaces",
                            "full bladder net force " + fmt(lift) + " N is not positive");
    }
    if (th.p_low < 0.0) {
        throw ScenarioError("never surfaces",
                            "snap-back pressure " + fmt(th.p_low) + " Pa is below surface pressure");
    }
    if (depth_for_pressure(th.p_high, sc_.constants) > sc_.depth_limit) {
        throw ScenarioError("never inflates", "snap-through depth lies below the depth limit");
    }
    if (!sc_.instantaneous_pneumatics) {
        if (!(sc_.regulator.setpoint > th.p_high + sc_.inflation_differential)) {
            throw ScenarioError("never inflates",
                                "regulator setpoint cannot drive flow at the snap-through depth");
        }
        if (!(sc_.inflation_differential > 0.0) || !(sc_.vent_flow_coefficient > 0.0)) {
            throw ScenarioError("never vents", "bladder wall pressure and vent flow must be positive");
        }
    }
}

SimState MissionRunner::advance(const SimState& s, double h) const {
    SimState next = s;
    next.t = s.t + h;
    const double mass = design_.effective_mass();
    if (sc_.instantaneous_pneumatics) {
        const double f_net = net_force(design_, s.bladder.fill_volume, sc_.constants).f_net();
        next.kinematics = step_kinematics(s.kinematics, f_net, sc_.glide, sc_.drag, mass, h);
        return next;
    }

    // Bladder volume and inflow moles ride along in the glide RK4 so the
    // fill tracks depth within the step.
    const bool inflating = s.controller.mode == ControllerMode::Inflating;
    const double capacity = s.bladder.capacity;
    const double rt = units::gas_constant * s.cartridge.temperature;
    const bool can_flow = inflating ? (s.cartridge.gas_remaining > 0.0 && s.bladder.fill_volume < capacity)
                                    : s.bladder.fill_volume > 0.0;
    const double vent_rate = sc_.vent_flow_coefficient * sc_.inflation_differential;

    struct Y {
        double v, depth, x, fill, moles;
    };
    auto rates = [&](const Y& y) {
        const double depth = std::max(0.0, y.depth);
        const double fill = std::clamp(y.fill, 0.0, capacity);
        const double f_net = net_force(design_, fill, sc_.constants).f_net();
        const GlideRates g = glide_rates(y.v, y.depth, f_net, sc_.glide, sc_.drag, mass);
        double q = 0.0, dn = 0.0;
        if (can_flow && inflating) {
            const double drive = sc_.regulator.setpoint - hydrostatic_pressure(depth, sc_.constants) -
                                 sc_.inflation_differential;
            q = sc_.inflate_flow_coefficient * std::max(0.0, drive);
            dn = bladder_gas_pressure(s.bladder, depth, sc_.constants, sc_.gas_convention) * q / rt;
        } else if (can_flow) {
            q = -vent_rate;
        }
        return Y{g.dv, g.ddepth, g.dx, q, dn};
    };
    auto shift = [](const Y& y, double a, const Y& k) {
        return Y{y.v + a * k.v, y.depth + a * k.depth, y.x + a * k.x, y.fill + a * k.fill,
                 y.moles + a * k.moles};
    };
    const Y y0{s.kinematics.v_along_path, s.kinematics.depth, s.kinematics.x, s.bladder.fill_volume, 0.0};
    const Y k1 = rates(y0);
    const Y k2 = rates(shift(y0, 0.5 * h, k1));
    const Y k3 = rates(shift(y0, 0.5 * h, k2));
    const Y k4 = rates(shift(y0, h, k3));
    auto combine = [&](double Y::*f) {
        return y0.*f + h / 6.0 * (k1.*f + 2.0 * k2.*f + 2.0 * k3.*f + k4.*f);
    };

    next.kinematics = clamp_to_surface(
        KinematicState{combine(&Y::depth), combine(&Y::x), combine(&Y::v)}, s.kinematics.x);

    double fill = combine(&Y::fill);
    if (inflating) {
        double moles = std::max(0.0, combine(&Y::moles));
        double added = std::max(0.0, fill - s.bladder.fill_volume);
        // clamps act within the step: keep moles proportional to the volume actually admitted
        if (s.bladder.fill_volume + added > capacity && added > 0.0) {
            moles *= (capacity - s.bladder.fill_volume) / added;
            added = capacity - s.bladder.fill_volume;
        }
        if (moles > s.cartridge.gas_remaining && moles > 0.0) {
            added *= s.cartridge.gas_remaining / moles;
            moles = s.cartridge.gas_remaining;
        }
        next.cartridge.gas_remaining = s.cartridge.gas_remaining - moles;
        moles = s.cartridge.gas_remaining - next.cartridge.gas_remaining;
        next.bladder.gas_moles = s.bladder.gas_moles + moles;
        next.bladder.fill_volume = std::min(capacity, s.bladder.fill_volume + added);
    } else if (can_flow) {
        if (fill <= 0.0) {
            next.vented_moles = s.vented_moles + s.bladder.gas_moles;
            next.bladder.fill_volume = 0.0;
            next.bladder.gas_moles = 0.0;
        } else {
            const double released = s.bladder.gas_moles * (1.0 - fill / s.bladder.fill_volume);
            next.bladder.fill_volume = fill;
            next.bladder.gas_moles = s.bladder.gas_moles - released;
            next.vented_moles = s.vented_moles + (s.bladder.gas_moles - next.bladder.gas_moles);
        }
    }
    return next;
}

void MissionRunner::log_row(const SimState& s, std::optional<EventType> event) {
    TrajectoryRow row;
    row.t = s.t;
    row.depth = s.kinematics.depth;
    row.x = s.kinematics.x;
    row.v_along_path = s.kinematics.v_along_path;
    row.mode = s.controller.mode;
    row.bladder_fill = s.bladder.fill_volume;
    row.cartridge_mol = s.cartridge.gas_remaining;
    row.bladder_mol = s.bladder.gas_moles;
    row.vented_mol = s.vented_moles;
    row.p_hydro = pressure_at(s);
    row.event = event;
    log_.push_back(row);
}

bool MissionRunner::on_transition(SimState& s, EventType type) {
    const double depth = s.kinematics.depth;
    if (type == EventType::SnapThrough) {
        const double needed = moles_for_volume(s.bladder, s.bladder.capacity, depth,
                                               s.cartridge.temperature, sc_.constants,
                                               sc_.gas_convention);
        if (s.cartridge.gas_remaining < needed) {
            termination_ = "cartridge cannot complete an inflation";
            return true;
        }
        if (sc_.instantaneous_pneumatics) {
            const InflateResult r = inflate_step(
                s.bladder, Regulator{1.0e12}, s.cartridge, depth, 1.0,
                std::numeric_limits<double>::infinity(), sc_.constants, sc_.gas_convention);
            s.bladder = r.bladder;
            s.cartridge = r.cartridge;
        }
    } else if (sc_.instantaneous_pneumatics) {
        s.vented_moles += s.bladder.gas_moles;
        s.bladder.fill_volume = 0.0;
        s.bladder.gas_moles = 0.0;
    }
    return false;
}

bool MissionRunner::check_sinking(const SimState& s) {
    if (s.kinematics.depth > sc_.depth_limit) {
        if (s.cartridge.gas_remaining <= 0.0) {
            termination_ = "cartridge exhausted";
            return true;
        }
        throw ScenarioError("never surfaces", "glider sank past the depth limit of " +
                                                  fmt(sc_.depth_limit) + " m");
    }
    if (sc_.instantaneous_pneumatics || s.controller.mode != ControllerMode::Inflating) return false;

    const double f_net = net_force(design_, s.bladder.fill_volume, sc_.constants).f_net();
    const double back = pressure_at(s) + s.bladder.inflation_differential;
    const bool stalled = sc_.regulator.setpoint <= back || s.cartridge.gas_remaining <= 0.0 ||
                         s.bladder.fill_volume >= s.bladder.capacity;
    if (stalled && f_net < 0.0 && s.kinematics.v_along_path >= 0.0) {
        if (s.cartridge.gas_remaining <= 0.0) {
            termination_ = "cartridge exhausted";
            return true;
        }
        throw ScenarioError("never surfaces", "sank below regulator reach at depth " +
                                                  fmt(s.kinematics.depth) + " m");
    }
    return false;
}

MissionResult MissionRunner::run() {
    design_.validate();
    sc_.validate();
    const Thresholds th = sc_.thresholds();
    preflight(th);

    SimState s;
    s.controller = ControllerState::with_thresholds(th.p_high, th.p_low);
    s.bladder.capacity = design_.bladder_capacity;
    s.bladder.inflation_differential = sc_.inflation_differential;
    s.cartridge = sc_.cartridge;
    s.controller = step(s.controller, pressure_at(s));
    log_row(s, std::nullopt);

    const double dt = sc_.dt;
    bool done = false;
    for (long k = 0; !done && s.t < sc_.max_time - kTimeEpsilon; ++k) {
        const double t_grid = static_cast<double>(k + 1) * dt;
        bool grid_logged = false;
        while (true) {
            const double h = t_grid - s.t;
            if (h <= kTimeEpsilon) break;
            SimState trial = advance(s, h);
            if (!s.controller.would_transition(pressure_at(trial))) {
                s = trial;
                break;
            }
            double lo = 0.0;
            double hi = h;
            while (hi - lo > kEventTolerance) {
                const double mid = 0.5 * (lo + hi);
                if (s.controller.would_transition(pressure_at(advance(s, mid)))) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            SimState ev = advance(s, hi);
            if (hi >= h - kTimeEpsilon) {
                ev.t = t_grid;
                grid_logged = true;
            }
            const ControllerState before = ev.controller;
            ev.controller = step(ev.controller, pressure_at(ev));
            const EventType type = ev.controller.mode == ControllerMode::Inflating
                                       ? EventType::SnapThrough
                                       : EventType::SnapBack;
            done = on_transition(ev, type);
            if (done) {
                // the inflation never happens, so the valve is logged unswitched
                ev.controller = before;
                s = ev;
                log_row(s, std::nullopt);
                break;
            }
            s = ev;
            log_row(s, type);
            if (done || grid_logged) break;
        }
        if (done) break;
        if (!grid_logged) {
            s.t = t_grid;
            log_row(s, std::nullopt);
        }
        done = check_sinking(s);
    }
    MissionSummary summary = summarize(log_, sc_.cartridge, termination_);
    return {std::move(log_), std::move(summary)};
}

}  // namespace

void ScenarioConfig::validate() const {
    constants.validate();
    design.validate();
    valve.validate();
    cartridge.validate();
    regulator.validate();
    glide.validate();
    drag.validate();
    if (!(inflation_differential >= 0.0)) {
        throw ConfigError("bladder.inflation_differential", "must be >= 0");
    }
    if (!(inflate_flow_coefficient > 0.0)) {
        throw ConfigError("pneumatics.inflate_flow_coefficient", "must be > 0");
    }
    if (!(vent_flow_coefficient >= 0.0)) {
        throw ConfigError("pneumatics.vent_flow_coefficient", "must be >= 0");
    }
    if (!(dt > 0.0)) throw ConfigError("simulation.dt", "must be > 0");
    if (!(max_time > 0.0)) throw ConfigError("simulation.max_time", "must be > 0");
    if (!(depth_limit > 0.0)) throw ConfigError("simulation.depth_limit", "must be > 0");
    if (threshold_override && !(threshold_override->p_high > threshold_override->p_low)) {
        throw ConfigError("controller.p_high", "must exceed controller.p_low");
    }
}

Thresholds ScenarioConfig::thresholds() const {
    if (threshold_override) return *threshold_override;
    return thresholds_from_valve(valve, constants);
}

std::string_view to_string(EventType type) {
    switch (type) {
        case EventType::SnapThrough: return "SNAP_THROUGH";
        case EventType::SnapBack: return "SNAP_BACK";
        case EventType::Apex: return "APEX";
        case EventType::Nadir: return "NADIR";
    }
    return "";
}

MissionResult run_mission(const GliderDesign& design, const ScenarioConfig& scenario) {
    return MissionRunner(design, scenario).run();
}

MissionResult run_mission(const ScenarioConfig& scenario) {
    return run_mission(scenario.design, scenario);
}

MissionSummary summarize(const TrajectoryLog& log, const Cartridge& initial_cartridge,
                         const std::string& termination) {
    MissionSummary summary;
    summary.termination = termination;
    if (log.empty()) return summary;
    for (std::size_t i = 1; i < log.size(); ++i) {
        if (log[i].mode != log[i - 1].mode) ++summary.transitions;
    }
    summary.cycles_completed = summary.transitions / 2;
    summary.total_range = log.back().x;
    summary.total_time = log.back().t;
    for (const auto& row : log) summary.max_depth = std::max(summary.max_depth, row.depth);
    summary.gas_used = initial_cartridge.gas_remaining - log.back().cartridge_mol;
    if (initial_cartridge.initial_gas > 0.0) {
        summary.energy_used =
            initial_cartridge.rated_energy * (summary.gas_used / initial_cartridge.initial_gas);
    }
    return summary;
}

std::vector<CycleEvent> detect_cycle_events(const TrajectoryLog& log) {
    std::vector<CycleEvent> events;
    if (log.empty()) return events;

    int direction = 0;
    std::size_t extreme = 0;
    for (std::size_t i = 1; i < log.size(); ++i) {
        if (log[i].mode != log[i - 1].mode) {
            events.push_back({log[i].mode == ControllerMode::Inflating ? EventType::SnapThrough
                                                                       : EventType::SnapBack,
                              log[i].t, log[i].depth});
        }
        const double change = log[i].depth - log[i - 1].depth;
        if (change > 0.0) {
            if (direction < 0) {
                events.push_back({EventType::Apex, log[extreme].t, log[extreme].depth});
            }
            if (direction <= 0 || log[i].depth > log[extreme].depth) extreme = i;
            direction = 1;
        } else if (change < 0.0) {
            if (direction > 0) {
                events.push_back({EventType::Nadir, log[extreme].t, log[extreme].depth});
            }
            if (direction >= 0 || log[i].depth < log[extreme].depth) extreme = i;
            direction = -1;
            if (log[i].depth <= 0.0) {
                events.push_back({EventType::Apex, log[i].t, log[i].depth});
                direction = 0;
            }
        }
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const CycleEvent& a, const CycleEvent& b) { return a.t < b.t; });
    return events;
}

double mean_cycle_period(const TrajectoryLog& log) {
    std::vector<double> times;
    for (const auto& e : detect_cycle_events(log)) {
        if (e.type == EventType::SnapThrough) times.push_back(e.t);
    }
    if (times.size() < 2) return 0.0;
    return (times.back() - times.front()) / static_cast<double>(times.size() - 1);
}

double calibrate_drag_area(const ScenarioConfig& scenario, double target_period, double lo,
                           double hi) {
    if (!(lo > 0.0 && hi > lo)) throw DomainError("calibrate_drag_area: need 0 < lo < hi");
    auto period_error = [&](double log_cda) {
        ScenarioConfig trial = scenario;
        trial.drag.c_d_a = std::exp(log_cda);
        return mean_cycle_period(run_mission(trial).log) - target_period;
    };
    double a = std::log(lo);
    double b = std::log(hi);
    double fa = period_error(a);
    if ((fa < 0.0) == (period_error(b) < 0.0)) {
        throw DomainError("calibrate_drag_area: target period not bracketed");
    }
    for (int i = 0; i < 60 && b - a > 1e-10; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = period_error(m);
        if ((fm < 0.0) == (fa < 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return std::exp(0.5 * (a + b));
}

}  // namespace glidesim
