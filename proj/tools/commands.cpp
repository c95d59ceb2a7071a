#include "commands.hpp"

#include "glidesim/analysis.hpp"
#include "glidesim/claims.hpp"
#include "glidesim/config.hpp"
#include "glidesim/controller.hpp"
#include "glidesim/geometry.hpp"
#include "glidesim/optimizer.hpp"
#include "glidesim/report.hpp"
#include "glidesim/units.hpp"

#include <fstream>
#include <ostream>

#ifndef GLIDESIM_DATA_DIR
#define GLIDESIM_DATA_DIR "data"
#endif

namespace glidesim::cli {

namespace {

// Extra sealed tubing volumes of the characterization sweep.
constexpr double kSweepVolumes[] = {50.0 * units::mL, 100.0 * units::mL, 150.0 * units::mL};
constexpr double kSweepDepths[] = {0.0, 1.0, 2.0, 3.0, 4.0};

template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ScenarioError& e) {
        err << "scenario infeasible: " << e.what() << '\n';
        return kExitScenario;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ModelSingularityError& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitConfig;
    }
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("", "cannot write " + path);
    return f;
}

}  // namespace

std::string data_path(const std::string& name) { return std::string(GLIDESIM_DATA_DIR) + "/" + name; }

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        LoadedScenario loaded = load_scenario(opts.config);
        if (opts.dt) {
            if (!(*opts.dt > 0.0)) throw ConfigError("simulation.dt", "must be > 0");
            loaded.scenario.dt = *opts.dt;
        }
        const MissionResult result = run_mission(loaded.scenario);
        {
            auto f = open_out(opts.out);
            write_trajectory_csv(f, result.log);
        }
        const SummaryReport report = make_summary_report(result.summary);
        {
            auto f = open_out(opts.summary);
            write_summary_json(f, report);
        }
        out << "cycles " << report.cycles << ", range " << format_number(report.range_m)
            << " m, time " << format_number(report.time_s) << " s, max depth "
            << format_number(report.max_depth_m) << " m (" << result.summary.termination << ")\n";
        return kExitOk;
    });
}

int cmd_valve(const ValveOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        ValveModel valve = default_valve();
        PhysicalConstants constants;
        if (opts.config) {
            const LoadedScenario loaded = load_scenario(*opts.config);
            valve = loaded.scenario.valve;
            constants = loaded.scenario.constants;
        }
        if (opts.sweep) {
            out << "depth_m,v_add_m3,snap_through_kpa,snap_back_kpa,p_high_kpa,p_low_kpa\n";
            for (double v : kSweepVolumes) {
                ValveModel vv = valve;
                vv.additional_sealed_volume = v;
                for (double d : kSweepDepths) {
                    const double up = snap_through_threshold(vv, d, constants);
                    const double down = snap_back_threshold(vv, d, constants);
                    const double hydro = hydrostatic_pressure(d, constants);
                    out << format_number(d) << ',' << format_number(v) << ','
                        << format_number(up / units::kPa) << ',' << format_number(down / units::kPa)
                        << ',' << format_number((hydro + up) / units::kPa) << ','
                        << format_number((hydro + down) / units::kPa) << '\n';
                }
            }
            return kExitOk;
        }
        if (opts.depth < 0.0) throw DomainError("depth must be >= 0");
        if (opts.v_add) {
            if (!(*opts.v_add >= 0.0)) throw ConfigError("v_add", "must be >= 0");
            valve.additional_sealed_volume = *opts.v_add;
        }
        valve.validate();
        const double up = snap_through_threshold(valve, opts.depth, constants);
        const double down = snap_back_threshold(valve, opts.depth, constants);
        const Thresholds band = thresholds_from_valve(valve, constants);
        out << "snap_through_kpa " << format_number(up / units::kPa) << '\n'
            << "snap_back_kpa " << format_number(down / units::kPa) << '\n'
            << "controller_p_high_kpa " << format_number(band.p_high / units::kPa) << '\n'
            << "controller_p_low_kpa " << format_number(band.p_low / units::kPa) << '\n';
        return kExitOk;
    });
}

int cmd_range(const RangeOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        RangeModelInput in;
        in.p_cartridge = opts.p_cartridge;
        in.v_cartridge = opts.v_cartridge;
        in.p_swim_bladder = opts.p_swim_bladder;
        in.v_swim_bladder = opts.v_swim_bladder;
        in.depth = opts.depth;
        const GasConvention conv = opts.absolute ? GasConvention::Absolute : GasConvention::Gauge;
        const double cycles = closed_form_cycles(in, conv);
        const double range = closed_form_range(in, conv);
        out << "cycles " << format_number(cycles) << '\n' << "range_m " << format_number(range) << '\n';
        if (opts.energy && opts.time) {
            const double distance = opts.distance.value_or(range);
            const PowerEfficiency pe = power_and_efficiency(*opts.energy, *opts.time, distance);
            out << "power_w " << format_number(pe.power_w) << '\n'
                << "efficiency_mw_per_m " << format_number(pe.efficiency_mw_per_m) << '\n';
        }
        return kExitOk;
    });
}

int cmd_optimize(const OptimizeOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LoadedScenario loaded = load_scenario(opts.config);
        const SearchSpec spec = load_search_spec(opts.space);
        std::vector<EvaluatedCandidate> ranked;
        if (opts.method == "grid") {
            ranked = grid_search(spec.space, spec.resolution, loaded.scenario, opts.workers,
                                 spec.max_evaluations);
        } else if (opts.method == "nelder-mead") {
            Candidate start = spec.start.value_or(Candidate{});
            if (!spec.start) {
                for (const auto& d : spec.space.dims) start.push_back(0.5 * (d.bounds.lo + d.bounds.hi));
            }
            ranked = nelder_mead(spec.space, start, loaded.scenario, spec.max_iters, spec.tolerance)
                         .evaluated;
            rank_candidates(ranked, loaded.scenario.objective);
        } else {
            throw ConfigError("method", "must be grid or nelder-mead");
        }
        {
            auto f = open_out(opts.out);
            write_ranked_csv(f, spec.space, ranked);
        }
        if (!ranked.empty() && ranked.front().feasible()) {
            out << "best objective " << format_number(*ranked.front().objective) << " over "
                << ranked.size() << " candidates\n";
        } else {
            out << "no feasible candidate among " << ranked.size() << '\n';
        }
        return kExitOk;
    });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LoadedScenario loaded = load_scenario(opts.config);
        const MissionResult result = run_mission(loaded.scenario);
        const ClaimReport mission = verify_claims(result.summary, ReferenceClaims::reported());
        const ClaimReport design = verify_design_claims(
            loaded.scenario.design, displaced_volume(reference_wing()), ReferenceClaims::reported());
        out << format_claim_report(mission) << '\n' << format_claim_report(design);
        return mission.all_passed() && design.all_passed() ? kExitOk : kExitFailed;
    });
}

int cmd_geometry(const GeometryOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        WingParams wing = reference_wing();
        if (opts.config) {
            const LoadedScenario loaded = load_scenario(*opts.config);
            if (!loaded.geometry) throw ConfigError("design.geometry", "scenario has no geometry");
            wing = *loaded.geometry;
        }
        out << "displaced_volume_cm3 " << format_number(displaced_volume(wing) / units::cm3) << '\n'
            << "wetted_area_m2 " << format_number(wetted_area(wing)) << '\n'
            << "span_m " << format_number(2.0 * wing.half_span()) << '\n';
        if (opts.stl) {
            auto f = open_out(*opts.stl);
            const auto n = write_stl(wing, f);
            out << "stl_triangles " << n << '\n';
        }
        return kExitOk;
    });
}

}  // namespace glidesim::cli
