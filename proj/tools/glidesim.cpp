#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace glidesim::cli;

    CLI::App app{"Closed-loop simulator for a buoyancy-driven glider with a bistable-valve controller"};
    app.require_subcommand(1);

    SimulateOptions sim;
    sim.config = data_path("paper_default.json");
    auto* simulate = app.add_subcommand("simulate", "Run a mission, write trajectory CSV and summary JSON");
    simulate->add_option("--config", sim.config, "Scenario JSON")->capture_default_str();
    simulate->add_option("--out", sim.out, "Trajectory CSV path")->required();
    simulate->add_option("--summary", sim.summary, "Summary JSON path")->required();
    simulate->add_option("--dt", sim.dt, "Override the time step (s)");
    simulate->add_flag("--seedless", "Accepted for compatibility; runs are always deterministic");

    ValveOptions valve;
    auto* valve_cmd = app.add_subcommand("valve", "Snap-through / snap-back thresholds of the valve");
    valve_cmd->add_option("--config", valve.config, "Scenario JSON supplying the valve");
    valve_cmd->add_option("--depth", valve.depth, "Depth (m)");
    valve_cmd->add_option("--v-add", valve.v_add, "Additional sealed volume (m^3)");
    valve_cmd->add_flag("--sweep", valve.sweep, "CSV over depths 0-4 m and three tube volumes");

    RangeOptions range;
    auto* range_cmd = app.add_subcommand("range", "Closed-form gas-budget range, power and efficiency");
    range_cmd->add_option("--p-cart", range.p_cartridge, "Cartridge pressure (Pa)")->required();
    range_cmd->add_option("--v-cart", range.v_cartridge, "Cartridge volume (m^3)")->required();
    range_cmd->add_option("--p-sb", range.p_swim_bladder, "Bladder wall pressure (Pa)")->required();
    range_cmd->add_option("--v-sb", range.v_swim_bladder, "Bladder volume (m^3)")->required();
    range_cmd->add_option("--depth", range.depth, "Dive depth (m)")->required();
    range_cmd->add_flag("--absolute", range.absolute, "Charge each fill at absolute pressure");
    range_cmd->add_option("--energy", range.energy, "Energy spent (J)");
    range_cmd->add_option("--time", range.time, "Mission time (s)");
    range_cmd->add_option("--distance", range.distance, "Distance for efficiency (m), default: closed-form range");

    OptimizeOptions opt;
    opt.config = data_path("paper_default.json");
    auto* optimize = app.add_subcommand("optimize", "Design-space search, ranked CSV");
    optimize->add_option("--config", opt.config, "Scenario JSON")->capture_default_str();
    optimize->add_option("--space", opt.space, "Design space JSON")->required();
    optimize->add_option("--method", opt.method, "grid or nelder-mead")
        ->check(CLI::IsMember({"grid", "nelder-mead"}))
        ->capture_default_str();
    optimize->add_option("--out", opt.out, "Ranked CSV path")->required();
    optimize->add_option("--workers", opt.workers, "Worker threads (default GLIDESIM_THREADS or all cores)");

    VerifyOptions verify;
    verify.config = data_path("paper_default.json");
    auto* verify_cmd = app.add_subcommand("verify", "Compare a mission against the reported figures");
    verify_cmd->add_option("--config", verify.config, "Scenario JSON")->capture_default_str();

    GeometryOptions geom;
    auto* geometry = app.add_subcommand("geometry", "Hull volume and wetted area, optional STL");
    geometry->add_option("--config", geom.config, "Scenario JSON with design.geometry");
    geometry->add_option("--stl", geom.stl, "Write a binary STL (mm)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    if (*simulate) return cmd_simulate(sim, std::cout, std::cerr);
    if (*valve_cmd) return cmd_valve(valve, std::cout, std::cerr);
    if (*range_cmd) return cmd_range(range, std::cout, std::cerr);
    if (*optimize) return cmd_optimize(opt, std::cout, std::cerr);
    if (*verify_cmd) return cmd_verify(verify, std::cout, std::cerr);
    if (*geometry) return cmd_geometry(geom, std::cout, std::cerr);
    return kExitConfig;
}
