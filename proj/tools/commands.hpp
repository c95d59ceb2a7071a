#pragma once

// Subcommand bodies, separate from argument parsing so tests can call them.
// Each returns the process exit code: 0 ok, 1 claim check failed,
// 2 configuration error, 3 infeasible scenario.

#include <iosfwd>
#include <optional>
#include <string>

namespace glidesim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitScenario = 3;

struct SimulateOptions {
    std::string config;
    std::string out;
    std::string summary;
    std::optional<double> dt;
};

int cmd_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err);

struct ValveOptions {
    std::optional<std::string> config;
    double depth = 0;
    std::optional<double> v_add;  // m^3
    bool sweep = false;
};

int cmd_valve(const ValveOptions& opts, std::ostream& out, std::ostream& err);

struct RangeOptions {
    double p_cartridge = 0;
    double v_cartridge = 0;
    double p_swim_bladder = 0;
    double v_swim_bladder = 0;
    double depth = 0;
    bool absolute = false;
    std::optional<double> energy;
    std::optional<double> time;
    std::optional<double> distance;  // defaults to the closed-form range
};

int cmd_range(const RangeOptions& opts, std::ostream& out, std::ostream& err);

struct OptimizeOptions {
    std::string config;
    std::string space;
    std::string method = "grid";
    std::string out;
    unsigned workers = 0;
};

int cmd_optimize(const OptimizeOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    std::string config;
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct GeometryOptions {
    std::optional<std::string> config;
    std::optional<std::string> stl;
};

int cmd_geometry(const GeometryOptions& opts, std::ostream& out, std::ostream& err);

/// Path of a bundled data file, e.g. data_path("paper_default.json").
std::string data_path(const std::string& name);

}  // namespace glidesim::cli
