#pragma once

#include "glidesim/geometry.hpp"
#include "glidesim/mission.hpp"
#include "glidesim/optimizer.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace glidesim {

/// Scenario plus the inputs it was built from, for reporting.
struct LoadedScenario {
    ScenarioConfig scenario;
    std::optional<WingParams> geometry;  // set when the hull volume came from geometry
    std::string description;
};

/// JSON scenario. Unknown keys and type mismatches throw ConfigError with
/// the dotted key path; every section is validated after loading.
LoadedScenario parse_scenario(const std::string& json_text);
LoadedScenario load_scenario(const std::string& path);

/// Inverse of parse_scenario for the fields it reads (design written as
/// hull_volume).
std::string scenario_to_json(const ScenarioConfig& scenario);

struct SearchSpec {
    DesignSpace space;
    int resolution = 5;
    std::size_t max_evaluations = 100000;
    std::optional<Candidate> start;  // Nelder-Mead start, defaults to the box centre
    int max_iters = 200;
    double tolerance = 1e-3;
};

SearchSpec parse_search_spec(const std::string& json_text);
SearchSpec load_search_spec(const std::string& path);

}  // namespace glidesim
