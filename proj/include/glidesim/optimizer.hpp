#pragma once

#include "glidesim/mission.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace glidesim {

enum class Param {
    BladderCapacity,    // m^3
    TrimForce,          // N, deflated net force
    PHigh,              // Pa
    PLow,               // Pa
    RegulatorSetpoint,  // Pa
    Theta,              // rad
    Phi,                // rad
    DragArea,           // m^2
};

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

struct Bounds {
    double lo = 0;
    double hi = 0;

    bool fixed() const { return lo == hi; }
};

struct Dimension {
    Param param;
    Bounds bounds;
};

/// Box over a subset of the parameters. The order of `dims` is the order of
/// every candidate vector. A dimension with lo == hi is held fixed.
struct DesignSpace {
    std::vector<Dimension> dims;

    void validate() const;
    bool contains(const std::vector<double>& x) const;
    std::optional<std::size_t> index_of(Param p) const;
};

using Candidate = std::vector<double>;

struct EvaluatedCandidate {
    Candidate params;
    std::optional<double> objective;  // m (range) or mW/m (efficiency)
    std::string reason;               // set only when infeasible

    bool feasible() const { return objective.has_value(); }
    /// Larger is better: range, or negated mW/m. -inf when infeasible.
    double score(Objective objective_kind) const;
};

/// Scenario with the candidate's parameters written in. Trim and bladder
/// capacity rebuild the hull volume; threshold parameters become an override.
ScenarioConfig apply_candidate(const ScenarioConfig& base, const DesignSpace& space,
                               const Candidate& candidate);

/// Throws DomainError for a candidate outside the space.
EvaluatedCandidate evaluate(const Candidate& candidate, const DesignSpace& space,
                            const ScenarioConfig& scenario);

/// Worker count from GLIDESIM_THREADS, else the hardware concurrency.
unsigned default_worker_count();

/// Sort best first; ties and infeasible candidates fall back to
/// lexicographic parameter order.
void rank_candidates(std::vector<EvaluatedCandidate>& candidates, Objective objective);

/// Exhaustive search over `resolution` points per free dimension. Results
/// are merged by grid index, so the ranking is independent of `workers`.
std::vector<EvaluatedCandidate> grid_search(const DesignSpace& space, int resolution,
                                            const ScenarioConfig& scenario, unsigned workers = 0,
                                            std::size_t max_evaluations = 100000);

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0;
    int iterations = 0;
    int evaluations = 0;
};

/// Maximizes f inside [lo, hi] (projection onto the box). Dimensions with
/// lo == hi stay at their start value. Stops when the spread of vertex
/// values drops below `tolerance` or after `max_iters` iterations.
NelderMeadResult nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& f,
                                      const std::vector<double>& start,
                                      const std::vector<double>& lo,
                                      const std::vector<double>& hi, int max_iters,
                                      double tolerance, double initial_step = 0.1);

struct NelderMeadSearch {
    EvaluatedCandidate best;
    std::vector<EvaluatedCandidate> evaluated;  // distinct candidates in evaluation order
};

/// Simulator-backed simplex search. Throws ScenarioError when the start is
/// infeasible.
NelderMeadSearch nelder_mead(const DesignSpace& space, const Candidate& start,
                             const ScenarioConfig& scenario, int max_iters, double tolerance);

/// Ranked results, one row per candidate: rank, parameters, objective,
/// feasible, reason.
void write_ranked_csv(std::ostream& out, const DesignSpace& space,
                      const std::vector<EvaluatedCandidate>& ranked);

}  // namespace glidesim
