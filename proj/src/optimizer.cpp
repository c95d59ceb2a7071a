#include "glidesim/optimizer.hpp"

#include "glidesim/analysis.hpp"
#include "glidesim/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <thread>

namespace glidesim {

namespace {

constexpr std::pair<Param, std::string_view> kNames[] = {
    {Param::BladderCapacity, "bladder_capacity"},
    {Param::TrimForce, "trim_force"},
    {Param::PHigh, "p_high"},
    {Param::PLow, "p_low"},
    {Param::RegulatorSetpoint, "regulator_setpoint"},
    {Param::Theta, "theta"},
    {Param::Phi, "phi"},
    {Param::DragArea, "drag_area"},
};

double objective_value(const MissionSummary& s, Objective kind) {
    if (kind == Objective::Range) return s.total_range;
    return power_and_efficiency(s.energy_used, s.total_time, s.total_range).efficiency_mw_per_m;
}

}  // namespace

std::string_view param_name(Param p) {
    for (const auto& [param, name] : kNames) {
        if (param == p) return name;
    }
    return "";
}

std::optional<Param> param_from_name(std::string_view name) {
    for (const auto& [param, n] : kNames) {
        if (n == name) return param;
    }
    return std::nullopt;
}

void DesignSpace::validate() const {
    if (dims.empty()) throw ConfigError("space.parameters", "must name at least one parameter");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        const std::string key = "space.parameters." + std::string(param_name(dims[i].param));
        for (std::size_t j = 0; j < i; ++j) {
            if (dims[j].param == dims[i].param) throw ConfigError(key, "listed twice");
        }
        const Bounds& b = dims[i].bounds;
        if (!std::isfinite(b.lo) || !std::isfinite(b.hi) || b.lo > b.hi) {
            throw ConfigError(key, "needs finite bounds with lo <= hi");
        }
    }
    const auto hi_idx = index_of(Param::PHigh);
    const auto lo_idx = index_of(Param::PLow);
    if (hi_idx && lo_idx && !(dims[*lo_idx].bounds.hi < dims[*hi_idx].bounds.lo)) {
        throw ConfigError("space.parameters.p_low",
                          "upper bound must stay below the p_high lower bound");
    }
}

bool DesignSpace::contains(const std::vector<double>& x) const {
    if (x.size() != dims.size()) return false;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (!(x[i] >= dims[i].bounds.lo && x[i] <= dims[i].bounds.hi)) return false;
    }
    return true;
}

std::optional<std::size_t> DesignSpace::index_of(Param p) const {
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i].param == p) return i;
    }
    return std::nullopt;
}

double EvaluatedCandidate::score(Objective objective_kind) const {
    if (!objective) return -std::numeric_limits<double>::infinity();
    return objective_kind == Objective::Range ? *objective : -*objective;
}

ScenarioConfig apply_candidate(const ScenarioConfig& base, const DesignSpace& space,
                               const Candidate& candidate) {
    ScenarioConfig sc = base;
    double trim = trim_force(base.design, base.constants);
    double capacity = base.design.bladder_capacity;
    std::optional<double> p_high, p_low;
    for (std::size_t i = 0; i < space.dims.size(); ++i) {
        const double v = candidate.at(i);
        switch (space.dims[i].param) {
            case Param::BladderCapacity: capacity = v; break;
            case Param::TrimForce: trim = v; break;
            case Param::PHigh: p_high = v; break;
            case Param::PLow: p_low = v; break;
            case Param::RegulatorSetpoint: sc.regulator.setpoint = v; break;
            case Param::Theta: sc.glide.theta = v; break;
            case Param::Phi: sc.glide.phi = v; break;
            case Param::DragArea: sc.drag.c_d_a = v; break;
        }
    }
    GliderDesign design = GliderDesign::from_trim(base.design.mass, trim, capacity, base.constants);
    design.added_mass_fraction = base.design.added_mass_fraction;
    sc.design = design;
    if (p_high || p_low) {
        const Thresholds current = base.thresholds();
        sc.threshold_override = Thresholds{p_high.value_or(current.p_high),
                                           p_low.value_or(current.p_low)};
    }
    return sc;
}

EvaluatedCandidate evaluate(const Candidate& candidate, const DesignSpace& space,
                            const ScenarioConfig& scenario) {
    if (!space.contains(candidate)) throw DomainError("evaluate: candidate outside the design space");
    EvaluatedCandidate out;
    out.params = candidate;
    try {
        const ScenarioConfig sc = apply_candidate(scenario, space, candidate);
        const MissionResult result = run_mission(sc);
        if (result.summary.cycles_completed == 0 || result.summary.total_range <= 0.0) {
            out.reason = "zero cycles";
        } else {
            out.objective = objective_value(result.summary, scenario.objective);
        }
    } catch (const ScenarioError& e) {
        out.reason = e.invariant();
    } catch (const ConfigError& e) {
        out.reason = e.what();
    }
    return out;
}

unsigned default_worker_count() {
    if (const char* env = std::getenv("GLIDESIM_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void rank_candidates(std::vector<EvaluatedCandidate>& candidates, Objective objective) {
    std::stable_sort(candidates.begin(), candidates.end(),
                     [objective](const EvaluatedCandidate& a, const EvaluatedCandidate& b) {
                         const double sa = a.score(objective);
                         const double sb = b.score(objective);
                         if (sa != sb) return sa > sb;
                         return a.params < b.params;
                     });
}

std::vector<EvaluatedCandidate> grid_search(const DesignSpace& space, int resolution,
                                            const ScenarioConfig& scenario, unsigned workers,
                                            std::size_t max_evaluations) {
    space.validate();
    std::vector<std::size_t> counts;
    std::size_t total = 1;
    for (const auto& d : space.dims) {
        const std::size_t n = d.bounds.fixed() ? 1 : static_cast<std::size_t>(resolution);
        if (!d.bounds.fixed() && resolution < 2) {
            throw DomainError("grid_search: resolution must be >= 2 per swept dimension");
        }
        counts.push_back(n);
        total *= n;
        if (total > max_evaluations) throw DomainError("grid_search: grid exceeds evaluation budget");
    }

    auto point = [&](std::size_t index) {
        Candidate c(space.dims.size());
        for (std::size_t i = space.dims.size(); i-- > 0;) {
            const std::size_t k = index % counts[i];
            index /= counts[i];
            const Bounds& b = space.dims[i].bounds;
            c[i] = counts[i] == 1 ? b.lo
                                  : (k + 1 == counts[i] ? b.hi
                                                        : b.lo + (b.hi - b.lo) * static_cast<double>(k) /
                                                                     static_cast<double>(counts[i] - 1));
        }
        return c;
    };

    std::vector<EvaluatedCandidate> results(total);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < total; i = next++) {
            results[i] = evaluate(point(i), space, scenario);
        }
    };
    if (workers == 0) workers = default_worker_count();
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    rank_candidates(results, scenario.objective);
    return results;
}

NelderMeadResult nelder_mead_maximize(const std::function<double(const std::vector<double>&)>& f,
                                      const std::vector<double>& start,
                                      const std::vector<double>& lo,
                                      const std::vector<double>& hi, int max_iters,
                                      double tolerance, double initial_step) {
    const std::size_t n_all = start.size();
    if (lo.size() != n_all || hi.size() != n_all) throw DomainError("nelder_mead: bounds size mismatch");
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n_all; ++i) {
        if (lo[i] > hi[i]) throw DomainError("nelder_mead: lo > hi");
        if (lo[i] < hi[i]) free.push_back(i);
    }

    NelderMeadResult result;
    auto project = [&](std::vector<double> x) {
        for (std::size_t i = 0; i < n_all; ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
        return x;
    };
    auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        return f(x);
    };

    struct Vertex {
        std::vector<double> x;
        double v;
    };
    const std::size_t n = free.size();
    std::vector<Vertex> simplex;
    const std::vector<double> x0 = project(start);
    simplex.push_back({x0, eval(x0)});
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = free[k];
        std::vector<double> x = x0;
        const double step = initial_step * (hi[i] - lo[i]);
        x[i] = x0[i] + step <= hi[i] ? x0[i] + step : x0[i] - step;
        x = project(x);
        simplex.push_back({x, eval(x)});
    }

    constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    auto by_value = [](const Vertex& a, const Vertex& b) { return a.v > b.v; };
    auto combine = [&](const std::vector<double>& c, const std::vector<double>& w, double coef) {
        std::vector<double> x = c;
        for (std::size_t i : free) x[i] = c[i] + coef * (c[i] - w[i]);
        return project(x);
    };

    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    while (n > 0 && result.iterations < max_iters) {
        const double spread = simplex.front().v - simplex.back().v;
        if (std::isfinite(spread) && spread < tolerance) break;
        ++result.iterations;

        std::vector<double> centroid = simplex.front().x;
        for (std::size_t i : free) {
            double sum = 0;
            for (std::size_t k = 0; k < n; ++k) sum += simplex[k].x[i];
            centroid[i] = sum / static_cast<double>(n);
        }
        Vertex& worst = simplex.back();
        const std::vector<double> xr = combine(centroid, worst.x, alpha);
        const double vr = eval(xr);
        if (vr > simplex.front().v) {
            const std::vector<double> xe = combine(centroid, worst.x, gamma);
            const double ve = eval(xe);
            worst = ve > vr ? Vertex{xe, ve} : Vertex{xr, vr};
        } else if (vr > simplex[n - 1].v) {
            worst = {xr, vr};
        } else {
            const bool outside = vr > worst.v;
            const std::vector<double> xc =
                outside ? combine(centroid, worst.x, alpha * rho) : combine(centroid, worst.x, -rho);
            const double vc = eval(xc);
            if (vc > (outside ? vr : worst.v)) {
                worst = {xc, vc};
            } else {
                for (std::size_t k = 1; k <= n; ++k) {
                    for (std::size_t i : free) {
                        simplex[k].x[i] = simplex[0].x[i] + sigma * (simplex[k].x[i] - simplex[0].x[i]);
                    }
                    simplex[k].v = eval(simplex[k].x);
                }
            }
        }
        std::stable_sort(simplex.begin(), simplex.end(), by_value);
    }
    result.x = simplex.front().x;
    result.value = simplex.front().v;
    return result;
}

NelderMeadSearch nelder_mead(const DesignSpace& space, const Candidate& start,
                             const ScenarioConfig& scenario, int max_iters, double tolerance) {
    space.validate();
    const EvaluatedCandidate first = evaluate(start, space, scenario);
    if (!first.feasible()) throw ScenarioError("infeasible start", first.reason);

    std::map<Candidate, EvaluatedCandidate> cache;
    std::vector<Candidate> order;
    cache.emplace(start, first);
    order.push_back(start);
    auto objective = [&](const std::vector<double>& x) {
        auto it = cache.find(x);
        if (it == cache.end()) {
            it = cache.emplace(x, evaluate(x, space, scenario)).first;
            order.push_back(x);
        }
        return it->second.score(scenario.objective);
    };

    std::vector<double> lo, hi;
    for (const auto& d : space.dims) {
        lo.push_back(d.bounds.lo);
        hi.push_back(d.bounds.hi);
    }
    const NelderMeadResult r = nelder_mead_maximize(objective, start, lo, hi, max_iters, tolerance);

    NelderMeadSearch out;
    for (const auto& x : order) out.evaluated.push_back(cache.at(x));
    out.best = cache.at(r.x);
    if (out.best.score(scenario.objective) < first.score(scenario.objective)) out.best = first;
    return out;
}

void write_ranked_csv(std::ostream& out, const DesignSpace& space,
                      const std::vector<EvaluatedCandidate>& ranked) {
    out << "rank";
    for (const auto& d : space.dims) out << ',' << param_name(d.param);
    out << ",objective,feasible,reason\n";
    long rank = 0;
    for (const auto& c : ranked) {
        out << ++rank;
        for (double v : c.params) out << ',' << format_number(v);
        out << ',' << (c.objective ? format_number(*c.objective) : std::string()) << ','
            << (c.feasible() ? "true" : "false") << ',' << csv_field(c.reason) << '\n';
    }
}

}  // namespace glidesim
