#include "catch_amalgamated.hpp"

#include "glidesim/config.hpp"
#include "glidesim/errors.hpp"
#include "glidesim/optimizer.hpp"
#include "glidesim/units.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace glidesim;
using Catch::Approx;

namespace {

ScenarioConfig reference() {
    return load_scenario(std::string(GLIDESIM_DATA_DIR) + "/paper_default.json").scenario;
}

double bowl(const std::vector<double>& x) {
    return -(x[0] - 0.3) * (x[0] - 0.3) - 2.0 * (x[1] + 0.2) * (x[1] + 0.2);
}

DesignSpace small_space() {
    return DesignSpace{{{Param::TrimForce, {-2.1, -1.9}},
                        {Param::Theta, {26.0 * units::deg, 30.0 * units::deg}}}};
}

}  // namespace

TEST_CASE("simplex finds the peak of a quadratic", "[optimizer]") {
    const std::vector<double> lo{-1, -1}, hi{1, 1};
    const auto r = nelder_mead_maximize(bowl, {0.9, 0.8}, lo, hi, 1000, 1e-14);
    CHECK(r.x[0] == Approx(0.3).margin(1e-4));
    CHECK(r.x[1] == Approx(-0.2).margin(1e-4));
    CHECK(r.value == Approx(0.0).margin(1e-8));

    const auto at_peak = nelder_mead_maximize(bowl, {0.3, -0.2}, lo, hi, 1000, 1e-14);
    CHECK(at_peak.x[0] == Approx(0.3).margin(1e-4));
    CHECK(at_peak.x[1] == Approx(-0.2).margin(1e-4));
}

TEST_CASE("simplex respects the box and fixed dimensions", "[optimizer]") {
    const auto r = nelder_mead_maximize(bowl, {-0.5, 0.5}, {-1, 0}, {0.1, 1}, 1000, 1e-14);
    CHECK(r.x[0] == Approx(0.1).margin(1e-4));
    CHECK(r.x[1] == Approx(0.0).margin(1e-4));

    const auto fixed = nelder_mead_maximize(bowl, {0.7, 0.43}, {0.7, -1}, {0.7, 1}, 1000, 1e-14);
    CHECK(fixed.x[0] == 0.7);
    CHECK(fixed.x[1] == Approx(-0.2).margin(1e-4));
}

TEST_CASE("design space validation", "[optimizer]") {
    CHECK_THROWS_AS((DesignSpace{{{Param::Theta, {0.5, 0.4}}}}.validate()), ConfigError);
    CHECK_THROWS_AS((DesignSpace{{{Param::PHigh, {5e3, 20e3}}, {Param::PLow, {1e3, 6e3}}}}.validate()),
                    ConfigError);
    CHECK_NOTHROW((DesignSpace{{{Param::Theta, {0.5, 0.5}}}}.validate()));
    for (Param p : {Param::BladderCapacity, Param::TrimForce, Param::PHigh, Param::PLow,
                    Param::RegulatorSetpoint, Param::Theta, Param::Phi, Param::DragArea}) {
        CHECK(param_from_name(param_name(p)) == p);
    }
    CHECK_FALSE(param_from_name("wingspan"));
}

TEST_CASE("evaluation outside the box is a domain error", "[optimizer]") {
    CHECK_THROWS_AS(evaluate({-3.0, 0.49}, small_space(), reference()), DomainError);
}

TEST_CASE("buoyant trim is infeasible with a reason", "[optimizer]") {
    const DesignSpace space{{{Param::TrimForce, {0.1, 0.5}}}};
    const EvaluatedCandidate c = evaluate({0.2}, space, reference());
    CHECK_FALSE(c.feasible());
    CHECK(c.reason == "never dives");
    CHECK(c.score(Objective::Range) == -INFINITY);
}

TEST_CASE("single-point grid evaluates the fixed design", "[optimizer]") {
    const ScenarioConfig sc = reference();
    const DesignSpace space{{{Param::TrimForce, {-2.0, -2.0}}}};
    const auto results = grid_search(space, 5, sc, 1);
    REQUIRE(results.size() == 1);
    REQUIRE(results[0].feasible());
    CHECK(*results[0].objective == Approx(run_mission(sc).summary.total_range).epsilon(1e-12));
}

TEST_CASE("grid ranking is independent of the worker count", "[optimizer][property]") {
    const ScenarioConfig sc = reference();
    const auto one = grid_search(small_space(), 3, sc, 1);
    REQUIRE(one.size() == 9);
    for (unsigned workers : {2u, 8u}) {
        const auto many = grid_search(small_space(), 3, sc, workers);
        REQUIRE(many.size() == one.size());
        for (std::size_t i = 0; i < one.size(); ++i) {
            CHECK(many[i].params == one[i].params);
            CHECK(many[i].objective == one[i].objective);
            CHECK(many[i].reason == one[i].reason);
        }
    }
    // best first: nothing later scores higher
    double best = -INFINITY;
    for (const auto& c : one) best = std::max(best, c.score(sc.objective));
    CHECK(one.front().score(sc.objective) == best);
    for (std::size_t i = 1; i < one.size(); ++i) {
        CHECK(one[i - 1].score(sc.objective) >= one[i].score(sc.objective));
    }
}

TEST_CASE("simulator-backed simplex never ends worse than its start", "[optimizer]") {
    const ScenarioConfig sc = reference();
    const DesignSpace space{{{Param::Theta, {26.0 * units::deg, 30.0 * units::deg}}}};
    const Candidate start{28.0724869 * units::deg};
    const EvaluatedCandidate at_start = evaluate(start, space, sc);
    REQUIRE(at_start.feasible());
    const NelderMeadSearch search = nelder_mead(space, start, sc, 15, 1e-3);
    CHECK(search.best.score(sc.objective) >= at_start.score(sc.objective));
    CHECK(space.contains(search.best.params));

    const DesignSpace trim{{{Param::TrimForce, {0.1, 0.5}}}};
    CHECK_THROWS_AS(nelder_mead(trim, {0.2}, sc, 5, 1e-3), ScenarioError);
}

TEST_CASE("ranked CSV layout", "[optimizer]") {
    const DesignSpace space{{{Param::TrimForce, {-2.0, 0.3}}}};
    std::vector<EvaluatedCandidate> ranked{{{-2.0}, 147.5, ""}, {{0.3}, std::nullopt, "never dives"}};
    std::ostringstream out;
    write_ranked_csv(out, space, ranked);
    CHECK(out.str() ==
          "rank,trim_force,objective,feasible,reason\n"
          "1,-2,147.5,true,\n"
          "2,0.3,,false,never dives\n");
}
