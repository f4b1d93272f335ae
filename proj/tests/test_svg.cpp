#include <doctest.h>

#include <regex>
#include <sstream>

#include "fixtures.hpp"
#include "mmacov/scenario.hpp"
#include "mmacov/svg.hpp"
#include "oracles.hpp"

using namespace mmacov;

namespace {

const std::filesystem::path kScenarios = MMACOV_SCENARIO_DIR;

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

SimulationTrace example3_trace() {
    const auto sc = load_scenario(kScenarios / "example3.json");
    return run_simulation(sc.snapshot(), make_strategy(sc.strategy), sc.sim);
}

}  // namespace

TEST_CASE("open field render") {
    const NetworkSnapshot net{{fixtures::mobile(1, {5, 5}, 2), fixtures::fixed(2, {1, 1}, 1)},
                              fixtures::open_field(10, 10), 0};
    SimConfig cfg;
    cfg.max_rounds = 3;
    const auto t = run_simulation(net, make_strategy(StrategyKind::Mma), cfg);
    const std::string svg = render_svg(t, t.rounds.size() - 1, t.rounds.size() - 1);
    CHECK(svg.starts_with("<?xml"));
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    // 10 m at 20 px/m
    CHECK(svg.find("width=\"200.00\"") != std::string::npos);
    CHECK(count(svg, "class=\"obstacle\"") == 0);
    CHECK(count(svg, "<circle class=\"disk") == 2);
    CHECK(count(svg, "<polyline") == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("example 3 trajectories") {
    const auto t = example3_trace();
    const auto& obs = t.field->obstacles();
    const std::string a = render_svg(t, 0, t.rounds.size() - 1);
    const std::string b = render_svg(example3_trace(), 0, t.rounds.size() - 1);
    CHECK(a == b);
    CHECK(count(a, "class=\"obstacle\"") == 1);
    CHECK(count(a, "<circle class=\"disk mobile\"") == 6);
    CHECK(count(a, "<polyline class=\"trajectory\"") == 6);

    // parse the polylines back and check them against the barrier
    const double s = SvgOptions{}.px_per_meter;
    const double h = t.field->height();
    const std::regex poly_re("points=\"([^\"]*)\"");
    double closest = 1e9;
    int polylines = 0;
    for (auto it = std::sregex_iterator(a.begin(), a.end(), poly_re); it != std::sregex_iterator(); ++it) {
        ++polylines;
        std::stringstream ss((*it)[1].str());
        std::vector<Point2> pts;
        std::string pair;
        while (ss >> pair) {
            const auto comma = pair.find(',');
            pts.push_back({std::stod(pair.substr(0, comma)) / s, h - std::stod(pair.substr(comma + 1)) / s});
        }
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            CHECK(oracle::dense_visible(pts[k], pts[k + 1], obs, 1e-3));
        }
        for (const auto& p : pts) {
            const auto ring = obs[0].vertices();
            closest = std::min(closest, oracle::boundary_dist(p, ring));
        }
    }
    CHECK(polylines == 6);
    // passes the barrier closer than the smallest sensing radius
    CHECK(closest < 1.0);
}

TEST_CASE("scale option") {
    const NetworkSnapshot net{{fixtures::mobile(1, {5, 2}, 2)}, fixtures::open_field(10, 4), 0};
    SimConfig cfg;
    cfg.max_rounds = 1;
    const auto t = run_simulation(net, make_strategy(StrategyKind::Mma), cfg);
    const std::string svg = render_svg(t, 0, 0, {10.0});
    CHECK(svg.find("width=\"100.00\"") != std::string::npos);
    CHECK(svg.find("height=\"40.00\"") != std::string::npos);
}
