#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "mmacov/coverage.hpp"
#include "mmacov/simulation.hpp"
#include "oracles.hpp"

using namespace mmacov;
using fixtures::fixed;
using fixtures::mobile;

namespace {

// Hand-built trace for one mobile sensor (id 7) and one static sensor (id 9).
// `steps[k]` is the displacement in round k+1; a zero vector means no move.
SimulationTrace scripted(const std::vector<Point2>& steps) {
    SimulationTrace t;
    t.sensors = {mobile(7, {1, 1}, 1), fixed(9, {5, 5}, 1)};
    t.field = fixtures::open_field(20, 20);
    Point2 p{1, 1};
    t.rounds.push_back({0, {p, {5, 5}}, {}, 0.0, 0.1});
    int r = 1;
    for (const auto& d : steps) {
        RoundRecord rec{r++, {}, {}, 0.0, 0.1};
        if (d.norm() > 0) {
            rec.moves.push_back({7, {p, p + d}});
            p = p + d;
        }
        rec.positions = {p, {5, 5}};
        t.rounds.push_back(rec);
    }
    t.total_rounds = static_cast<int>(steps.size());
    return t;
}

NetworkSnapshot example1_like(std::uint64_t seed) {
    SplitMix64 rng(seed);
    const auto f = fixtures::open_field(30, 30);
    std::vector<Sensor> s;
    for (int k = 0; k < 12; ++k) {
        const bool is_static = k >= 8;
        const double rs = is_static ? 2.0 : rng.uniform(2, 4);
        s.push_back({k, is_static ? SensorKind::Static : SensorKind::Mobile,
                     {rng.uniform(0, 30), rng.uniform(0, 30)}, rs, 4 * rs});
    }
    return {s, f, 0};
}

}  // namespace

TEST_CASE("energy of a single 3 m move") {
    const auto t = scripted({{3, 0}, {0, 0}});
    CHECK(energy_of(t, 7, {}) == doctest::Approx(66.144).epsilon(1e-12));
    CHECK(moving_distance(t, 7) == doctest::Approx(3.0));
}

TEST_CASE("energy of two separated 1 m moves") {
    const auto t = scripted({{1, 0}, {0, 0}, {0, 1}, {0, 0}});
    CHECK(energy_of(t, 7, {}) == doctest::Approx(99.216).epsilon(1e-12));
}

TEST_CASE("consecutive moving rounds chain without a stop") {
    const auto t = scripted({{1, 0}, {1, 0}, {1, 0}, {0, 0}});
    CHECK(energy_of(t, 7, {}) == doctest::Approx(66.144).epsilon(1e-12));
    // a run still open when the trace ends pays its stop too
    CHECK(energy_of(scripted({{0, 0}, {3, 0}}), 7, {}) == doctest::Approx(66.144).epsilon(1e-12));
}

TEST_CASE("energy of a sensor that never moves") {
    const auto t = scripted({{0, 0}});
    CHECK(energy_of(t, 7, {}) == 0.0);
    CHECK(energy_of(t, 9, {}) == 0.0);
    const auto m = summarize(t);
    REQUIRE(m.per_sensor.size() == 1);
    CHECK(m.stop_round == 1);
    CHECK(m.mean_distance_m == 0.0);
    CHECK(m.mean_energy_J == 0.0);
}

TEST_CASE("EnergyModel validation") {
    EnergyModel e;
    CHECK_NOTHROW(e.validate());
    e.stop_cost_meters = -1;
    CHECK_THROWS_AS(e.validate(), ValidationError);
}

TEST_CASE("run_round") {
    const SimConfig cfg;
    const Strategy mma = make_strategy(StrategyKind::Mma);
    SUBCASE("converged network does not move") {
        const NetworkSnapshot net{{mobile(1, {5, 5}, 2, 1.5), fixed(2, {1, 1}, 1)}, fixtures::open_field(10, 10), 3};
        const auto r = run_round(net, mma, cfg);
        CHECK_FALSE(r.any_moved);
        CHECK(r.moves.empty());
        CHECK(r.snapshot.sensors[0].position.x == 5.0);
        CHECK(r.snapshot.round_index == 4);
    }
    SUBCASE("only the sensor with a hole moves, as its own step predicts") {
        const NetworkSnapshot net{{mobile(1, {5, 5}, 2, 1.5), mobile(2, {12, 12}, 2, 1.5), mobile(3, {19.8, 0.2}, 2)},
                                  fixtures::open_field(20, 20), 0};
        const auto r = run_round(net, mma, cfg);
        REQUIRE(r.any_moved);
        REQUIRE(r.moves.size() == 1);
        CHECK(r.moves[0].sensor_id == 3);
        const auto expect = mma_step(net.sensor(3), net, cfg.gradient);
        CHECK(r.snapshot.sensor(3).position.x == expect.new_position.x);
        CHECK(r.snapshot.sensor(3).position.y == expect.new_position.y);
        CHECK(r.snapshot.sensor(1).position.x == 5.0);
        CHECK(r.snapshot.sensor(2).position.y == 12.0);
    }
    SUBCASE("identical inputs give identical outputs") {
        const auto net = example1_like(5);
        const auto a = run_round(net, mma, cfg);
        const auto b = run_round(net, mma, cfg);
        REQUIRE(a.snapshot.sensors.size() == b.snapshot.sensors.size());
        for (std::size_t k = 0; k < a.snapshot.sensors.size(); ++k) {
            CHECK(a.snapshot.sensors[k].position.x == b.snapshot.sensors[k].position.x);
            CHECK(a.snapshot.sensors[k].position.y == b.snapshot.sensors[k].position.y);
        }
    }
}

TEST_CASE("run_simulation") {
    SimConfig cfg;
    SUBCASE("no mobile sensors stop after one round") {
        const NetworkSnapshot net{{fixed(1, {3, 3}, 2)}, fixtures::open_field(10, 10), 0};
        const auto t = run_simulation(net, make_strategy(StrategyKind::Mma), cfg);
        CHECK(t.total_rounds == 1);
        CHECK(t.terminated_by == Termination::NoMove);
        CHECK(t.rounds.size() == 2);
        const auto m = summarize(t);
        CHECK(m.stop_round == 1);
        CHECK(m.per_sensor.empty());
        CHECK(m.mean_energy_J == 0.0);
    }
    SUBCASE("invalid input is rejected before round 0") {
        const NetworkSnapshot net{{mobile(1, {3, 3}, 2), mobile(1, {4, 4}, 2)}, fixtures::open_field(10, 10), 0};
        CHECK_THROWS_AS(run_simulation(net, make_strategy(StrategyKind::Mma), cfg), ValidationError);
        cfg.max_rounds = 0;
        CHECK_THROWS_AS(run_simulation({{mobile(1, {3, 3}, 2)}, fixtures::open_field(10, 10), 0},
                                       make_strategy(StrategyKind::Mma), cfg),
                        ValidationError);
    }
    SUBCASE("round limit") {
        cfg.max_rounds = 2;
        const auto t = run_simulation(example1_like(3), make_strategy(StrategyKind::Mma), cfg);
        CHECK(t.total_rounds == 2);
        CHECK(t.terminated_by == Termination::MaxRounds);
    }
}

TEST_CASE("example-1 sized runs") {
    const SimConfig cfg;
    for (std::uint64_t seed : {1, 2}) {
        const auto net = example1_like(seed);
        const auto t = run_simulation(net, make_strategy(StrategyKind::Mma), cfg);
        CHECK(t.terminated_by == Termination::NoMove);
        CHECK(t.total_rounds <= cfg.max_rounds);
        CHECK(t.rounds.back().coverage_factor >= t.rounds.front().coverage_factor);
        // trace consistency
        const auto m = summarize(t);
        for (const auto& ps : m.per_sensor) {
            double len = 0;
            for (const auto& r : t.rounds) {
                for (const auto& mv : r.moves) {
                    if (mv.sensor_id == ps.sensor_id) len += distance(mv.segment.a, mv.segment.b);
                }
            }
            CHECK(ps.distance_m == doctest::Approx(len));
        }
        for (std::size_t k = 0; k < t.sensors.size(); ++k) {
            if (t.sensors[k].is_mobile()) continue;
            for (const auto& r : t.rounds) {
                CHECK(r.positions[k].x == t.sensors[k].position.x);
                CHECK(r.positions[k].y == t.sensors[k].position.y);
            }
        }
        // coverage factor re-integrated at twice the resolution
        const auto last = t.snapshot_at(t.rounds.size() - 1);
        CHECK(coverage_factor(last, 2 * cfg.gradient.resolution) == doctest::Approx(m.coverage_final).epsilon(0.01));
    }
}

TEST_CASE("recorded moves avoid obstacles") {
    SplitMix64 rng(171);
    SimConfig cfg;
    cfg.max_rounds = 15;
    int runs = 0;
    while (runs < 6) {
        const auto net = fixtures::random_network(rng, {});
        if (!net) continue;
        ++runs;
        for (auto kind : {StrategyKind::Mma, StrategyKind::Minimax, StrategyKind::Pcvf}) {
            const auto t = run_simulation(*net, make_strategy(kind), cfg);
            for (const auto& r : t.rounds) {
                for (const auto& mv : r.moves) {
                    CHECK(oracle::dense_visible(mv.segment.a, mv.segment.b, net->field->obstacles()));
                    CHECK(net->field->in_free_space(mv.segment.b));
                }
            }
        }
    }
}
