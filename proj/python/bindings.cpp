// Python bindings for the mmacov core.

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "mmacov/coverage.hpp"
#include "mmacov/experiment.hpp"
#include "mmacov/geometry.hpp"
#include "mmacov/optimizer.hpp"
#include "mmacov/scenario.hpp"
#include "mmacov/simulation.hpp"
#include "mmacov/svg.hpp"

namespace py = pybind11;
using namespace mmacov;

namespace {

SimulationTrace simulate(const ScenarioConfig& sc) {
    return run_simulation(sc.snapshot(), make_strategy(sc.strategy), sc.sim);
}

std::string metrics_csv(const std::vector<RunRecord>& runs) {
    std::ostringstream out;
    write_metrics_csv(out, runs);
    return out.str();
}

std::vector<RunRecord> parse_metrics_csv(const std::string& text) {
    std::istringstream in(text);
    return read_metrics_csv(in);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coverage-maximising deployment of heterogeneous sensor networks";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<Point2>(m, "Point2")
        .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
        .def(py::init([](const py::tuple& t) {
            if (t.size() != 2) throw py::value_error("Point2 needs (x, y)");
            return Point2{t[0].cast<double>(), t[1].cast<double>()};
        }))
        .def_readwrite("x", &Point2::x)
        .def_readwrite("y", &Point2::y)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("__iter__", [](const Point2& p) { return py::iter(py::make_tuple(p.x, p.y)); })
        .def("__repr__", [](const Point2& p) {
            return "Point2(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });
    py::implicitly_convertible<py::tuple, Point2>();

    py::implicitly_convertible<py::tuple, Point2>();

    py::class_<PolygonObstacle>(m, "PolygonObstacle")
        .def(py::init<std::string, std::vector<Point2>>(), py::arg("id"), py::arg("vertices"))
        .def_property_readonly("id", &PolygonObstacle::id)
        .def_property_readonly("vertices", [](const PolygonObstacle& o) {
            return std::vector<Point2>(o.vertices().begin(), o.vertices().end());
        });

    m.def("is_visible",
          [](const Point2& a, const Point2& b, const std::vector<PolygonObstacle>& obs) {
              return is_visible(a, b, obs);
          },
          py::arg("a"), py::arg("b"), py::arg("obstacles"));
    m.def("point_in_polygon", &point_in_polygon, py::arg("q"), py::arg("polygon"));

    py::class_<FieldModel, std::shared_ptr<FieldModel>>(m, "FieldModel")
        .def_property_readonly("width", &FieldModel::width)
        .def_property_readonly("height", &FieldModel::height)
        .def_property_readonly("obstacles", &FieldModel::obstacles)
        .def("in_free_space", &FieldModel::in_free_space)
        .def("priority_at", &FieldModel::priority_at);
    m.def("weighted_field_area", &weighted_field_area, py::arg("field"), py::arg("resolution"));

    py::enum_<SensorKind>(m, "SensorKind").value("MOBILE", SensorKind::Mobile).value("STATIC", SensorKind::Static);

    py::class_<Sensor>(m, "Sensor")
        .def(py::init([](int id, SensorKind kind, Point2 pos, double rs, double rc) {
                 return Sensor{id, kind, pos, rs, rc};
             }),
             py::arg("id"), py::arg("kind"), py::arg("position"), py::arg("sensing_radius"),
             py::arg("comm_radius"))
        .def_readwrite("id", &Sensor::id)
        .def_readwrite("kind", &Sensor::kind)
        .def_readwrite("position", &Sensor::position)
        .def_readwrite("sensing_radius", &Sensor::sensing_radius)
        .def_readwrite("comm_radius", &Sensor::comm_radius);

    py::class_<NetworkSnapshot>(m, "NetworkSnapshot")
        .def(py::init([](std::vector<Sensor> sensors, std::shared_ptr<const FieldModel> field) {
                 return NetworkSnapshot{std::move(sensors), std::move(field), 0};
             }),
             py::arg("sensors"), py::arg("field"))
        .def_readwrite("sensors", &NetworkSnapshot::sensors)
        .def_readonly("round_index", &NetworkSnapshot::round_index);

    m.def("coverage_factor", py::overload_cast<const NetworkSnapshot&, double>(&coverage_factor),
          py::arg("snapshot"), py::arg("resolution"));
    m.def("overall_weighted_coverage", &overall_weighted_coverage, py::arg("snapshot"), py::arg("resolution"));

    py::class_<RegionSpec>(m, "RegionSpec")
        .def_readonly("neighbors", &RegionSpec::neighbors)
        .def_readonly("r_min", &RegionSpec::r_min)
        .def_readonly("static_sensors_in_range", &RegionSpec::static_sensors_in_range)
        .def("reach", &RegionSpec::reach);
    m.def("build_region_spec",
          [](const NetworkSnapshot& s, int id) { return build_region_spec(s.sensor(id), s); },
          py::arg("snapshot"), py::arg("sensor_id"));
    m.def("in_region", &in_region, py::arg("q"), py::arg("spec"));
    m.def("local_weighted_coverage", &local_weighted_coverage, py::arg("x"), py::arg("sensing_radius"),
          py::arg("spec"), py::arg("resolution"));

    py::class_<GradientConfig>(m, "GradientConfig")
        .def(py::init<>())
        .def_readwrite("n_perimeter", &GradientConfig::n_perimeter)
        .def_readwrite("n_radial", &GradientConfig::n_radial)
        .def_readwrite("epsilon", &GradientConfig::epsilon)
        .def_readwrite("step_tolerance", &GradientConfig::step_tolerance)
        .def_readwrite("max_line_search_evals", &GradientConfig::max_line_search_evals)
        .def_readwrite("resolution", &GradientConfig::resolution);
    m.def("total_gradient", &total_gradient, py::arg("x"), py::arg("sensing_radius"), py::arg("spec"),
          py::arg("config") = GradientConfig{});

    py::class_<SensorStepResult>(m, "SensorStepResult")
        .def_readonly("moved", &SensorStepResult::moved)
        .def_readonly("new_position", &SensorStepResult::new_position)
        .def_readonly("coverage_before", &SensorStepResult::coverage_before)
        .def_readonly("coverage_after", &SensorStepResult::coverage_after)
        .def_readonly("gradient", &SensorStepResult::gradient)
        .def_readonly("alpha", &SensorStepResult::alpha);
    m.def("mma_step",
          [](const NetworkSnapshot& s, int id, const GradientConfig& cfg) { return mma_step(s.sensor(id), s, cfg); },
          py::arg("snapshot"), py::arg("sensor_id"), py::arg("config") = GradientConfig{});

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("gradient", &SimConfig::gradient)
        .def_readwrite("max_rounds", &SimConfig::max_rounds)
        .def_readwrite("static_blind", &SimConfig::static_blind);

    py::class_<EnergyModel>(m, "EnergyModel")
        .def(py::init<>())
        .def_readwrite("joules_per_meter", &EnergyModel::joules_per_meter)
        .def_readwrite("stop_cost_meters", &EnergyModel::stop_cost_meters)
        .def_readwrite("start_cost_meters", &EnergyModel::start_cost_meters);

    py::class_<ScenarioConfig>(m, "Scenario")
        .def_readonly("name", &ScenarioConfig::name)
        .def_readonly("field", &ScenarioConfig::field)
        .def_readonly("sensors", &ScenarioConfig::sensors)
        .def_readwrite("sim", &ScenarioConfig::sim)
        .def_readwrite("energy", &ScenarioConfig::energy)
        .def_readonly("seed", &ScenarioConfig::seed)
        .def_readonly("warnings", &ScenarioConfig::warnings)
        .def_property(
            "strategy", [](const ScenarioConfig& s) { return std::string(strategy_name(s.strategy)); },
            [](ScenarioConfig& s, const std::string& name) { s.strategy = parse_strategy(name); })
        .def("snapshot", &ScenarioConfig::snapshot);
    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("parse_scenario",
          [](const std::string& text) {
              nlohmann::json doc;
              try {
                  doc = nlohmann::json::parse(text);
              } catch (const nlohmann::json::parse_error& e) {
                  throw ValidationError("scenario", e.what());
              }
              return parse_scenario(doc);
          },
          py::arg("text"));
    m.def("with_seed", &with_seed, py::arg("scenario"), py::arg("seed"));
    m.def("with_sensor_count", &with_sensor_count, py::arg("scenario"), py::arg("sensor_count"));

    py::class_<RoundRecord>(m, "RoundRecord")
        .def_readonly("round_index", &RoundRecord::round_index)
        .def_readonly("positions", &RoundRecord::positions)
        .def_property_readonly("moved",
                               [](const RoundRecord& r) {
                                   std::vector<int> ids;
                                   for (const auto& mv : r.moves) ids.push_back(mv.sensor_id);
                                   return ids;
                               })
        .def_readonly("weighted_coverage", &RoundRecord::weighted_coverage)
        .def_readonly("coverage_factor", &RoundRecord::coverage_factor);

    py::class_<SimulationTrace>(m, "SimulationTrace")
        .def_readonly("sensors", &SimulationTrace::sensors)
        .def_readonly("strategy", &SimulationTrace::strategy)
        .def_readonly("rounds", &SimulationTrace::rounds)
        .def_readonly("total_rounds", &SimulationTrace::total_rounds)
        .def_property_readonly("terminated_by",
                               [](const SimulationTrace& t) {
                                   return t.terminated_by == Termination::NoMove ? "no-move" : "max-rounds";
                               })
        .def("snapshot_at", &SimulationTrace::snapshot_at);

    py::class_<SensorMetrics>(m, "SensorMetrics")
        .def_readonly("sensor_id", &SensorMetrics::sensor_id)
        .def_readonly("distance_m", &SensorMetrics::distance_m)
        .def_readonly("energy_J", &SensorMetrics::energy_J);
    py::class_<RunMetrics>(m, "RunMetrics")
        .def_readonly("coverage_initial", &RunMetrics::coverage_initial)
        .def_readonly("coverage_final", &RunMetrics::coverage_final)
        .def_readonly("stop_round", &RunMetrics::stop_round)
        .def_readonly("per_sensor", &RunMetrics::per_sensor)
        .def_readonly("mean_distance_m", &RunMetrics::mean_distance_m)
        .def_readonly("mean_energy_J", &RunMetrics::mean_energy_J);

    m.def("simulate", &simulate, py::arg("scenario"), py::call_guard<py::gil_scoped_release>());
    m.def("summarize", &summarize, py::arg("trace"), py::arg("energy") = EnergyModel{});
    m.def("energy_of", &energy_of, py::arg("trace"), py::arg("sensor_id"), py::arg("energy") = EnergyModel{});
    m.def("render_svg",
          [](const SimulationTrace& t, std::size_t first, std::size_t last) { return render_svg(t, first, last); },
          py::arg("trace"), py::arg("first"), py::arg("last"));

    py::class_<RunRecord>(m, "RunRecord")
        .def_readonly("run", &RunRecord::run)
        .def_readonly("strategy", &RunRecord::strategy)
        .def_readonly("seed", &RunRecord::seed)
        .def_readonly("n_sensors", &RunRecord::n_sensors)
        .def_readonly("coverage_initial", &RunRecord::coverage_initial)
        .def_readonly("coverage_final", &RunRecord::coverage_final)
        .def_readonly("stop_round", &RunRecord::stop_round)
        .def_readonly("mean_distance_m", &RunRecord::mean_distance_m)
        .def_readonly("mean_energy_J", &RunRecord::mean_energy_J)
        .def(py::self == py::self);
    m.def("run_suite", [](const std::filesystem::path& path) { return run_suite(load_suite(path)).runs; },
          py::arg("path"), py::call_guard<py::gil_scoped_release>());
    m.def("metrics_csv", &metrics_csv, py::arg("runs"));
    m.def("parse_metrics_csv", &parse_metrics_csv, py::arg("text"));
    m.attr("METRICS_CSV_HEADER") = kMetricsCsvHeader;
}
