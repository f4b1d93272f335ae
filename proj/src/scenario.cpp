#include "mmacov/scenario.hpp"

#include <cmath>
#include <fstream>

namespace mmacov {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr int kMaxPlacementAttempts = 100000;

const json& require(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key)) throw ValidationError(path + key, "missing");
    return obj.at(key);
}

double number(const json& v, const std::string& path) {
    if (!v.is_number()) throw ValidationError(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ValidationError(path, "must be finite");
    return d;
}

double number_or(const json& obj, const std::string& key, double fallback, const std::string& path) {
    return obj.contains(key) ? number(obj.at(key), path + key) : fallback;
}

int integer_or(const json& obj, const std::string& key, int fallback, const std::string& path) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw ValidationError(path + key, "expected an integer");
    return v.get<int>();
}

Point2 point(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) throw ValidationError(path, "expected [x, y]");
    return {number(v[0], path + "[0]"), number(v[1], path + "[1]")};
}

RadiusRange radius_range(const json& v, const std::string& path) {
    if (v.is_number()) {
        const double r = number(v, path);
        return {r, r};
    }
    if (!v.is_array() || v.size() != 2) throw ValidationError(path, "expected a number or [lo, hi]");
    RadiusRange r{number(v[0], path + "[0]"), number(v[1], path + "[1]")};
    if (!(r.lo > 0.0) || r.hi < r.lo) throw ValidationError(path, "need 0 < lo <= hi");
    return r;
}

PrioritySpec parse_priority(const json& v) {
    const std::string path = "field.priority.";
    const auto type = require(v, "type", path).get<std::string>();
    if (type == "uniform") return UniformPriority{};
    if (type != "gaussian_sum") throw ValidationError(path + "type", "expected uniform|gaussian_sum");
    GaussianSumPriority g;
    const auto& terms = require(v, "terms", path);
    if (!terms.is_array()) throw ValidationError(path + "terms", "expected an array");
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string tp = path + "terms[" + std::to_string(k) + "].";
        g.terms.push_back({point(require(terms[k], "center_m", tp), tp + "center_m"),
                           number(require(terms[k], "alpha_per_m2", tp), tp + "alpha_per_m2"),
                           number_or(terms[k], "weight", 1.0, tp)});
    }
    return g;
}

std::shared_ptr<const FieldModel> parse_field(const json& v) {
    const std::string path = "field.";
    const double w = number(require(v, "width_m", path), path + "width_m");
    const double h = number(require(v, "height_m", path), path + "height_m");
    std::vector<PolygonObstacle> obstacles;
    if (v.contains("obstacles")) {
        const auto& arr = v.at("obstacles");
        if (!arr.is_array()) throw ValidationError(path + "obstacles", "expected an array");
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const std::string op = path + "obstacles[" + std::to_string(k) + "].";
            const std::string id = arr[k].contains("id") ? arr[k].at("id").get<std::string>() : "o" + std::to_string(k);
            const auto& verts = require(arr[k], "vertices_m", op);
            if (!verts.is_array()) throw ValidationError(op + "vertices_m", "expected an array");
            std::vector<Point2> pts;
            for (std::size_t i = 0; i < verts.size(); ++i) {
                pts.push_back(point(verts[i], op + "vertices_m[" + std::to_string(i) + "]"));
            }
            try {
                obstacles.emplace_back(id, std::move(pts));
            } catch (const std::invalid_argument& e) {
                throw ValidationError(op + "vertices_m", e.what());
            }
        }
    }
    PrioritySpec priority = v.contains("priority") ? parse_priority(v.at("priority")) : PrioritySpec{UniformPriority{}};
    return std::make_shared<const FieldModel>(w, h, std::move(obstacles), std::move(priority));
}

SensorGenerator parse_generator(const json& v) {
    const std::string path = "generator.";
    SensorGenerator g;
    if (v.contains("mobile_count") || v.contains("static_count")) {
        g.mobile_count = integer_or(v, "mobile_count", 0, path);
        g.static_count = integer_or(v, "static_count", 0, path);
    } else {
        const int n = integer_or(v, "sensor_count", -1, path);
        if (n < 0) throw ValidationError(path + "sensor_count", "missing");
        const double frac = number_or(v, "static_fraction", 0.0, path);
        if (frac < 0.0 || frac > 1.0) throw ValidationError(path + "static_fraction", "must be in [0, 1]");
        g.static_count = static_cast<int>(std::lround(n * frac));
        g.mobile_count = n - g.static_count;
    }
    if (g.mobile_count < 0 || g.static_count < 0) throw ValidationError(path + "mobile_count", "must be >= 0");
    if (v.contains("mobile_sensing_radius_m")) {
        g.mobile_sensing_radius = radius_range(v.at("mobile_sensing_radius_m"), path + "mobile_sensing_radius_m");
    }
    if (v.contains("static_sensing_radius_m")) {
        g.static_sensing_radius = radius_range(v.at("static_sensing_radius_m"), path + "static_sensing_radius_m");
    }
    if (v.contains("mobile_sensing_radii_m")) {
        for (const auto& r : v.at("mobile_sensing_radii_m")) {
            const double rr = number(r, path + "mobile_sensing_radii_m");
            if (!(rr > 0.0)) throw ValidationError(path + "mobile_sensing_radii_m", "radii must be > 0");
            g.mobile_sensing_radii.push_back(rr);
        }
        if (static_cast<int>(g.mobile_sensing_radii.size()) != g.mobile_count) {
            throw ValidationError(path + "mobile_sensing_radii_m", "length must equal the mobile count");
        }
    }
    g.comm_radius_factor = number_or(v, "comm_radius_factor", 4.0, path);
    if (!(g.comm_radius_factor > 0.0)) throw ValidationError(path + "comm_radius_factor", "must be > 0");
    if (v.contains("placement_region_m")) {
        const auto& pr = v.at("placement_region_m");
        if (!pr.is_array() || pr.size() != 2) throw ValidationError(path + "placement_region_m", "expected [[x0,y0],[x1,y1]]");
        const Point2 a = point(pr[0], path + "placement_region_m[0]");
        const Point2 b = point(pr[1], path + "placement_region_m[1]");
        if (!(b.x > a.x) || !(b.y > a.y)) throw ValidationError(path + "placement_region_m", "empty box");
        g.placement_region = BoundingBox{a.x, a.y, b.x, b.y};
    }
    return g;
}

std::vector<Sensor> parse_sensors(const json& v, double default_factor) {
    if (!v.is_array()) throw ValidationError("sensors", "expected an array");
    std::vector<Sensor> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        const std::string path = "sensors[" + std::to_string(k) + "].";
        const auto& e = v[k];
        Sensor s;
        s.id = integer_or(e, "id", static_cast<int>(k), path);
        const std::string kind = e.contains("kind") ? e.at("kind").get<std::string>() : "mobile";
        if (kind == "mobile") {
            s.kind = SensorKind::Mobile;
        } else if (kind == "static") {
            s.kind = SensorKind::Static;
        } else {
            throw ValidationError(path + "kind", "expected mobile|static");
        }
        s.position = point(require(e, "position_m", path), path + "position_m");
        s.sensing_radius = number(require(e, "sensing_radius_m", path), path + "sensing_radius_m");
        s.comm_radius = number_or(e, "comm_radius_m", default_factor * s.sensing_radius, path);
        out.push_back(s);
    }
    return out;
}

void parse_parameters(const json& v, SimConfig& sim) {
    const std::string path = "parameters.";
    auto& g = sim.gradient;
    g.resolution = number_or(v, "resolution_per_m", g.resolution, path);
    g.epsilon = number_or(v, "epsilon_m2", g.epsilon, path);
    g.n_perimeter = integer_or(v, "n_perimeter", g.n_perimeter, path);
    g.n_radial = integer_or(v, "n_radial", g.n_radial, path);
    g.step_tolerance = number_or(v, "step_tolerance_m", g.step_tolerance, path);
    g.max_line_search_evals = integer_or(v, "max_line_search_evals", g.max_line_search_evals, path);
    sim.max_rounds = integer_or(v, "max_rounds", sim.max_rounds, path);
    sim.baseline_resolution = number_or(v, "baseline_resolution_per_m", sim.baseline_resolution, path);
    sim.pcvf_gain = number_or(v, "pcvf_gain", sim.pcvf_gain, path);
}

void check_sensors(ScenarioConfig& cfg) {
    NetworkSnapshot snap = cfg.snapshot();
    validate_snapshot(snap);
    for (const auto& s : cfg.sensors) {
        for (const auto& poly : cfg.field->obstacles()) {
            if (on_polygon_boundary(s.position, poly)) {
                cfg.warnings.push_back("sensor " + std::to_string(s.id) + " starts on the boundary of obstacle '" +
                                       poly.id() + "'");
            }
        }
    }
}

}  // namespace

std::vector<Sensor> generate_sensors(const FieldModel& field, const SensorGenerator& gen, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const BoundingBox box = gen.placement_region.value_or(BoundingBox{0.0, 0.0, field.width(), field.height()});
    std::vector<Sensor> out;
    const int n = gen.mobile_count + gen.static_count;
    for (int k = 0; k < n; ++k) {
        Sensor s;
        s.id = k;
        s.kind = k < gen.mobile_count ? SensorKind::Mobile : SensorKind::Static;
        if (s.is_mobile() && !gen.mobile_sensing_radii.empty()) {
            s.sensing_radius = gen.mobile_sensing_radii[static_cast<std::size_t>(k)];
        } else {
            const RadiusRange r = s.is_mobile() ? gen.mobile_sensing_radius : gen.static_sensing_radius;
            s.sensing_radius = rng.uniform(r.lo, r.hi);
        }
        s.comm_radius = gen.comm_radius_factor * s.sensing_radius;
        int attempts = 0;
        do {
            if (++attempts > kMaxPlacementAttempts) {
                throw ValidationError("generator.placement_region_m", "no free space to place sensors");
            }
            s.position.x = rng.uniform(box.min_x, box.max_x);
            s.position.y = rng.uniform(box.min_y, box.max_y);
        } while (!field.in_free_space(s.position));
        out.push_back(s);
    }
    return out;
}

ScenarioConfig parse_scenario(const json& doc) {
    if (!doc.is_object()) throw ValidationError("scenario", "expected a JSON object");
    const auto& schema = require(doc, "schema", "");
    if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion) {
        throw ValidationError("schema", "unsupported schema version (expected 1)");
    }
    ScenarioConfig cfg;
    cfg.name = doc.value("name", std::string("scenario"));
    cfg.field = parse_field(require(doc, "field", ""));
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned()) throw ValidationError("seed", "expected a non-negative integer");
        cfg.seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("strategy")) cfg.strategy = parse_strategy(doc.at("strategy").get<std::string>());
    cfg.sim.static_blind = doc.value("static_blind", false);
    if (doc.contains("parameters")) parse_parameters(doc.at("parameters"), cfg.sim);
    cfg.sim.validate();
    if (doc.contains("energy")) {
        const auto& e = doc.at("energy");
        cfg.energy.joules_per_meter = number_or(e, "joules_per_m", cfg.energy.joules_per_meter, "energy.");
        cfg.energy.stop_cost_meters = number_or(e, "stop_cost_m", cfg.energy.stop_cost_meters, "energy.");
        cfg.energy.start_cost_meters = number_or(e, "start_cost_m", cfg.energy.start_cost_meters, "energy.");
        cfg.energy.validate();
    }
    const bool has_sensors = doc.contains("sensors");
    const bool has_generator = doc.contains("generator");
    if (has_sensors == has_generator) {
        throw ValidationError("sensors", "exactly one of 'sensors' or 'generator' is required");
    }
    if (has_generator) {
        cfg.generator = parse_generator(doc.at("generator"));
        cfg.sensors = generate_sensors(*cfg.field, *cfg.generator, cfg.seed);
    } else {
        cfg.sensors = parse_sensors(doc.at("sensors"), doc.value("comm_radius_factor", 4.0));
    }
    check_sensors(cfg);
    return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path.string(), "cannot open scenario file");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string(), std::string("parse error: ") + e.what());
    }
    try {
        return parse_scenario(doc);
    } catch (const json::exception& e) {
        throw ValidationError(path.string(), std::string("malformed value: ") + e.what());
    }
}

ScenarioConfig with_seed(const ScenarioConfig& base, std::uint64_t seed) {
    ScenarioConfig cfg = base;
    cfg.seed = seed;
    cfg.warnings.clear();
    if (cfg.generator) cfg.sensors = generate_sensors(*cfg.field, *cfg.generator, seed);
    check_sensors(cfg);
    return cfg;
}

ScenarioConfig with_sensor_count(const ScenarioConfig& base, int sensor_count) {
    if (!base.generator) throw ValidationError("sensor_counts", "requires a generator-based scenario");
    if (sensor_count < 1) throw ValidationError("sensor_counts", "must be >= 1");
    if (!base.generator->mobile_sensing_radii.empty()) {
        throw ValidationError("sensor_counts", "cannot resize a scenario with explicit mobile radii");
    }
    ScenarioConfig cfg = base;
    SensorGenerator& g = *cfg.generator;
    const int total = g.mobile_count + g.static_count;
    const double frac = total > 0 ? static_cast<double>(g.static_count) / total : 0.0;
    g.static_count = static_cast<int>(std::lround(sensor_count * frac));
    g.mobile_count = sensor_count - g.static_count;
    return with_seed(cfg, cfg.seed);
}

}  // namespace mmacov
