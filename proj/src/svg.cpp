#include "mmacov/svg.hpp"

#include <cstdio>
#include <stdexcept>
#include <sstream>

namespace mmacov {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_svg(const SimulationTrace& trace, std::size_t first, std::size_t last, const SvgOptions& options) {
    if (trace.rounds.empty()) throw std::invalid_argument("render_svg: empty trace");
    if (first > last || last >= trace.rounds.size()) throw std::out_of_range("render_svg: bad round range");
    const FieldModel& field = *trace.field;
    const double s = options.px_per_meter;
    const double height_px = field.height() * s;
    auto px = [&](const Point2& p) { return num(p.x * s) + "," + num(height_px - p.y * s); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(field.width() * s)
        << "\" height=\"" << num(height_px) << "\" viewBox=\"0 0 " << num(field.width() * s) << ' '
        << num(height_px) << "\">\n";
    out << "<rect class=\"field\" x=\"0\" y=\"0\" width=\"" << num(field.width() * s) << "\" height=\""
        << num(height_px) << "\" fill=\"white\" stroke=\"black\"/>\n";
    for (const auto& poly : field.obstacles()) {
        out << "<path class=\"obstacle\" d=\"M";
        for (std::size_t i = 0; i < poly.size(); ++i) out << (i ? " L" : "") << px(poly.vertex(i));
        out << " Z\" fill=\"#404040\"/>\n";
    }

    const RoundRecord& shown = trace.rounds[last];
    for (std::size_t k = 0; k < trace.sensors.size(); ++k) {
        const Sensor& sensor = trace.sensors[k];
        const Point2 p = shown.positions[k];
        if (sensor.is_mobile()) {
            out << "<circle class=\"disk mobile\" cx=\"" << num(p.x * s) << "\" cy=\"" << num(height_px - p.y * s)
                << "\" r=\"" << num(sensor.sensing_radius * s)
                << "\" fill=\"#4a90d9\" fill-opacity=\"0.35\" stroke=\"#1f5a99\"/>\n";
            out << "<circle class=\"center\" cx=\"" << num(p.x * s) << "\" cy=\"" << num(height_px - p.y * s)
                << "\" r=\"2.00\" fill=\"#1f5a99\"/>\n";
        } else {
            out << "<circle class=\"disk static\" cx=\"" << num(p.x * s) << "\" cy=\"" << num(height_px - p.y * s)
                << "\" r=\"" << num(sensor.sensing_radius * s)
                << "\" fill=\"#d95f4a\" fill-opacity=\"0.35\" stroke=\"#99301f\"/>\n";
        }
    }

    if (first < last) {
        for (std::size_t k = 0; k < trace.sensors.size(); ++k) {
            if (!trace.sensors[k].is_mobile()) continue;
            std::string points;
            std::size_t count = 0;
            Point2 prev{};
            for (std::size_t r = first; r <= last; ++r) {
                const Point2 p = trace.rounds[r].positions[k];
                if (count > 0 && p == prev) continue;
                points += (count ? " " : "") + px(p);
                prev = p;
                ++count;
            }
            if (count < 2) continue;
            out << "<polyline class=\"trajectory\" data-sensor=\"" << trace.sensors[k].id << "\" points=\"" << points
                << "\" fill=\"none\" stroke=\"#1f5a99\" stroke-width=\"1.5\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace mmacov
