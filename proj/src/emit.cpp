#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "gssel/errors.hpp"
#include "gssel/harness.hpp"

namespace gssel {

namespace {

/// Shortest round-trip decimal form (std::to_chars), so emitted numbers are
/// identical for identical values regardless of locale or stream state.
std::string fmt(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt(std::int64_t v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string series_label(const std::string& algorithm, std::optional<double> epsilon) {
    if (epsilon.has_value()) {
        return algorithm + " eps=" + fmt(*epsilon);
    }
    return algorithm;
}

}  // namespace

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "threshold,algorithm,epsilon,mean_cost,std_cost,mean_runtime_us,"
        "n_feasible,n_skipped\n";
    for (const SweepRow& r : rows) {
        out += fmt(r.threshold);
        out += ',';
        out += r.algorithm;
        out += ',';
        if (r.epsilon.has_value()) out += fmt(*r.epsilon);
        out += ',';
        out += fmt(r.mean_cost);
        out += ',';
        out += fmt(r.std_cost);
        out += ',';
        out += fmt(r.mean_runtime_us);
        out += ',';
        out += fmt(r.n_feasible);
        out += ',';
        out += fmt(r.n_skipped);
        out += '\n';
    }
    return out;
}

nlohmann::json rows_to_json(const std::vector<SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRow& r : rows) {
        nlohmann::json o;
        o["threshold"] = r.threshold;
        o["algorithm"] = r.algorithm;
        if (r.epsilon.has_value()) {
            o["epsilon"] = *r.epsilon;
        } else {
            o["epsilon"] = nullptr;
        }
        o["mean_cost"] = r.mean_cost;
        o["std_cost"] = r.std_cost;
        o["mean_runtime_us"] = r.mean_runtime_us;
        o["n_feasible"] = r.n_feasible;
        o["n_skipped"] = r.n_skipped;
        arr.push_back(std::move(o));
    }
    return arr;
}

std::vector<SweepRow> rows_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw ParseError("$", "expected an array of sweep rows");
    }
    std::vector<SweepRow> rows;
    rows.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string path = "[" + std::to_string(i) + "]";
        const nlohmann::json& o = j[i];
        if (!o.is_object()) {
            throw ParseError(path, "expected a row object");
        }
        try {
            SweepRow r;
            r.threshold = o.at("threshold").get<double>();
            r.algorithm = o.at("algorithm").get<std::string>();
            if (o.contains("epsilon") && !o.at("epsilon").is_null()) {
                r.epsilon = o.at("epsilon").get<double>();
            }
            r.mean_cost = o.at("mean_cost").get<double>();
            r.std_cost = o.at("std_cost").get<double>();
            r.mean_runtime_us = o.at("mean_runtime_us").get<double>();
            r.n_feasible = o.at("n_feasible").get<std::int64_t>();
            r.n_skipped = o.at("n_skipped").get<std::int64_t>();
            rows.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path, e.what());
        }
    }
    return rows;
}

std::string rows_to_svg(const std::vector<SweepRow>& rows) {
    if (rows.empty()) {
        throw EmptyRows("cannot chart an empty row set");
    }

    struct Series {
        std::string label;
        std::vector<std::pair<double, double>> points;  // (log10 threshold, mean cost)
    };
    std::vector<Series> series;
    for (const SweepRow& r : rows) {
        if (r.n_feasible == 0) continue;  // no aggregate to plot
        const std::string label = series_label(r.algorithm, r.epsilon);
        auto it = std::find_if(series.begin(), series.end(),
                               [&](const Series& s) { return s.label == label; });
        if (it == series.end()) {
            series.push_back(Series{label, {}});
            it = series.end() - 1;
        }
        it->points.emplace_back(std::log10(r.threshold), r.mean_cost);
    }
    if (series.empty()) {
        throw EmptyRows("no feasible aggregates to chart");
    }

    double xlo = series[0].points[0].first, xhi = xlo;
    double yhi = 0.0;
    for (const Series& s : series) {
        for (const auto& [x, y] : s.points) {
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            yhi = std::max(yhi, y);
        }
    }
    if (xhi == xlo) {  // single threshold: widen so the point sits centred
        xlo -= 0.5;
        xhi += 0.5;
    }
    if (yhi <= 0.0) yhi = 1.0;
    yhi *= 1.05;

    // Plot rectangle inside the 760x480 canvas; the right band holds the legend.
    const double px0 = 70, px1 = 560, py0 = 30, py1 = 430;
    const auto sx = [&](double x) { return px0 + (x - xlo) / (xhi - xlo) * (px1 - px0); };
    const auto sy = [&](double y) { return py1 - y / yhi * (py1 - py0); };

    static const char* kPalette[8] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                      "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"760\" height=\"480\" "
           "viewBox=\"0 0 760 480\">\n";
    svg += "<rect width=\"760\" height=\"480\" fill=\"white\"/>\n";
    svg += "<rect x=\"" + fmt(px0) + "\" y=\"" + fmt(py0) + "\" width=\"" +
           fmt(px1 - px0) + "\" height=\"" + fmt(py1 - py0) +
           "\" fill=\"none\" stroke=\"#333333\"/>\n";

    // Decade ticks on the log-scaled threshold axis.
    for (double d = std::ceil(xlo); d <= std::floor(xhi) + 1e-9; d += 1.0) {
        const double x = sx(d);
        svg += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(py0) + "\" x2=\"" + fmt(x) +
               "\" y2=\"" + fmt(py1) + "\" stroke=\"#dddddd\"/>\n";
        svg += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(py1 + 18) +
               "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#333333\">" +
               xml_escape(fmt(std::pow(10.0, d))) + "</text>\n";
    }
    // Five horizontal guide lines for the cost axis.
    for (int i = 0; i <= 5; ++i) {
        const double v = yhi * i / 5.0;
        const double y = sy(v);
        svg += "<line x1=\"" + fmt(px0) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(px1) +
               "\" y2=\"" + fmt(y) + "\" stroke=\"#eeeeee\"/>\n";
        svg += "<text x=\"" + fmt(px0 - 8) + "\" y=\"" + fmt(y + 4) +
               "\" font-size=\"11\" text-anchor=\"end\" fill=\"#333333\">" +
               xml_escape(fmt(std::round(v * 100.0) / 100.0)) + "</text>\n";
    }
    svg += "<text x=\"" + fmt((px0 + px1) / 2) + "\" y=\"470\" font-size=\"12\" "
           "text-anchor=\"middle\" fill=\"#333333\">outage probability threshold</text>\n";
    svg += "<text x=\"16\" y=\"" + fmt((py0 + py1) / 2) + "\" font-size=\"12\" "
           "text-anchor=\"middle\" fill=\"#333333\" transform=\"rotate(-90 16 " +
           fmt((py0 + py1) / 2) + ")\">mean installation cost</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % 8];
        std::string pts;
        for (const auto& [x, y] : series[s].points) {
            pts += fmt(sx(x)) + "," + fmt(sy(y)) + " ";
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        for (const auto& [x, y] : series[s].points) {
            svg += "<circle cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) +
                   "\" r=\"2.5\" fill=\"" + std::string(color) + "\"/>\n";
        }
        const double ly = py0 + 14 + 18 * static_cast<double>(s);
        svg += "<line x1=\"580\" y1=\"" + fmt(ly - 4) + "\" x2=\"604\" y2=\"" +
               fmt(ly - 4) + "\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"610\" y=\"" + fmt(ly) +
               "\" font-size=\"11\" fill=\"#333333\">" + xml_escape(series[s].label) +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void emit_results(const std::vector<SweepRow>& rows, ResultFormat format,
                  const std::filesystem::path& path) {
    std::string content;
    switch (format) {
        case ResultFormat::Csv:
            content = rows_to_csv(rows);
            break;
        case ResultFormat::Json:
            content = rows_to_json(rows).dump(2) + "\n";
            break;
        case ResultFormat::Svg:
            content = rows_to_svg(rows);  // may throw EmptyRows before the file opens
            break;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

}  // namespace gssel
