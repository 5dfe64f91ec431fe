#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ivcalc/corpus.hpp"
#include "ivcalc/derivative.hpp"
#include "ivcalc/integral.hpp"
#include "ivcalc/verify.hpp"

namespace ivcalc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "ivcalc/1";

inline Json to_json(const Interval& a) { return Json::array({a.lo(), a.hi()}); }

inline Json to_json(const std::optional<Interval>& a) {
    return a ? to_json(*a) : Json(nullptr);
}

inline Json to_json(const LimitEstimate& est) {
    Json j;
    j["verdict"] = to_string(est.verdict);
    j["floor"] = est.floor; // non-finite serializes as null
    return j;
}

inline Json to_json(const DerivativeReport& rep) {
    Json j;
    j["t0"] = rep.t0;
    j["left"] = to_json(rep.left);
    j["right"] = to_json(rep.right);
    j["derivative"] = to_json(rep.derivative);
    j["gh_value"] = to_json(rep.gh_value);
    j["consistency"] = rep.consistency;
    Json variants;
    for (LimitVariant v :
         {LimitVariant::L1, LimitVariant::L2, LimitVariant::R1, LimitVariant::R2})
        variants[to_string(v)] = to_json(rep.variant(v));
    j["variants"] = variants;
    Json combos;
    for (int k = 1; k <= 4; ++k)
        combos["D" + std::to_string(k)] = rep.combo(k);
    j["combos"] = combos;
    j["classification"] = to_string(rep.classification);
    return j;
}

inline Json to_json(const QuadResult& r) {
    Json j;
    j["value"] = to_json(r.value);
    j["err"] = r.err;
    j["cells"] = r.cells;
    return j;
}

inline Json to_json(const SuiteReport& rep) {
    Json j;
    j["suite"] = rep.suite;
    j["cases"] = rep.cases;
    j["seed"] = rep.seed;
    j["all_pass"] = rep.all_pass;
    Json laws = Json::array();
    for (const auto& law : rep.laws) {
        Json l;
        l["name"] = law.name;
        l["passed"] = law.passed;
        l["failed"] = law.failed;
        l["counterexample"] = law.counterexample.empty() ? Json(nullptr) : Json(law.counterexample);
        laws.push_back(l);
    }
    j["laws"] = laws;
    return j;
}

inline Json corpus_listing() {
    Json entries = Json::array();
    for (const auto& e : corpus_entries()) {
        const IntervalFn fn = e.build();
        Json j;
        j["name"] = e.name;
        j["description"] = e.description;
        j["domain"] = Json::array({fn.dom_lo, fn.dom_hi});
        j["params"] = Json(e.defaults);
        j["analytic_derivatives"] = e.analytic;
        Json expected = Json::array();
        for (const auto& p : e.expected) {
            Json q;
            q["t"] = p.t;
            q["classification"] = to_string(p.classification);
            q["derivative"] = to_json(p.derivative);
            expected.push_back(q);
        }
        j["expected"] = expected;
        entries.push_back(j);
    }
    Json j;
    j["entries"] = entries;
    return j;
}

/// Residual traces in long form with the documented header.
inline std::string traces_to_csv(const DerivativeReport& rep) {
    std::ostringstream os;
    os << "h,residual,variant\n";
    char buf[96];
    for (LimitVariant v :
         {LimitVariant::L1, LimitVariant::L2, LimitVariant::R1, LimitVariant::R2}) {
        for (const auto& [h, r] : rep.variant(v).residuals) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%s\n", h, r, to_string(v));
            os << buf;
        }
    }
    return os.str();
}

/// Partition audit export: one row per node, with the tag of the cell the
/// node opens (blank on the closing node).
inline std::string partition_to_csv(const Partition& p) {
    std::ostringstream os;
    os << "node,tag\n";
    char buf[96];
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
        if (i < p.tags.size())
            std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.nodes[i], p.tags[i]);
        else
            std::snprintf(buf, sizeof buf, "%.17g,\n", p.nodes[i]);
        os << buf;
    }
    return os.str();
}

namespace detail {

struct PolyLine {
    std::vector<std::pair<double, double>> points;
    const char* color = "#1f6fb2";
    std::string label;
};

inline std::string svg_plot(const std::vector<PolyLine>& lines, const std::string& title,
                            const std::string& x_label, const std::string& y_label) {
    const int w = 640, h = 480, pad = 56;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& l : lines)
        for (const auto& [x, y] : l.points) {
            if (first) {
                xmin = xmax = x;
                ymin = ymax = y;
                first = false;
            }
            xmin = std::min(xmin, x); xmax = std::max(xmax, x);
            ymin = std::min(ymin, y); ymax = std::max(ymax, y);
        }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto px = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (w - 2 * pad); };
    auto py = [&](double y) { return h - pad - (y - ymin) / (ymax - ymin) * (h - 2 * pad); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title
       << "</text>\n"
       << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\""
       << h - pad << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << h - pad
       << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << w / 2 << "\" y=\"" << h - 16
       << "\" text-anchor=\"middle\" font-size=\"12\">" << x_label << "</text>\n"
       << "<text x=\"16\" y=\"" << h / 2 << "\" font-size=\"12\" transform=\"rotate(-90 16 "
       << h / 2 << ")\" text-anchor=\"middle\">" << y_label << "</text>\n";
    int label_y = pad;
    for (const auto& l : lines) {
        os << "<polyline fill=\"none\" stroke=\"" << l.color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : l.points)
            os << px(x) << "," << py(y) << " ";
        os << "\"/>\n";
        if (!l.label.empty()) {
            os << "<text x=\"" << w - pad - 4 << "\" y=\"" << label_y
               << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << l.color << "\">" << l.label
               << "</text>\n";
            label_y += 16;
        }
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace detail

/// log-log plot of the four residual traces.
inline std::string traces_to_svg(const DerivativeReport& rep, const std::string& title) {
    static const char* colors[4] = {"#1f6fb2", "#b23a1f", "#2e8b57", "#7a1fb2"};
    std::vector<detail::PolyLine> lines;
    int idx = 0;
    for (LimitVariant v :
         {LimitVariant::L1, LimitVariant::L2, LimitVariant::R1, LimitVariant::R2}) {
        detail::PolyLine line;
        line.color = colors[idx++];
        line.label = to_string(v);
        for (const auto& [h, r] : rep.variant(v).residuals)
            if (h > 0 && r > 0)
                line.points.emplace_back(std::log10(h), std::log10(r));
        if (!line.points.empty())
            lines.push_back(std::move(line));
    }
    return detail::svg_plot(lines, title, "log10 h", "log10 residual");
}

/// Endpoint curves of an interval function sampled on a uniform grid.
inline std::string endpoints_to_svg(const IntervalFn& f, int samples, const std::string& title) {
    detail::PolyLine lo, hi;
    lo.color = "#1f6fb2";
    lo.label = "lo";
    hi.color = "#b23a1f";
    hi.label = "hi";
    for (int i = 0; i < samples; ++i) {
        const double t = f.dom_lo + (f.dom_hi - f.dom_lo) * i / (samples - 1);
        const Interval v = f(t);
        lo.points.emplace_back(t, v.lo());
        hi.points.emplace_back(t, v.hi());
    }
    return detail::svg_plot({lo, hi}, title, "t", "endpoint");
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    out << content;
}

} // namespace ivcalc
