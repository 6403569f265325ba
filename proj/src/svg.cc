// Copyright 2026 The pqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "pqaoa/svg.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pqaoa {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

const char *const kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
                                "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};

const char *color(std::size_t i) {
    return kPalette[i % std::size(kPalette)];
}

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void finish(bool pad) {
        if (!std::isfinite(lo)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo < 1e-12) {
            lo -= 0.5;
            hi += 0.5;
        } else if (pad) {
            const double m = 0.05 * (hi - lo);
            lo -= m;
            hi += m;
        }
    }
    double map(double v, double out_lo, double out_hi) const {
        return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
    }
};

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(4);
    ss << v;
    return ss.str();
}

void open_chart(std::ostringstream &out, const ChartLabels &labels) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << (kLeft + (kWidth - kLeft - kRight) / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
        << escape(labels.title) << "</text>\n";
    out << "<text x=\"" << (kLeft + (kWidth - kLeft - kRight) / 2) << "\" y=\"" << (kHeight - 15)
        << "\" text-anchor=\"middle\">" << escape(labels.x_axis) << "</text>\n";
    out << "<text transform=\"translate(18," << (kTop + (kHeight - kTop - kBottom) / 2)
        << ") rotate(-90)\" text-anchor=\"middle\">" << escape(labels.y_axis) << "</text>\n";
}

void y_axis(std::ostringstream &out, const Range &y) {
    const double x0 = kLeft;
    const double y0 = kHeight - kBottom;
    out << "<line x1=\"" << x0 << "\" y1=\"" << kTop << "\" x2=\"" << x0 << "\" y2=\"" << y0 << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << (kWidth - kRight) << "\" y2=\"" << y0
        << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 5; t++) {
        const double v = y.lo + (y.hi - y.lo) * t / 5.0;
        const double py = y.map(v, y0, kTop);
        out << "<line x1=\"" << (x0 - 4) << "\" y1=\"" << py << "\" x2=\"" << x0 << "\" y2=\"" << py
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << (x0 - 7) << "\" y=\"" << (py + 4) << "\" text-anchor=\"end\">" << fmt(v) << "</text>\n";
    }
}

void legend(std::ostringstream &out, const std::vector<std::string> &names) {
    const double x = kWidth - kRight + 15;
    for (std::size_t i = 0; i < names.size(); i++) {
        const double y = kTop + 10 + 20.0 * double(i);
        out << "<rect x=\"" << x << "\" y=\"" << (y - 9) << "\" width=\"12\" height=\"12\" fill=\"" << color(i)
            << "\"/>\n";
        out << "<text x=\"" << (x + 18) << "\" y=\"" << (y + 1) << "\">" << escape(names[i]) << "</text>\n";
    }
}

}  // namespace

std::string bar_chart_svg(const ChartLabels &labels, const std::vector<std::string> &series_names,
                          const std::vector<BarGroup> &groups) {
    Range y;
    for (const BarGroup &g : groups) {
        for (double v : g.values) {
            y.add(v);
        }
    }
    y.finish(true);
    std::ostringstream out;
    open_chart(out, labels);
    y_axis(out, y);
    const double y0 = kHeight - kBottom;
    const double plot_w = kWidth - kLeft - kRight;
    const double group_w = groups.empty() ? plot_w : plot_w / double(groups.size());
    const double bar_w = 0.8 * group_w / double(std::max<std::size_t>(1, series_names.size()));
    for (std::size_t gi = 0; gi < groups.size(); gi++) {
        const double gx = kLeft + group_w * double(gi) + 0.1 * group_w;
        for (std::size_t si = 0; si < groups[gi].values.size(); si++) {
            const double v = groups[gi].values[si];
            if (!std::isfinite(v)) {
                continue;
            }
            const double top = y.map(v, y0, kTop);
            out << "<rect x=\"" << (gx + bar_w * double(si)) << "\" y=\"" << top << "\" width=\"" << bar_w
                << "\" height=\"" << (y0 - top) << "\" fill=\"" << color(si) << "\"><title>" << fmt(v)
                << "</title></rect>\n";
        }
        out << "<text x=\"" << (kLeft + group_w * (double(gi) + 0.5)) << "\" y=\"" << (y0 + 18)
            << "\" text-anchor=\"middle\">" << escape(groups[gi].label) << "</text>\n";
    }
    legend(out, series_names);
    out << "</svg>\n";
    return out.str();
}

std::string line_chart_svg(const ChartLabels &labels, const std::vector<LineSeries> &series) {
    Range x, y;
    for (const LineSeries &s : series) {
        for (const auto &[px, py] : s.points) {
            x.add(px);
            y.add(py);
        }
    }
    x.finish(false);
    y.finish(true);
    std::ostringstream out;
    open_chart(out, labels);
    y_axis(out, y);
    const double y0 = kHeight - kBottom;
    const double x_lo = kLeft + 20;
    const double x_hi = kWidth - kRight - 20;
    std::vector<double> ticks;
    for (const LineSeries &s : series) {
        for (const auto &p : s.points) {
            ticks.push_back(p.first);
        }
    }
    std::sort(ticks.begin(), ticks.end());
    ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
    for (double t : ticks) {
        const double px = x.map(t, x_lo, x_hi);
        out << "<text x=\"" << px << "\" y=\"" << (y0 + 18) << "\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
    }
    std::vector<std::string> names;
    for (std::size_t si = 0; si < series.size(); si++) {
        names.push_back(series[si].name);
        std::ostringstream pts;
        for (const auto &[px, py] : series[si].points) {
            if (std::isfinite(py)) {
                pts << x.map(px, x_lo, x_hi) << "," << y.map(py, y0, kTop) << " ";
            }
        }
        out << "<polyline fill=\"none\" stroke=\"" << color(si) << "\" stroke-width=\"2\" points=\"" << pts.str()
            << "\"/>\n";
        for (const auto &[px, py] : series[si].points) {
            if (std::isfinite(py)) {
                out << "<circle cx=\"" << x.map(px, x_lo, x_hi) << "\" cy=\"" << y.map(py, y0, kTop)
                    << "\" r=\"3\" fill=\"" << color(si) << "\"/>\n";
            }
        }
    }
    legend(out, names);
    out << "</svg>\n";
    return out.str();
}

}  // namespace pqaoa
