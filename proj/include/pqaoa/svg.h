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
#ifndef PQAOA_SVG_H
#define PQAOA_SVG_H

#include <string>
#include <utility>
#include <vector>

namespace pqaoa {

struct BarGroup {
    std::string label;
    /// One value per series; NaN leaves a gap.
    std::vector<double> values;
};

struct LineSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

struct ChartLabels {
    std::string title;
    std::string x_axis;
    std::string y_axis;
};

/// Grouped bar chart. The y range is fitted to the data with a small margin.
std::string bar_chart_svg(const ChartLabels &labels, const std::vector<std::string> &series_names,
                          const std::vector<BarGroup> &groups);

/// Line chart with markers, one polyline per series.
std::string line_chart_svg(const ChartLabels &labels, const std::vector<LineSeries> &series);

}  // namespace pqaoa

#endif
