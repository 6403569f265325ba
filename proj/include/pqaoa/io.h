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

#ifndef PQAOA_IO_H
#define PQAOA_IO_H

#include <filesystem>
#include <string>

#include "json.hpp"
#include "pqaoa/optimize.h"
#include "pqaoa/phantom.h"
#include "pqaoa/simulator.h"

namespace pqaoa {

// Graph file:        {"n": int, "edges": [[u, v], ...]}          (u < v, sorted)
// Phantom graph file: {"n": int, "base_edges": [...], "phantom_edges": [...],
//                      "method": "full" | "triangle" | "cycle3" | "custom"}

nlohmann::json graph_to_json(const Graph &g);
/// Throws std::invalid_argument on malformed documents.
Graph graph_from_json(const nlohmann::json &doc);

nlohmann::json phantom_graph_to_json(const PhantomGraph &pg);
PhantomGraph phantom_graph_from_json(const nlohmann::json &doc);

/// Graph written with a trailing newline, compact edges.
void save_graph(const Graph &g, const std::filesystem::path &path);
Graph load_graph(const std::filesystem::path &path);

/// 17 significant digits, trailing zeros trimmed; round-trips exactly.
std::string format_double(double value);

/// Writes `contents` to a sibling temporary file, then renames it into place.
void write_file_atomic(const std::filesystem::path &path, const std::string &contents);
std::string read_file(const std::filesystem::path &path);

/// Sweep CSV:
///   alpha,best_value,approx_ratio,gamma_1..gamma_p,beta_1..beta_p,restart_index
/// Lines in `header_comments` are emitted first, each prefixed with "# ".
std::string sweep_csv(const AlphaSweepResult &sweep, double max_cut_value,
                      const std::vector<std::string> &header_comments = {});

/// Landscape CSV: gamma,beta,expectation in the grid's row-major order.
std::string landscape_csv(const LandscapeGrid &grid);

nlohmann::json sweep_to_json(const AlphaSweepResult &sweep);
AlphaSweepResult sweep_from_json(const nlohmann::json &doc);

}  // namespace pqaoa

#endif
