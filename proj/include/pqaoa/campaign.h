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
#ifndef PQAOA_CAMPAIGN_H
#define PQAOA_CAMPAIGN_H

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqaoa/graph.h"
#include "pqaoa/optimize.h"
#include "pqaoa/phantom.h"

namespace pqaoa {

struct ExperimentConfig {
    std::size_t n_min = 6;
    std::size_t n_max = 16;
    /// Degrees used for every n; empty means every feasible k in [2, n-1].
    std::vector<std::size_t> degrees;
    /// Per-n override of `degrees`.
    std::map<std::size_t, std::vector<std::size_t>> degrees_by_n;
    int graphs_per_cell = 10;
    /// Generator draws per (n, k) while looking for distinct graphs.
    int sample_attempts = 200;
    std::vector<PhantomMethod> methods{PhantomMethod::kFull, PhantomMethod::kTriangle};
    std::vector<std::size_t> depths{1, 2};
    double alpha_lo = 0.0;
    double alpha_hi = 0.5;
    double alpha_step = 0.05;
    OptBox box = OptBox::restricted();
    int restarts = 10;
    std::uint64_t seed = 0;
    /// Depth-1 objective source. Depth 2 always runs on the statevector.
    Backend depth_one_backend = Backend::kStatevector;
    /// Worker threads; not part of the config hash.
    unsigned threads = 1;

    /// Throws std::invalid_argument on empty ranges, bad steps, unsupported
    /// methods or depths, and parity-infeasible explicit degrees.
    void validate() const;
    std::vector<std::size_t> degrees_for(std::size_t n) const;
    std::vector<double> alpha_values() const;

    nlohmann::json to_json() const;
    /// Missing keys keep their defaults; unknown keys are rejected.
    static ExperimentConfig from_json(const nlohmann::json &doc);
    /// FNV-1a over the canonical JSON, excluding `threads`.
    std::uint64_t hash() const;
};

/// Up to `count` k-regular graphs on n vertices with distinct fingerprints,
/// drawn deterministically from `seed`.
std::vector<Graph> sample_distinct_regular(std::size_t n, std::size_t k, int count, int attempts, std::uint64_t seed);

struct CellKey {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t graph_id = 0;
    PhantomMethod method = PhantomMethod::kTriangle;
    std::size_t depth = 1;

    auto operator<=>(const CellKey &) const = default;
    std::string file_stem() const;
};

struct CellRecord {
    CellKey key;
    std::size_t max_cut = 0;
    AlphaSweepResult sweep;
    /// Ratio at alpha = 0 (NaN when 0 is off the grid).
    double ratio_standard = 0.0;
    double ratio_modified = 0.0;
    double alpha_max = 0.0;
    /// ratio_modified - ratio_standard.
    double improvement = 0.0;
};

struct AggregateRow {
    std::size_t n = 0;
    std::size_t k = 0;
    PhantomMethod method = PhantomMethod::kTriangle;
    std::size_t depth = 1;
    std::size_t graphs = 0;
    double mean_improvement = 0.0;
    double std_improvement = 0.0;
    double mean_alpha_max = 0.0;
    double std_alpha_max = 0.0;
    double mean_ratio_standard = 0.0;
    double std_ratio_standard = 0.0;
    double mean_ratio_modified = 0.0;
    double std_ratio_modified = 0.0;
};

struct CampaignResult {
    std::vector<CellRecord> cells;
    std::vector<AggregateRow> rows;
    /// Cells loaded from an earlier run rather than recomputed.
    std::size_t resumed_cells = 0;
};

/// Sequential fold over cells sorted by key; standard deviations are
/// population deviations.
std::vector<AggregateRow> aggregate(std::vector<CellRecord> cells);
std::string aggregate_csv(const std::vector<AggregateRow> &rows, const std::vector<std::string> &header_comments = {});

nlohmann::json cell_to_json(const CellRecord &cell);
CellRecord cell_from_json(const nlohmann::json &doc);

using ProgressFn = std::function<void(const std::string &)>;

/// Runs every (n, k, graph, method, depth) cell. With a non-empty `out_dir`,
/// each finished cell is written atomically to out_dir/cells, cells whose file
/// carries the same config hash are reused, and aggregate.csv plus the SVG
/// charts are written at the end.
CampaignResult run_campaign(const ExperimentConfig &config, const std::filesystem::path &out_dir = {},
                            const ProgressFn &progress = {});

}  // namespace pqaoa

#endif
