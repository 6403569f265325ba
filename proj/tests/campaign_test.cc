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
#include <gtest/gtest.h>

#include <filesystem>

#include "pqaoa/campaign.h"
#include "pqaoa/io.h"

namespace pqaoa {
namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string &name) {
    const auto dir = fs::temp_directory_path() / ("pqaoa_campaign_" + name);
    fs::remove_all(dir);
    return dir;
}

ExperimentConfig small_config() {
    ExperimentConfig c;
    c.n_min = 6;
    c.n_max = 7;
    c.degrees = {2, 3};
    c.graphs_per_cell = 2;
    c.depths = {1, 2};
    c.alpha_lo = 0.0;
    c.alpha_hi = 0.2;
    c.alpha_step = 0.1;
    c.restarts = 2;
    c.seed = 5;
    return c;
}

TEST(CampaignTest, DegreeSelection) {
    ExperimentConfig c;
    EXPECT_EQ(c.degrees_for(7), (std::vector<std::size_t>{2, 4, 6}));
    c.degrees = {3, 4, 12};
    EXPECT_EQ(c.degrees_for(7), (std::vector<std::size_t>{4}));
    c.degrees_by_n[16] = {12, 4, 8};
    EXPECT_EQ(c.degrees_for(16), (std::vector<std::size_t>{4, 8, 12}));
    c.degrees_by_n[9] = {3};
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(CampaignTest, ConfigJsonAndHash) {
    ExperimentConfig c = small_config();
    c.degrees_by_n[6] = {2};
    c.depth_one_backend = Backend::kAnalytic;
    const ExperimentConfig back = ExperimentConfig::from_json(c.to_json());
    EXPECT_EQ(back.to_json(), c.to_json());
    EXPECT_EQ(back.hash(), c.hash());
    ExperimentConfig threaded = c;
    threaded.threads = 8;
    EXPECT_EQ(threaded.hash(), c.hash());
    ExperimentConfig other = c;
    other.seed = 6;
    EXPECT_NE(other.hash(), c.hash());

    nlohmann::json doc = c.to_json();
    doc["bogus"] = 1;
    EXPECT_THROW(ExperimentConfig::from_json(doc), std::invalid_argument);
    doc = c.to_json();
    doc["methods"] = {"cycle3"};
    EXPECT_THROW(ExperimentConfig::from_json(doc), std::invalid_argument);
    doc = c.to_json();
    doc["depths"] = {3};
    EXPECT_THROW(ExperimentConfig::from_json(doc), std::invalid_argument);
    doc = c.to_json();
    doc["n_min"] = "six";
    EXPECT_THROW(ExperimentConfig::from_json(doc), std::invalid_argument);
    EXPECT_EQ(ExperimentConfig::from_json(nlohmann::json::object()).n_max, 16U);
}

TEST(CampaignTest, DistinctRegularSampling) {
    // Every 2-regular graph on 6 vertices is C6 or two triangles.
    const auto graphs = sample_distinct_regular(6, 2, 10, 200, 1);
    EXPECT_LE(graphs.size(), 2U);
    EXPECT_GE(graphs.size(), 1U);
    const auto many = sample_distinct_regular(10, 3, 5, 200, 1);
    EXPECT_EQ(many.size(), 5U);
    for (std::size_t i = 0; i < many.size(); i++) {
        EXPECT_TRUE(many[i].is_regular(3));
        for (std::size_t j = 0; j < i; j++) {
            EXPECT_FALSE(isomorphism_fingerprint(many[i]) == isomorphism_fingerprint(many[j]));
        }
    }
    EXPECT_EQ(sample_distinct_regular(10, 3, 5, 200, 1).front(), many.front());
}

TEST(CampaignTest, CellKeyStem) {
    EXPECT_EQ((CellKey{16, 4, 3, PhantomMethod::kTriangle, 2}.file_stem()), "n16_k4_g3_triangle_p2");
}

TEST(CampaignTest, RunWritesOutputsAndResumes) {
    const ExperimentConfig c = small_config();
    const fs::path dir = fresh_dir("run");
    const CampaignResult first = run_campaign(c, dir);
    EXPECT_EQ(first.resumed_cells, 0U);
    // One row per (n, k, method, p).
    std::size_t expected_rows = 0;
    for (std::size_t n = c.n_min; n <= c.n_max; n++) {
        expected_rows += c.degrees_for(n).size() * c.methods.size() * c.depths.size();
    }
    EXPECT_EQ(first.rows.size(), expected_rows);
    ASSERT_FALSE(first.cells.empty());
    for (const CellRecord &cell : first.cells) {
        EXPECT_NEAR(cell.improvement, cell.ratio_modified - cell.ratio_standard, 1e-15);
        EXPECT_GE(cell.improvement, 0.0);
        EXPECT_LE(cell.ratio_modified, 1.0 + 1e-12);
        EXPECT_TRUE(fs::exists(dir / "cells" / (cell.key.file_stem() + ".json")));
        EXPECT_TRUE(fs::exists(dir / "cells" / (cell.key.file_stem() + ".csv")));
    }
    // Same seed for both methods: the standard ratios coincide.
    for (const CellRecord &a : first.cells) {
        for (const CellRecord &b : first.cells) {
            if (a.key.n == b.key.n && a.key.k == b.key.k && a.key.graph_id == b.key.graph_id &&
                a.key.depth == b.key.depth) {
                EXPECT_NEAR(a.ratio_standard, b.ratio_standard, 1e-9);
            }
        }
    }
    EXPECT_TRUE(fs::exists(dir / "config.json"));
    EXPECT_TRUE(fs::exists(dir / "ratios_n6_triangle.svg"));
    EXPECT_TRUE(fs::exists(dir / "improvement_full_p1.svg"));
    EXPECT_TRUE(fs::exists(dir / "alpha_max_triangle_p2.svg"));
    const std::string aggregate_text = read_file(dir / "aggregate.csv");
    EXPECT_NE(aggregate_text.find("n,k,method,p,graphs,mean_improvement,std_improvement"), std::string::npos);

    const CampaignResult second = run_campaign(c, dir);
    EXPECT_EQ(second.resumed_cells, second.cells.size());
    EXPECT_EQ(read_file(dir / "aggregate.csv"), aggregate_text);

    ExperimentConfig threaded = c;
    threaded.threads = 3;
    const fs::path dir2 = fresh_dir("threaded");
    run_campaign(threaded, dir2);
    EXPECT_EQ(read_file(dir2 / "aggregate.csv"), aggregate_text);

    // Aggregating the stored cell files reproduces the rows.
    std::vector<CellRecord> reloaded;
    for (const auto &entry : fs::directory_iterator(dir / "cells")) {
        if (entry.path().extension() == ".json") {
            reloaded.push_back(cell_from_json(nlohmann::json::parse(read_file(entry.path()))));
        }
    }
    const auto rows = aggregate(reloaded);
    ASSERT_EQ(rows.size(), first.rows.size());
    for (std::size_t i = 0; i < rows.size(); i++) {
        EXPECT_EQ(rows[i].mean_improvement, first.rows[i].mean_improvement);
        EXPECT_EQ(rows[i].graphs, first.rows[i].graphs);
    }
}

TEST(CampaignTest, ChangedConfigRecomputes) {
    ExperimentConfig c = small_config();
    c.n_max = 6;
    c.depths = {1};
    const fs::path dir = fresh_dir("changed");
    run_campaign(c, dir);
    c.seed = 99;
    EXPECT_EQ(run_campaign(c, dir).resumed_cells, 0U);
}

TEST(CampaignTest, AggregateStatistics) {
    std::vector<CellRecord> cells(4);
    for (int i = 0; i < 4; i++) {
        cells[i].key = {8, 3, std::size_t(i / 2), PhantomMethod::kTriangle, std::size_t(1 + i % 2)};
        cells[i].improvement = 0.01 * (1 + 2 * (i / 2));
        cells[i].alpha_max = 0.1 * (i / 2);
    }
    const auto rows = aggregate(cells);
    ASSERT_EQ(rows.size(), 2U);
    EXPECT_EQ(rows[0].depth, 1U);
    EXPECT_EQ(rows[1].depth, 2U);
    EXPECT_EQ(rows[0].graphs, 2U);
    EXPECT_NEAR(rows[0].mean_improvement, 0.02, 1e-15);
    EXPECT_NEAR(rows[0].std_improvement, 0.01, 1e-15);
    EXPECT_NEAR(rows[0].mean_alpha_max, 0.05, 1e-15);
}

}  // namespace
}  // namespace pqaoa
