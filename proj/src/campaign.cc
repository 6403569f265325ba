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
#include "pqaoa/campaign.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "parallel.h"
#include "pqaoa/io.h"
#include "pqaoa/random.h"
#include "pqaoa/svg.h"

namespace pqaoa {

using nlohmann::json;

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

bool feasible_degree(std::size_t n, std::size_t k) {
    return k >= 1 && k < n && (n * k) % 2 == 0;
}

std::string backend_name(Backend b) {
    return b == Backend::kAnalytic ? "analytic" : "statevector";
}

Backend parse_backend(const std::string &name) {
    if (name == "analytic") {
        return Backend::kAnalytic;
    }
    if (name == "statevector") {
        return Backend::kStatevector;
    }
    throw std::invalid_argument("unknown backend '" + name + "'");
}

double ratio_at(const AlphaRecord *record, std::size_t max_cut) {
    if (record == nullptr) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return record->best.value / double(max_cut);
}

void finish_cell(CellRecord &cell) {
    cell.ratio_standard = ratio_at(cell.sweep.at_alpha(0.0), cell.max_cut);
    cell.ratio_modified = ratio_at(&cell.sweep.alpha_max(), cell.max_cut);
    cell.alpha_max = cell.sweep.alpha_max().alpha;
    cell.improvement = cell.ratio_modified - cell.ratio_standard;
}

struct Moments {
    double mean = 0.0;
    double stddev = 0.0;
};

Moments moments(const std::vector<double> &xs) {
    Moments m;
    for (double x : xs) {
        m.mean += x;
    }
    m.mean /= double(xs.size());
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - m.mean) * (x - m.mean);
    }
    m.stddev = std::sqrt(ss / double(xs.size()));
    return m;
}

struct GraphTask {
    std::size_t n;
    std::size_t k;
    std::size_t graph_id;
    PhantomMethod method;
    const Graph *graph;
};

std::optional<CellRecord> load_cell(const std::filesystem::path &path, const CellKey &key, const std::string &hash) {
    if (!std::filesystem::exists(path)) {
        return std::nullopt;
    }
    try {
        const json doc = json::parse(read_file(path));
        if (doc.value("config_hash", std::string()) != hash) {
            return std::nullopt;
        }
        CellRecord cell = cell_from_json(doc);
        if (cell.key != key) {
            return std::nullopt;
        }
        return cell;
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

void write_charts(const std::vector<AggregateRow> &rows, const ExperimentConfig &config,
                  const std::filesystem::path &dir) {
    for (PhantomMethod method : config.methods) {
        const std::string mname(to_string(method));
        for (std::size_t n = config.n_min; n <= config.n_max; n++) {
            std::vector<std::string> series;
            for (std::size_t p : config.depths) {
                series.push_back("standard p=" + std::to_string(p));
                series.push_back("modified p=" + std::to_string(p));
            }
            std::vector<BarGroup> groups;
            for (std::size_t k : config.degrees_for(n)) {
                BarGroup group{"k=" + std::to_string(k), {}};
                bool any = false;
                for (std::size_t p : config.depths) {
                    double s = std::numeric_limits<double>::quiet_NaN();
                    double m = s;
                    for (const AggregateRow &r : rows) {
                        if (r.n == n && r.k == k && r.method == method && r.depth == p) {
                            s = r.mean_ratio_standard;
                            m = r.mean_ratio_modified;
                            any = true;
                        }
                    }
                    group.values.push_back(s);
                    group.values.push_back(m);
                }
                if (any) {
                    groups.push_back(std::move(group));
                }
            }
            if (groups.empty()) {
                continue;
            }
            write_file_atomic(dir / ("ratios_n" + std::to_string(n) + "_" + mname + ".svg"),
                              bar_chart_svg({"Mean approximation ratio, n=" + std::to_string(n) + ", " + mname,
                                             "degree", "approximation ratio"},
                                            series, groups));
        }
        for (std::size_t p : config.depths) {
            std::vector<LineSeries> improvement, alpha_max;
            for (std::size_t n = config.n_min; n <= config.n_max; n++) {
                LineSeries imp{"n=" + std::to_string(n), {}};
                LineSeries am{"n=" + std::to_string(n), {}};
                for (const AggregateRow &r : rows) {
                    if (r.n == n && r.method == method && r.depth == p) {
                        imp.points.emplace_back(double(r.k), r.mean_improvement);
                        am.points.emplace_back(double(r.k), r.mean_alpha_max);
                    }
                }
                if (!imp.points.empty()) {
                    improvement.push_back(std::move(imp));
                    alpha_max.push_back(std::move(am));
                }
            }
            if (improvement.empty()) {
                continue;
            }
            const std::string suffix = mname + "_p" + std::to_string(p);
            write_file_atomic(dir / ("improvement_" + suffix + ".svg"),
                              line_chart_svg({"Mean improvement, " + mname + ", p=" + std::to_string(p), "degree",
                                              "ratio(alpha_max) - ratio(0)"},
                                             improvement));
            write_file_atomic(dir / ("alpha_max_" + suffix + ".svg"),
                              line_chart_svg({"Mean alpha_max, " + mname + ", p=" + std::to_string(p), "degree",
                                              "alpha_max"},
                                             alpha_max));
        }
    }
}

}  // namespace

void ExperimentConfig::validate() const {
    if (n_min < 3 || n_min > n_max) {
        throw std::invalid_argument("node range needs 3 <= n_min <= n_max");
    }
    if (graphs_per_cell < 1 || sample_attempts < 1) {
        throw std::invalid_argument("graphs_per_cell and sample_attempts must be >= 1");
    }
    if (methods.empty()) {
        throw std::invalid_argument("at least one phantom method is required");
    }
    for (PhantomMethod m : methods) {
        if (m != PhantomMethod::kFull && m != PhantomMethod::kTriangle) {
            throw std::invalid_argument("campaign methods must be 'full' or 'triangle'");
        }
    }
    if (depths.empty()) {
        throw std::invalid_argument("at least one depth is required");
    }
    for (std::size_t p : depths) {
        if (p != 1 && p != 2) {
            throw std::invalid_argument("campaign depths must be 1 or 2");
        }
    }
    if (!(alpha_step > 0.0) || alpha_hi < alpha_lo) {
        throw std::invalid_argument("alpha range needs step > 0 and hi >= lo");
    }
    box.validate();
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be >= 1");
    }
    for (const auto &[n, ks] : degrees_by_n) {
        for (std::size_t k : ks) {
            if (!feasible_degree(n, k)) {
                throw std::invalid_argument("no " + std::to_string(k) + "-regular graph on " + std::to_string(n) +
                                            " vertices");
            }
        }
    }
    bool any = false;
    for (std::size_t n = n_min; n <= n_max; n++) {
        any = any || !degrees_for(n).empty();
    }
    if (!any) {
        throw std::invalid_argument("no feasible (n, k) pair in the configuration");
    }
}

std::vector<std::size_t> ExperimentConfig::degrees_for(std::size_t n) const {
    if (auto it = degrees_by_n.find(n); it != degrees_by_n.end()) {
        std::set<std::size_t> ks(it->second.begin(), it->second.end());
        return {ks.begin(), ks.end()};
    }
    std::set<std::size_t> ks;
    if (degrees.empty()) {
        for (std::size_t k = 2; k < n; k++) {
            if (feasible_degree(n, k)) {
                ks.insert(k);
            }
        }
    } else {
        for (std::size_t k : degrees) {
            if (feasible_degree(n, k)) {
                ks.insert(k);
            }
        }
    }
    return {ks.begin(), ks.end()};
}

std::vector<double> ExperimentConfig::alpha_values() const {
    return alpha_grid(alpha_lo, alpha_hi, alpha_step);
}

json ExperimentConfig::to_json() const {
    json by_n = json::object();
    for (const auto &[n, ks] : degrees_by_n) {
        by_n[std::to_string(n)] = ks;
    }
    json method_names = json::array();
    for (PhantomMethod m : methods) {
        method_names.push_back(std::string(to_string(m)));
    }
    return json{{"n_min", n_min},
                {"n_max", n_max},
                {"degrees", degrees},
                {"degrees_by_n", by_n},
                {"graphs_per_cell", graphs_per_cell},
                {"sample_attempts", sample_attempts},
                {"methods", method_names},
                {"depths", depths},
                {"alpha", {{"lo", alpha_lo}, {"hi", alpha_hi}, {"step", alpha_step}}},
                {"box", {{"gamma", {box.gamma_lo, box.gamma_hi}}, {"beta", {box.beta_lo, box.beta_hi}}}},
                {"restarts", restarts},
                {"seed", seed},
                {"depth_one_backend", backend_name(depth_one_backend)},
                {"threads", threads}};
}

ExperimentConfig ExperimentConfig::from_json(const json &doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("experiment config must be a JSON object");
    }
    static const std::set<std::string> known{"n_min",   "n_max",  "degrees",  "degrees_by_n", "graphs_per_cell",
                                             "sample_attempts", "methods", "depths", "alpha", "box",
                                             "restarts", "seed",  "depth_one_backend", "threads"};
    for (const auto &item : doc.items()) {
        if (!known.count(item.key())) {
            throw std::invalid_argument("unknown config key '" + item.key() + "'");
        }
    }
    ExperimentConfig c;
    try {
        c.n_min = doc.value("n_min", c.n_min);
        c.n_max = doc.value("n_max", c.n_max);
        c.degrees = doc.value("degrees", c.degrees);
        if (doc.contains("degrees_by_n")) {
            for (const auto &item : doc["degrees_by_n"].items()) {
                c.degrees_by_n[std::stoul(item.key())] = item.value().get<std::vector<std::size_t>>();
            }
        }
        c.graphs_per_cell = doc.value("graphs_per_cell", c.graphs_per_cell);
        c.sample_attempts = doc.value("sample_attempts", c.sample_attempts);
        if (doc.contains("methods")) {
            c.methods.clear();
            for (const json &m : doc["methods"]) {
                c.methods.push_back(parse_phantom_method(m.get<std::string>()));
            }
        }
        c.depths = doc.value("depths", c.depths);
        if (doc.contains("alpha")) {
            const json &a = doc["alpha"];
            c.alpha_lo = a.value("lo", c.alpha_lo);
            c.alpha_hi = a.value("hi", c.alpha_hi);
            c.alpha_step = a.value("step", c.alpha_step);
        }
        if (doc.contains("box")) {
            const json &b = doc["box"];
            if (b.contains("gamma")) {
                c.box.gamma_lo = b["gamma"].at(0).get<double>();
                c.box.gamma_hi = b["gamma"].at(1).get<double>();
            }
            if (b.contains("beta")) {
                c.box.beta_lo = b["beta"].at(0).get<double>();
                c.box.beta_hi = b["beta"].at(1).get<double>();
            }
        }
        c.restarts = doc.value("restarts", c.restarts);
        c.seed = doc.value("seed", c.seed);
        if (doc.contains("depth_one_backend")) {
            c.depth_one_backend = parse_backend(doc["depth_one_backend"].get<std::string>());
        }
        c.threads = doc.value("threads", c.threads);
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed experiment config: ") + e.what());
    }
    c.validate();
    return c;
}

std::uint64_t ExperimentConfig::hash() const {
    json doc = to_json();
    doc.erase("threads");
    const std::string text = doc.dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::vector<Graph> sample_distinct_regular(std::size_t n, std::size_t k, int count, int attempts, std::uint64_t seed) {
    std::vector<Graph> graphs;
    std::set<std::uint64_t> seen_hashes;
    std::vector<Fingerprint> seen;
    for (int a = 0; a < attempts && int(graphs.size()) < count; a++) {
        Graph g = random_regular_graph(n, k, derive_seed(seed, {std::uint64_t(a)}));
        Fingerprint fp = isomorphism_fingerprint(g);
        bool duplicate = false;
        if (seen_hashes.count(fp.hash)) {
            for (const Fingerprint &other : seen) {
                duplicate = duplicate || other.data == fp.data;
            }
        }
        if (!duplicate) {
            seen_hashes.insert(fp.hash);
            seen.push_back(std::move(fp));
            graphs.push_back(std::move(g));
        }
    }
    return graphs;
}

std::string CellKey::file_stem() const {
    return "n" + std::to_string(n) + "_k" + std::to_string(k) + "_g" + std::to_string(graph_id) + "_" +
           std::string(to_string(method)) + "_p" + std::to_string(depth);
}

std::vector<AggregateRow> aggregate(std::vector<CellRecord> cells) {
    auto group_order = [](const CellKey &k) { return std::tie(k.n, k.k, k.method, k.depth, k.graph_id); };
    std::sort(cells.begin(), cells.end(),
              [&](const CellRecord &a, const CellRecord &b) { return group_order(a.key) < group_order(b.key); });
    std::vector<AggregateRow> rows;
    std::size_t i = 0;
    while (i < cells.size()) {
        const CellKey &head = cells[i].key;
        std::vector<double> imp, am, rs, rm;
        std::size_t j = i;
        while (j < cells.size() && cells[j].key.n == head.n && cells[j].key.k == head.k &&
               cells[j].key.method == head.method && cells[j].key.depth == head.depth) {
            imp.push_back(cells[j].improvement);
            am.push_back(cells[j].alpha_max);
            rs.push_back(cells[j].ratio_standard);
            rm.push_back(cells[j].ratio_modified);
            j++;
        }
        AggregateRow row;
        row.n = head.n;
        row.k = head.k;
        row.method = head.method;
        row.depth = head.depth;
        row.graphs = j - i;
        const Moments mi = moments(imp), ma = moments(am), ms = moments(rs), mm = moments(rm);
        row.mean_improvement = mi.mean;
        row.std_improvement = mi.stddev;
        row.mean_alpha_max = ma.mean;
        row.std_alpha_max = ma.stddev;
        row.mean_ratio_standard = ms.mean;
        row.std_ratio_standard = ms.stddev;
        row.mean_ratio_modified = mm.mean;
        row.std_ratio_modified = mm.stddev;
        rows.push_back(row);
        i = j;
    }
    return rows;
}

std::string aggregate_csv(const std::vector<AggregateRow> &rows, const std::vector<std::string> &header_comments) {
    std::ostringstream out;
    for (const std::string &line : header_comments) {
        out << "# " << line << "\n";
    }
    out << "n,k,method,p,graphs,mean_improvement,std_improvement,mean_alpha_max,std_alpha_max,"
           "mean_ratio_standard,std_ratio_standard,mean_ratio_modified,std_ratio_modified\n";
    for (const AggregateRow &r : rows) {
        out << r.n << "," << r.k << "," << to_string(r.method) << "," << r.depth << "," << r.graphs << ","
            << format_double(r.mean_improvement) << "," << format_double(r.std_improvement) << ","
            << format_double(r.mean_alpha_max) << "," << format_double(r.std_alpha_max) << ","
            << format_double(r.mean_ratio_standard) << "," << format_double(r.std_ratio_standard) << ","
            << format_double(r.mean_ratio_modified) << "," << format_double(r.std_ratio_modified) << "\n";
    }
    return out.str();
}

json cell_to_json(const CellRecord &cell) {
    return json{{"n", cell.key.n},
                {"k", cell.key.k},
                {"graph_id", cell.key.graph_id},
                {"method", std::string(to_string(cell.key.method))},
                {"p", cell.key.depth},
                {"max_cut", cell.max_cut},
                {"sweep", sweep_to_json(cell.sweep)}};
}

CellRecord cell_from_json(const json &doc) {
    CellRecord cell;
    cell.key.n = doc.at("n").get<std::size_t>();
    cell.key.k = doc.at("k").get<std::size_t>();
    cell.key.graph_id = doc.at("graph_id").get<std::size_t>();
    cell.key.method = parse_phantom_method(doc.at("method").get<std::string>());
    cell.key.depth = doc.at("p").get<std::size_t>();
    cell.max_cut = doc.at("max_cut").get<std::size_t>();
    cell.sweep = sweep_from_json(doc.at("sweep"));
    if (cell.sweep.records.empty() || cell.max_cut == 0) {
        throw std::invalid_argument("cell record has no sweep data");
    }
    finish_cell(cell);
    return cell;
}

CampaignResult run_campaign(const ExperimentConfig &config, const std::filesystem::path &out_dir,
                            const ProgressFn &progress) {
    config.validate();
    const std::vector<double> grid = config.alpha_values();
    const std::string hash = hex64(config.hash());
    const bool persist = !out_dir.empty();
    const std::filesystem::path cell_dir = out_dir / "cells";
    if (persist) {
        std::filesystem::create_directories(cell_dir);
        write_file_atomic(out_dir / "config.json", config.to_json().dump(2) + "\n");
    }

    std::vector<std::vector<Graph>> samples;
    std::vector<GraphTask> tasks;
    for (std::size_t n = config.n_min; n <= config.n_max; n++) {
        for (std::size_t k : config.degrees_for(n)) {
            samples.push_back(sample_distinct_regular(n, k, config.graphs_per_cell, config.sample_attempts,
                                                      derive_seed(config.seed, {n, k})));
        }
    }
    std::size_t s = 0;
    for (std::size_t n = config.n_min; n <= config.n_max; n++) {
        for (std::size_t k : config.degrees_for(n)) {
            for (std::size_t g = 0; g < samples[s].size(); g++) {
                for (PhantomMethod m : config.methods) {
                    tasks.push_back({n, k, g, m, &samples[s][g]});
                }
            }
            s++;
        }
    }

    const bool want_one = std::count(config.depths.begin(), config.depths.end(), 1U) > 0;
    const bool want_two = std::count(config.depths.begin(), config.depths.end(), 2U) > 0;
    std::vector<std::vector<CellRecord>> produced(tasks.size());
    std::vector<std::size_t> resumed(tasks.size(), 0);
    std::mutex log_mutex;
    auto log = [&](const std::string &line) {
        if (progress) {
            std::lock_guard<std::mutex> lock(log_mutex);
            progress(line);
        }
    };

    detail::parallel_for(tasks.size(), config.threads, [&](std::size_t t) {
        const GraphTask &task = tasks[t];
        const PhantomGraph pg = make_phantom_graph(*task.graph, task.method);
        const std::size_t mc = max_cut(*task.graph);
        const std::uint64_t cell_seed = derive_seed(config.seed, {task.n, task.k, task.graph_id});

        auto run_depth = [&](std::size_t depth, const AlphaSweepResult *pool) {
            CellRecord cell;
            cell.key = {task.n, task.k, task.graph_id, task.method, depth};
            const std::filesystem::path json_path = cell_dir / (cell.key.file_stem() + ".json");
            if (persist) {
                if (auto loaded = load_cell(json_path, cell.key, hash)) {
                    resumed[t]++;
                    return *loaded;
                }
            }
            SweepOptions opts;
            opts.box = config.box;
            opts.restarts = config.restarts;
            opts.seed = cell_seed;
            opts.threads = 1;
            if (depth == 1) {
                opts.backend = config.depth_one_backend;
                cell.sweep = alpha_sweep(pg, 1, grid, opts);
            } else {
                cell.sweep = p2_second_pass(pg, grid, *pool, opts);
            }
            cell.max_cut = mc;
            finish_cell(cell);
            if (persist) {
                json doc = cell_to_json(cell);
                doc["config_hash"] = hash;
                doc["seed"] = cell_seed;
                doc["edges"] = graph_to_json(*task.graph)["edges"];
                write_file_atomic(json_path, doc.dump() + "\n");
                write_file_atomic(cell_dir / (cell.key.file_stem() + ".csv"),
                                  sweep_csv(cell.sweep, double(mc),
                                            {"config_hash=" + hash, "master_seed=" + std::to_string(config.seed),
                                             "cell_seed=" + std::to_string(cell_seed)}));
            }
            log(cell.key.file_stem() + " ratio(0)=" + format_double(cell.ratio_standard) +
                " ratio(alpha_max)=" + format_double(cell.ratio_modified));
            return cell;
        };

        CellRecord one = run_depth(1, nullptr);
        if (want_one) {
            produced[t].push_back(one);
        } else {
            resumed[t] = 0;
        }
        if (want_two) {
            produced[t].push_back(run_depth(2, &one.sweep));
        }
    });

    CampaignResult result;
    for (std::size_t t = 0; t < tasks.size(); t++) {
        result.resumed_cells += resumed[t];
        for (CellRecord &c : produced[t]) {
            result.cells.push_back(std::move(c));
        }
    }
    std::sort(result.cells.begin(), result.cells.end(),
              [](const CellRecord &a, const CellRecord &b) { return a.key < b.key; });
    result.rows = aggregate(result.cells);
    if (persist) {
        write_file_atomic(out_dir / "aggregate.csv",
                          aggregate_csv(result.rows, {"config_hash=" + hash, "master_seed=" + std::to_string(config.seed)}));
        write_charts(result.rows, config, out_dir);
    }
    return result;
}

}  // namespace pqaoa
