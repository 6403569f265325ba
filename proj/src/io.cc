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

#include "pqaoa/io.h"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pqaoa {

using nlohmann::json;

namespace {

json edges_to_json(std::span<const Edge> edges) {
    json out = json::array();
    for (const Edge &e : edges) {
        out.push_back({e.u, e.v});
    }
    return out;
}

std::vector<Edge> edges_from_json(const json &doc, const char *key) {
    if (!doc.contains(key) || !doc[key].is_array()) {
        throw std::invalid_argument(std::string("missing array field '") + key + "'");
    }
    std::vector<Edge> edges;
    for (const json &pair : doc[key]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
            throw std::invalid_argument(std::string("'") + key + "' entries must be [u, v] pairs of vertex indices");
        }
        edges.push_back(Edge::make(pair[0].get<Vertex>(), pair[1].get<Vertex>()));
    }
    return edges;
}

std::size_t vertex_count(const json &doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) {
        throw std::invalid_argument("graph document needs a non-negative integer field 'n'");
    }
    return doc["n"].get<std::size_t>();
}

}  // namespace

json graph_to_json(const Graph &g) {
    return json{{"n", g.num_vertices()}, {"edges", edges_to_json(g.edges())}};
}

Graph graph_from_json(const json &doc) {
    return Graph(vertex_count(doc), edges_from_json(doc, "edges"));
}

json phantom_graph_to_json(const PhantomGraph &pg) {
    return json{{"n", pg.num_vertices()},
                {"base_edges", edges_to_json(pg.base().edges())},
                {"phantom_edges", edges_to_json(pg.phantom_edges())},
                {"method", std::string(to_string(pg.method()))}};
}

PhantomGraph phantom_graph_from_json(const json &doc) {
    const std::size_t n = vertex_count(doc);
    PhantomMethod method = PhantomMethod::kCustom;
    if (doc.contains("method")) {
        method = parse_phantom_method(doc["method"].get<std::string>());
    }
    return PhantomGraph(Graph(n, edges_from_json(doc, "base_edges")), edges_from_json(doc, "phantom_edges"), method);
}

void save_graph(const Graph &g, const std::filesystem::path &path) {
    write_file_atomic(path, graph_to_json(g).dump() + "\n");
}

Graph load_graph(const std::filesystem::path &path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
    return graph_from_json(doc);
}

std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    if (ec != std::errc()) {
        throw std::runtime_error("format_double failed");
    }
    return std::string(buf, end);
}

void write_file_atomic(const std::filesystem::path &path, const std::string &contents) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << contents;
        if (!out.flush()) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sweep_csv(const AlphaSweepResult &sweep, double max_cut_value,
                      const std::vector<std::string> &header_comments) {
    std::ostringstream out;
    for (const std::string &line : header_comments) {
        out << "# " << line << "\n";
    }
    const std::size_t p = sweep.depth;
    out << "alpha,best_value,approx_ratio";
    for (std::size_t i = 1; i <= p; i++) {
        out << ",gamma_" << i;
    }
    for (std::size_t i = 1; i <= p; i++) {
        out << ",beta_" << i;
    }
    out << ",restart_index\n";
    for (const AlphaRecord &r : sweep.records) {
        out << format_double(r.alpha) << "," << format_double(r.best.value) << ","
            << format_double(r.best.value / max_cut_value);
        for (double g : r.best.params.gammas) {
            out << "," << format_double(g);
        }
        for (double b : r.best.params.betas) {
            out << "," << format_double(b);
        }
        out << "," << r.best.best_restart << "\n";
    }
    return out.str();
}

std::string landscape_csv(const LandscapeGrid &grid) {
    std::ostringstream out;
    out << "gamma,beta,expectation\n";
    for (std::size_t bi = 0; bi < grid.beta.count; bi++) {
        for (std::size_t gi = 0; gi < grid.gamma.count; gi++) {
            out << format_double(grid.gamma.at(gi)) << "," << format_double(grid.beta.at(bi)) << ","
                << format_double(grid.value(gi, bi)) << "\n";
        }
    }
    return out.str();
}

json sweep_to_json(const AlphaSweepResult &sweep) {
    json records = json::array();
    for (const AlphaRecord &r : sweep.records) {
        records.push_back({{"alpha", r.alpha},
                           {"value", r.best.value},
                           {"gammas", r.best.params.gammas},
                           {"betas", r.best.params.betas},
                           {"restarts_used", r.best.restarts_used},
                           {"best_restart", r.best.best_restart},
                           {"converged", r.best.converged}});
    }
    json out{{"depth", sweep.depth}, {"alpha_max_index", sweep.alpha_max_index}, {"records", records}};
    out["improvement"] = sweep.improvement ? json(*sweep.improvement) : json(nullptr);
    return out;
}

AlphaSweepResult sweep_from_json(const json &doc) {
    AlphaSweepResult sweep;
    sweep.depth = doc.at("depth").get<std::size_t>();
    sweep.alpha_max_index = doc.at("alpha_max_index").get<std::size_t>();
    for (const json &r : doc.at("records")) {
        AlphaRecord rec;
        rec.alpha = r.at("alpha").get<double>();
        rec.best.value = r.at("value").get<double>();
        rec.best.params.gammas = r.at("gammas").get<std::vector<double>>();
        rec.best.params.betas = r.at("betas").get<std::vector<double>>();
        rec.best.params.alpha = rec.alpha;
        rec.best.restarts_used = r.at("restarts_used").get<int>();
        rec.best.best_restart = r.at("best_restart").get<int>();
        rec.best.converged = r.at("converged").get<std::vector<bool>>();
        sweep.records.push_back(std::move(rec));
    }
    if (!doc.at("improvement").is_null()) {
        sweep.improvement = doc.at("improvement").get<double>();
    }
    return sweep;
}

}  // namespace pqaoa
