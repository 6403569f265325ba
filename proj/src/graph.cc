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

#include "pqaoa/graph.h"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "pqaoa/random.h"

namespace pqaoa {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n) {
    if (n == 0) {
        throw std::invalid_argument("graph must have at least one vertex");
    }
    for (Edge &e : edges_) {
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        }
        e = Edge::make(e.u, e.v);
        if (e.v >= n) {
            throw std::invalid_argument("edge endpoint " + std::to_string(e.v) + " out of range");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("duplicate edge");
    }
    for (const Edge &e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto &nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a >= adjacency_.size() || b >= adjacency_.size()) {
        return false;
    }
    const auto &nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::ptrdiff_t Graph::edge_index(Edge e) const {
    e = Edge::make(e.u, e.v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) {
        return -1;
    }
    return it - edges_.begin();
}

std::vector<std::size_t> Graph::degree_sequence() const {
    std::vector<std::size_t> out;
    out.reserve(adjacency_.size());
    for (const auto &nbrs : adjacency_) {
        out.push_back(nbrs.size());
    }
    return out;
}

bool Graph::is_regular(std::size_t k) const {
    return std::all_of(adjacency_.begin(), adjacency_.end(), [k](const auto &nbrs) {
        return nbrs.size() == k;
    });
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("cycle graph needs n >= 3");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; i++) {
        edges.push_back(Edge::make(Vertex(i), Vertex((i + 1) % n)));
    }
    return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; u++) {
        for (Vertex v = u + 1; v < n; v++) {
            edges.push_back({u, v});
        }
    }
    return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; i++) {
        edges.push_back({i, i + 1});
    }
    return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; i++) {
        edges.push_back({0, i});
    }
    return Graph(leaves + 1, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; i++) {
        edges.push_back(Edge::make(i, (i + 1) % 5));          // outer cycle
        edges.push_back(Edge::make(i, i + 5));                // spokes
        edges.push_back(Edge::make(5 + i, 5 + (i + 2) % 5));  // inner pentagram
    }
    return Graph(10, std::move(edges));
}

Graph heawood_graph() {
    // LCF notation [5,-5]^7.
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 14; i++) {
        edges.push_back(Edge::make(i, (i + 1) % 14));
        if (i % 2 == 0) {
            edges.push_back(Edge::make(i, (i + 5) % 14));
        }
    }
    return Graph(14, std::move(edges));
}

namespace {

template <typename T>
void shuffle_in_place(std::vector<T> &items, Rng &rng) {
    for (std::size_t i = items.size(); i > 1; i--) {
        std::size_t j = uniform_below(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

// One pairing attempt; returns false when the leftover stubs cannot be matched.
bool try_pair_stubs(std::size_t n, std::size_t k, Rng &rng, std::set<Edge> &edges) {
    edges.clear();
    std::vector<Vertex> stubs;
    stubs.reserve(n * k);
    for (std::size_t r = 0; r < k; r++) {
        for (Vertex v = 0; v < n; v++) {
            stubs.push_back(v);
        }
    }
    while (!stubs.empty()) {
        std::map<Vertex, std::size_t> leftover;
        shuffle_in_place(stubs, rng);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            Vertex a = stubs[i];
            Vertex b = stubs[i + 1];
            if (a != b && !edges.contains(Edge::make(a, b))) {
                edges.insert(Edge::make(a, b));
            } else {
                leftover[a]++;
                leftover[b]++;
            }
        }
        bool suitable = leftover.empty();
        for (auto it = leftover.begin(); it != leftover.end() && !suitable; ++it) {
            for (auto jt = std::next(it); jt != leftover.end(); ++jt) {
                if (!edges.contains(Edge::make(it->first, jt->first))) {
                    suitable = true;
                    break;
                }
            }
        }
        if (!suitable) {
            return false;
        }
        stubs.clear();
        for (auto [v, count] : leftover) {
            stubs.insert(stubs.end(), count, v);
        }
    }
    return true;
}

Graph complement_of(const Graph &g) {
    return Graph(g.num_vertices(), complement_edges(g));
}

}  // namespace

Graph random_regular_graph(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n == 0 || k >= n) {
        throw std::invalid_argument("regular graph needs 0 <= k < n");
    }
    if ((n * k) % 2 != 0) {
        throw std::invalid_argument("no " + std::to_string(k) + "-regular graph on " + std::to_string(n) +
                                    " vertices: n*k is odd");
    }
    if (k > n / 2) {
        return complement_of(random_regular_graph(n, n - 1 - k, seed));
    }
    Rng rng(seed);
    std::set<Edge> edges;
    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; attempt++) {
        if (try_pair_stubs(n, k, rng, edges)) {
            return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
        }
    }
    throw std::runtime_error("random_regular_graph: pairing did not succeed");
}

Graph erdos_renyi_graph(std::size_t n, double prob, std::uint64_t seed) {
    if (!(prob >= 0.0 && prob <= 1.0)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; u++) {
        for (Vertex v = u + 1; v < n; v++) {
            if (uniform_unit(rng) < prob) {
                edges.push_back({u, v});
            }
        }
    }
    return Graph(n, std::move(edges));
}

std::vector<Edge> complement_edges(const Graph &g) {
    std::vector<Edge> out;
    const auto n = Vertex(g.num_vertices());
    for (Vertex u = 0; u < n; u++) {
        for (Vertex v = u + 1; v < n; v++) {
            if (!g.has_edge(u, v)) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

std::vector<Edge> distance_two_pairs(const Graph &g) {
    std::set<Edge> pairs;
    const auto n = Vertex(g.num_vertices());
    for (Vertex w = 0; w < n; w++) {
        auto nbrs = g.neighbors(w);
        for (std::size_t i = 0; i < nbrs.size(); i++) {
            for (std::size_t j = i + 1; j < nbrs.size(); j++) {
                if (!g.has_edge(nbrs[i], nbrs[j])) {
                    pairs.insert(Edge::make(nbrs[i], nbrs[j]));
                }
            }
        }
    }
    return {pairs.begin(), pairs.end()};
}

std::size_t max_cut(const Graph &g, std::size_t limit) {
    const std::size_t n = g.num_vertices();
    if (n > limit) {
        throw CapacityError("max_cut: " + std::to_string(n) + " vertices exceeds enumeration limit " +
                            std::to_string(limit));
    }
    if (n > 63) {
        throw CapacityError("max_cut: enumeration limit cannot exceed 63 vertices");
    }
    // Gray-code walk over the sides of vertices 1..n-1; each step flips one vertex
    // and updates the cut incrementally.
    std::vector<std::uint8_t> side(n, 0);
    std::int64_t cut = 0;
    std::int64_t best = 0;
    const std::uint64_t steps = n > 1 ? (std::uint64_t{1} << (n - 1)) : 1;
    for (std::uint64_t t = 1; t < steps; t++) {
        Vertex v = Vertex(std::countr_zero(t) + 1);
        for (Vertex w : g.neighbors(v)) {
            cut += side[w] == side[v] ? 1 : -1;
        }
        side[v] ^= 1;
        best = std::max(best, cut);
    }
    return std::size_t(best);
}

Fingerprint isomorphism_fingerprint(const Graph &g) {
    const std::size_t n = g.num_vertices();
    Fingerprint fp;
    fp.data.push_back(std::int64_t(n));
    fp.data.push_back(std::int64_t(g.num_edges()));

    auto degrees = g.degree_sequence();
    std::sort(degrees.begin(), degrees.end());
    fp.data.insert(fp.data.end(), degrees.begin(), degrees.end());

    std::vector<std::int64_t> triangles(n, 0);
    for (const Edge &e : g.edges()) {
        for (Vertex w : g.neighbors(e.u)) {
            if (w > e.v && g.has_edge(e.v, w)) {
                triangles[e.u]++;
                triangles[e.v]++;
                triangles[w]++;
            }
        }
    }
    std::sort(triangles.begin(), triangles.end());
    fp.data.insert(fp.data.end(), triangles.begin(), triangles.end());

    Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(Eigen::Index(n), Eigen::Index(n));
    for (const Edge &e : g.edges()) {
        adj(e.u, e.v) = 1.0;
        adj(e.v, e.u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); i++) {
        fp.data.push_back(std::llround(solver.eigenvalues()[i] * 1e8));
    }

    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (std::int64_t x : fp.data) {
        h = (h ^ std::uint64_t(x)) * 0x100000001B3ULL;
    }
    fp.hash = h;
    return fp;
}

Graph relabel(const Graph &g, std::span<const Vertex> perm) {
    if (perm.size() != g.num_vertices()) {
        throw std::invalid_argument("relabel: permutation size mismatch");
    }
    std::vector<Edge> edges;
    for (const Edge &e : g.edges()) {
        edges.push_back(Edge::make(perm[e.u], perm[e.v]));
    }
    return Graph(g.num_vertices(), std::move(edges));
}

}  // namespace pqaoa
