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

#ifndef PQAOA_GRAPH_H
#define PQAOA_GRAPH_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pqaoa {

using Vertex = std::uint32_t;

/// Raised when an input exceeds a configured size limit (qubit count, brute-force
/// enumeration width).
class CapacityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Unordered vertex pair stored canonically with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    static Edge make(Vertex a, Vertex b) {
        return a < b ? Edge{a, b} : Edge{b, a};
    }
    auto operator<=>(const Edge &) const = default;
    bool operator==(const Edge &) const = default;
};

/// Undirected simple graph. Immutable after construction; edges are kept sorted
/// lexicographically so iteration order is deterministic.
class Graph {
   public:
    Graph() = default;

    /// Validates and canonicalizes the edge list. Throws std::invalid_argument on
    /// self-loops, duplicate edges, endpoints >= n, or n == 0.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t num_vertices() const {
        return adjacency_.size();
    }
    std::size_t num_edges() const {
        return edges_.size();
    }
    std::span<const Edge> edges() const {
        return edges_;
    }
    std::span<const Vertex> neighbors(Vertex v) const {
        return adjacency_.at(v);
    }
    std::size_t degree(Vertex v) const {
        return adjacency_.at(v).size();
    }
    bool has_edge(Vertex a, Vertex b) const;

    /// Position of `e` in edges(), or -1 when absent.
    std::ptrdiff_t edge_index(Edge e) const;

    std::vector<std::size_t> degree_sequence() const;
    bool is_regular(std::size_t k) const;

    bool operator==(const Graph &other) const {
        return edges_ == other.edges_ && adjacency_.size() == other.adjacency_.size();
    }

   private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();
Graph heawood_graph();

/// Simple k-regular graph on n vertices, deterministic in `seed`.
///
/// Stubs are paired one at a time, drawing uniformly among pairs that keep the
/// graph simple, and the attempt restarts if it gets stuck. For k > n/2 the
/// complement of an (n-1-k)-regular sample is returned, which keeps dense degrees
/// cheap to sample.
Graph random_regular_graph(std::size_t n, std::size_t k, std::uint64_t seed);

/// G(n, p): every pair included independently with probability `prob`.
Graph erdos_renyi_graph(std::size_t n, double prob, std::uint64_t seed);

/// All pairs u < v that are not edges of g.
std::vector<Edge> complement_edges(const Graph &g);

/// Non-adjacent pairs that share at least one common neighbor.
std::vector<Edge> distance_two_pairs(const Graph &g);

/// Largest n accepted by max_cut.
inline constexpr std::size_t kDefaultMaxCutLimit = 26;

/// Exact Max-Cut by exhaustive enumeration with vertex 0 pinned to one side.
std::size_t max_cut(const Graph &g, std::size_t limit = kDefaultMaxCutLimit);

/// Relabeling-invariant summary used to reject likely-isomorphic samples.
/// Equal fingerprints mean "possibly isomorphic"; distinct ones prove the graphs
/// differ.
struct Fingerprint {
    std::vector<std::int64_t> data;
    std::uint64_t hash = 0;

    bool operator==(const Fingerprint &other) const {
        return hash == other.hash && data == other.data;
    }
};

Fingerprint isomorphism_fingerprint(const Graph &g);

/// Returns g with vertex v renamed to perm[v].
Graph relabel(const Graph &g, std::span<const Vertex> perm);

}  // namespace pqaoa

#endif
