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

#ifndef PQAOA_PHANTOM_H
#define PQAOA_PHANTOM_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqaoa/graph.h"

namespace pqaoa {

enum class PhantomMethod { kFull, kTriangle, kCycleThreeHop, kCustom };

std::string_view to_string(PhantomMethod method);
PhantomMethod parse_phantom_method(std::string_view name);

/// Neighbor and triangle counts around one base edge (u, v).
///
/// `d`, `e` count base neighbors of u and v other than each other; `d_p`, `e_p`
/// count phantom neighbors. Triangle counts split each common neighbor w of u and
/// v in the union graph by how many of its two connecting edges are base edges:
/// two (`f`), one (`f_mixed`), or none (`f_pp`).
struct EdgeEnvironment {
    int d = 0;
    int e = 0;
    int d_p = 0;
    int e_p = 0;
    int f = 0;
    int f_mixed = 0;
    int f_pp = 0;

    bool triangle_free() const {
        return f == 0 && f_mixed == 0 && f_pp == 0;
    }
    bool operator==(const EdgeEnvironment &) const = default;
};

/// A base graph together with the extra edges that only enter the phase operator.
/// The phantom weight is an evaluation-time parameter and is not stored here.
class PhantomGraph {
   public:
    PhantomGraph(Graph base, std::vector<Edge> phantom, PhantomMethod method = PhantomMethod::kCustom);

    const Graph &base() const {
        return base_;
    }
    std::span<const Edge> phantom_edges() const {
        return phantom_.edges();
    }
    /// Phantom edges as a graph on the same vertex set.
    const Graph &phantom_graph() const {
        return phantom_;
    }
    PhantomMethod method() const {
        return method_;
    }
    std::size_t num_vertices() const {
        return base_.num_vertices();
    }

    /// Environments for every base edge, in base().edges() order.
    std::span<const EdgeEnvironment> environments() const {
        return environments_;
    }

    /// Throws std::invalid_argument when `edge` is not a base edge.
    const EdgeEnvironment &environment(Edge edge) const;

   private:
    Graph base_;
    Graph phantom_;
    PhantomMethod method_;
    std::vector<EdgeEnvironment> environments_;
};

/// Phantom set = complement of g, so the union graph is complete.
PhantomGraph full_method(const Graph &g);

/// Phantom set = all pairs at graph distance exactly two.
PhantomGraph triangle_method(const Graph &g);

/// For a cycle graph, joins vertices three hops apart along the cycle. Rejects
/// inputs that are not a single cycle, cycles shorter than 7, and lengths where
/// the union graph would contain triangles (7 and 9).
PhantomGraph cycle_three_hop(const Graph &g);

PhantomGraph make_phantom_graph(const Graph &g, PhantomMethod method);

/// Environment by direct enumeration of all third vertices w.
EdgeEnvironment edge_environment(const PhantomGraph &pg, Edge edge);

}  // namespace pqaoa

#endif
