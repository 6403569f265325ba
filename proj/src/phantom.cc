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

#include "pqaoa/phantom.h"

#include <algorithm>

namespace pqaoa {

std::string_view to_string(PhantomMethod method) {
    switch (method) {
        case PhantomMethod::kFull:
            return "full";
        case PhantomMethod::kTriangle:
            return "triangle";
        case PhantomMethod::kCycleThreeHop:
            return "cycle3";
        case PhantomMethod::kCustom:
            return "custom";
    }
    return "custom";
}

PhantomMethod parse_phantom_method(std::string_view name) {
    if (name == "full") {
        return PhantomMethod::kFull;
    }
    if (name == "triangle") {
        return PhantomMethod::kTriangle;
    }
    if (name == "cycle3") {
        return PhantomMethod::kCycleThreeHop;
    }
    if (name == "custom") {
        return PhantomMethod::kCustom;
    }
    throw std::invalid_argument("unknown phantom method '" + std::string(name) + "'");
}

namespace {

EdgeEnvironment enumerate_environment(const Graph &base, const Graph &phantom, Edge edge) {
    EdgeEnvironment env;
    env.d = int(base.degree(edge.u)) - 1;
    env.e = int(base.degree(edge.v)) - 1;
    env.d_p = int(phantom.degree(edge.u));
    env.e_p = int(phantom.degree(edge.v));
    const auto n = Vertex(base.num_vertices());
    for (Vertex w = 0; w < n; w++) {
        if (w == edge.u || w == edge.v) {
            continue;
        }
        const bool ub = base.has_edge(edge.u, w);
        const bool vb = base.has_edge(edge.v, w);
        const bool up = phantom.has_edge(edge.u, w);
        const bool vp = phantom.has_edge(edge.v, w);
        if (ub && vb) {
            env.f++;
        } else if ((ub && vp) || (up && vb)) {
            env.f_mixed++;
        } else if (up && vp) {
            env.f_pp++;
        }
    }
    return env;
}

}  // namespace

PhantomGraph::PhantomGraph(Graph base, std::vector<Edge> phantom, PhantomMethod method)
    : base_(std::move(base)), phantom_(base_.num_vertices(), std::move(phantom)), method_(method) {
    for (const Edge &e : phantom_.edges()) {
        if (base_.has_edge(e.u, e.v)) {
            throw std::invalid_argument("phantom edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") is already a base edge");
        }
    }
    environments_.reserve(base_.num_edges());
    for (const Edge &e : base_.edges()) {
        environments_.push_back(enumerate_environment(base_, phantom_, e));
    }
}

const EdgeEnvironment &PhantomGraph::environment(Edge edge) const {
    auto index = base_.edge_index(edge);
    if (index < 0) {
        throw std::invalid_argument("(" + std::to_string(edge.u) + "," + std::to_string(edge.v) +
                                    ") is not a base edge");
    }
    return environments_[std::size_t(index)];
}

PhantomGraph full_method(const Graph &g) {
    return PhantomGraph(g, complement_edges(g), PhantomMethod::kFull);
}

PhantomGraph triangle_method(const Graph &g) {
    return PhantomGraph(g, distance_two_pairs(g), PhantomMethod::kTriangle);
}

PhantomGraph cycle_three_hop(const Graph &g) {
    const std::size_t n = g.num_vertices();
    if (n < 7) {
        throw std::invalid_argument("three-hop phantom edges need a cycle of length >= 7");
    }
    if (g.num_edges() != n || !g.is_regular(2)) {
        throw std::invalid_argument("three-hop phantom edges need a cycle graph");
    }
    // Walk the cycle to recover the vertex order.
    std::vector<Vertex> order{0};
    Vertex prev = 0;
    Vertex cur = g.neighbors(0)[0];
    while (cur != 0) {
        order.push_back(cur);
        auto nbrs = g.neighbors(cur);
        Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
    }
    if (order.size() != n) {
        throw std::invalid_argument("three-hop phantom edges need a single connected cycle");
    }
    std::vector<Edge> phantom;
    for (std::size_t i = 0; i < n; i++) {
        phantom.push_back(Edge::make(order[i], order[(i + 3) % n]));
    }
    PhantomGraph pg(g, std::move(phantom), PhantomMethod::kCycleThreeHop);
    for (const EdgeEnvironment &env : pg.environments()) {
        if (!env.triangle_free()) {
            throw std::invalid_argument("three-hop phantom edges close triangles on a " + std::to_string(n) +
                                        "-cycle");
        }
    }
    return pg;
}

PhantomGraph make_phantom_graph(const Graph &g, PhantomMethod method) {
    switch (method) {
        case PhantomMethod::kFull:
            return full_method(g);
        case PhantomMethod::kTriangle:
            return triangle_method(g);
        case PhantomMethod::kCycleThreeHop:
            return cycle_three_hop(g);
        case PhantomMethod::kCustom:
            break;
    }
    return PhantomGraph(g, {}, PhantomMethod::kCustom);
}

EdgeEnvironment edge_environment(const PhantomGraph &pg, Edge edge) {
    return pg.environment(edge);
}

}  // namespace pqaoa
