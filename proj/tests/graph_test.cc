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

#include <algorithm>
#include <numeric>
#include <set>

#include "oracle.h"
#include "pqaoa/graph.h"
#include "pqaoa/random.h"

namespace pqaoa {
namespace {

TEST(GraphTest, CanonicalizesAndSortsEdges) {
    Graph g(4, {Edge::make(3, 1), Edge::make(0, 2), Edge::make(1, 0)});
    ASSERT_EQ(g.num_edges(), 3U);
    EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
    EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
    EXPECT_EQ(g.edges()[2], (Edge{1, 3}));
    EXPECT_TRUE(g.has_edge(3, 1));
    EXPECT_FALSE(g.has_edge(2, 3));
    EXPECT_EQ(g.edge_index(Edge{1, 3}), 2);
    EXPECT_EQ(g.edge_index(Edge{2, 3}), -1);
    EXPECT_EQ(g.degree(0), 2U);
}

TEST(GraphTest, RejectsMalformedInput) {
    EXPECT_THROW(Graph(3, {Edge{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {Edge{0, 1}, Edge{1, 0}}), std::invalid_argument);
    EXPECT_THROW(Graph(3, {Edge{0, 3}}), std::invalid_argument);
    EXPECT_THROW(Graph(0, {}), std::invalid_argument);
}

TEST(GraphTest, NamedGenerators) {
    EXPECT_EQ(cycle_graph(12).num_edges(), 12U);
    EXPECT_TRUE(cycle_graph(12).is_regular(2));
    EXPECT_EQ(complete_graph(6).num_edges(), 15U);
    EXPECT_EQ(path_graph(5).num_edges(), 4U);
    EXPECT_EQ(star_graph(4).num_edges(), 4U);
    const Graph petersen = petersen_graph();
    EXPECT_EQ(petersen.num_vertices(), 10U);
    EXPECT_EQ(petersen.num_edges(), 15U);
    EXPECT_TRUE(petersen.is_regular(3));
    const Graph heawood = heawood_graph();
    EXPECT_EQ(heawood.num_vertices(), 14U);
    EXPECT_EQ(heawood.num_edges(), 21U);
    EXPECT_TRUE(heawood.is_regular(3));
    EXPECT_TRUE(distance_two_pairs(heawood).size() > 0);
    EXPECT_THROW(cycle_graph(2), std::invalid_argument);
}

TEST(GraphTest, HeawoodIsTriangleFree) {
    const Graph g = heawood_graph();
    for (const Edge &e : g.edges()) {
        for (Vertex w : g.neighbors(e.u)) {
            EXPECT_FALSE(g.has_edge(w, e.v)) << e.u << "-" << e.v << " via " << w;
        }
    }
}

TEST(GraphTest, RandomRegularIsSimpleRegularAndDeterministic) {
    for (std::size_t n : {6U, 9U, 12U, 16U}) {
        for (std::size_t k = 1; k < n; k++) {
            if ((n * k) % 2 != 0) {
                EXPECT_THROW(random_regular_graph(n, k, 1), std::invalid_argument);
                continue;
            }
            const Graph a = random_regular_graph(n, k, 42);
            EXPECT_TRUE(a.is_regular(k)) << n << "," << k;
            EXPECT_EQ(a.num_edges(), n * k / 2);
            EXPECT_EQ(a, random_regular_graph(n, k, 42));
        }
    }
    EXPECT_THROW(random_regular_graph(5, 5, 0), std::invalid_argument);
    EXPECT_EQ(random_regular_graph(16, 4, 1).num_edges(), 32U);
}

TEST(GraphTest, RandomRegularSeedsGiveDifferentGraphs) {
    std::set<std::uint64_t> hashes;
    for (std::uint64_t seed = 0; seed < 20; seed++) {
        hashes.insert(isomorphism_fingerprint(random_regular_graph(12, 3, seed)).hash);
    }
    EXPECT_GT(hashes.size(), 10U);
}

TEST(GraphTest, ErdosRenyiExtremes) {
    EXPECT_EQ(erdos_renyi_graph(7, 0.0, 3).num_edges(), 0U);
    EXPECT_EQ(erdos_renyi_graph(7, 1.0, 3).num_edges(), 21U);
    EXPECT_THROW(erdos_renyi_graph(7, 1.5, 3), std::invalid_argument);
}

TEST(GraphTest, ComplementAndDistanceTwo) {
    const Graph c8 = cycle_graph(8);
    EXPECT_EQ(complement_edges(c8).size(), 28U - 8U);
    const std::vector<Edge> d2 = distance_two_pairs(c8);
    ASSERT_EQ(d2.size(), 8U);
    for (Vertex i = 0; i < 8; i++) {
        EXPECT_NE(std::find(d2.begin(), d2.end(), Edge::make(i, (i + 2) % 8)), d2.end());
    }
    EXPECT_TRUE(distance_two_pairs(complete_graph(5)).empty());
}

TEST(GraphTest, MaxCutKnownValues) {
    EXPECT_EQ(max_cut(petersen_graph()), 12U);
    EXPECT_EQ(max_cut(cycle_graph(8)), 8U);
    EXPECT_EQ(max_cut(cycle_graph(9)), 8U);
    EXPECT_EQ(max_cut(complete_graph(7)), 12U);
    EXPECT_EQ(max_cut(heawood_graph()), 21U);
    EXPECT_EQ(max_cut(Graph(3, {})), 0U);
}

TEST(GraphTest, MaxCutMatchesPlainEnumeration) {
    for (std::uint64_t seed = 0; seed < 30; seed++) {
        Rng rng(seed);
        const std::size_t n = 2 + uniform_below(rng, 10);
        const Graph g = erdos_renyi_graph(n, uniform_unit(rng), seed);
        EXPECT_EQ(int(max_cut(g)), oracle::max_cut(g)) << "seed " << seed;
    }
}

TEST(GraphTest, MaxCutCapacity) {
    EXPECT_THROW(max_cut(cycle_graph(12), 10), CapacityError);
}

TEST(GraphTest, FingerprintInvariantUnderRelabeling) {
    const Graph g = random_regular_graph(12, 5, 9);
    std::vector<Vertex> perm(12);
    std::iota(perm.begin(), perm.end(), 0U);
    Rng rng(4);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    EXPECT_FALSE(g == h);
    EXPECT_EQ(isomorphism_fingerprint(g), isomorphism_fingerprint(h));
}

TEST(GraphTest, FingerprintSeparatesNonIsomorphicGraphs) {
    const Graph c6 = cycle_graph(6);
    const Graph two_triangles(6, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}, Edge{3, 4}, Edge{4, 5}, Edge{3, 5}});
    EXPECT_FALSE(isomorphism_fingerprint(c6) == isomorphism_fingerprint(two_triangles));
}

}  // namespace
}  // namespace pqaoa
