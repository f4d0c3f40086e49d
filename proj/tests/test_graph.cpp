// Copyright 2026 The qtrd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sstream>

#include "qtrd/families.hpp"
#include "qtrd/graph.hpp"
#include "qtrd/graph_io.hpp"
#include "qtrd/random_graphs.hpp"
#include "support.hpp"

using namespace qtrd;

TEST_CASE("degree basics") {
    Graph c4 = cycle_graph(4);
    for (Vertex v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    Graph k5 = complete_graph(5);
    for (Vertex v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);
    Graph star6 = star_graph(6);  // K_{1,5}
    CHECK(star6.degree(0) == 5);
    CHECK_THROWS_AS((void)star6.degree(6), std::out_of_range);
}

TEST_CASE("closed neighborhoods") {
    Graph p3 = path_graph(3);
    CHECK(p3.closed_neighborhood(1) == VertexSet{0, 1, 2});
    Graph k1 = empty_graph(1);
    CHECK(k1.closed_neighborhood(0) == VertexSet{0});
    Graph p4 = path_graph(4);
    CHECK(p4.closed_neighborhood(0) == VertexSet{0, 1});
}

TEST_CASE("complement") {
    // C5 is self-complementary
    Graph c5 = cycle_graph(5);
    Graph cc = c5.complement();
    CHECK(cc.size() == 5);
    for (Vertex v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
    CHECK(cc.is_connected());

    CHECK(complete_graph(4).complement().size() == 0);
    CHECK(empty_graph(6).complement() == complete_graph(6));
}

TEST_CASE("complement involution and degree sum") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_gnp(n, 0.4, rng());
        Graph gc = g.complement();
        CHECK(gc.complement() == g);
        for (Vertex v = 0; v < n; ++v) CHECK(g.degree(v) + gc.degree(v) == n - 1);
    }
}

TEST_CASE("induced subgraph") {
    Graph c4 = cycle_graph(4);
    auto sub = c4.induced_subgraph(std::vector<Vertex>{0, 1});
    CHECK(sub.graph == complete_graph(2));
    CHECK(sub.originals == VertexSet{0, 1});

    Graph c5 = cycle_graph(5);
    auto p = c5.induced_subgraph(std::vector<Vertex>{1, 2, 3});
    CHECK(p.graph == path_graph(3));

    auto full = c5.induced_subgraph(std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(full.graph == c5);
}

TEST_CASE("connected components") {
    Graph g = disjoint_union(complete_graph(3), empty_graph(1));
    auto comps = g.connected_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3});

    CHECK(cycle_graph(7).connected_components().size() == 1);
    CHECK(empty_graph(3).connected_components().size() == 3);
}

TEST_CASE("components partition the vertex set") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_gnp(n, 0.15, rng());
        auto comps = g.connected_components();
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (const auto& comp : comps)
            for (Vertex v : comp) {
                CHECK(!seen[v]);
                seen[v] = 1;
            }
        for (Vertex v = 0; v < n; ++v) CHECK(seen[v]);
    }
}

TEST_CASE("distance") {
    Graph p4 = path_graph(4);
    CHECK(p4.distance(0, 3) == 3);
    CHECK(p4.distance(2, 2) == 0);
    Graph two = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK(two.distance(0, 2) == Graph::kUnreachable);
}

TEST_CASE("distance triangle inequality on connected graphs") {
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 10) {
        Graph g = random_gnp(8, 0.4, rng());
        if (!g.is_connected()) continue;
        ++done;
        for (int trial = 0; trial < 10; ++trial) {
            Vertex a = rng() % 8, b = rng() % 8, c = rng() % 8;
            CHECK(g.distance(a, c) <= g.distance(a, b) + g.distance(b, c));
        }
    }
}

TEST_CASE("private neighbors") {
    Graph p3 = path_graph(3);
    CHECK(p3.private_neighbors(1, std::vector<Vertex>{1}) == VertexSet{0, 1, 2});
    Graph k3 = complete_graph(3);
    CHECK(k3.private_neighbors(0, std::vector<Vertex>{0, 1}).empty());
    Graph p4 = path_graph(4);
    CHECK(p4.private_neighbors(1, std::vector<Vertex>{1, 2}) == VertexSet{0});
    CHECK_THROWS_AS((void)p4.private_neighbors(0, std::vector<Vertex>{1, 2}),
                    std::invalid_argument);
}

TEST_CASE("external private neighbors") {
    Graph p3 = path_graph(3);
    CHECK(p3.external_private_neighbors(1, std::vector<Vertex>{1}) == VertexSet{0, 2});
    Graph k3 = complete_graph(3);
    CHECK(k3.external_private_neighbors(0, std::vector<Vertex>{0, 1}).empty());
    Graph p4 = path_graph(4);
    CHECK(p4.external_private_neighbors(2, std::vector<Vertex>{1, 2}) == VertexSet{3});
}

TEST_CASE("constructor rejects bad edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::out_of_range);
    // duplicate edges collapse
    Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.size() == 1);
}

TEST_CASE("adjacency stays symmetric through transformations") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_gnp(9, 0.5, rng());
        auto perm = testing::random_permutation(9, rng);
        for (const Graph& h : {g.complement(), permute(g, perm)}) {
            for (Vertex u = 0; u < h.order(); ++u)
                for (Vertex v : h.neighbors(u)) {
                    CHECK(u != v);
                    CHECK(h.has_edge(v, u));
                }
        }
    }
}

TEST_CASE("edge list io round trip") {
    Graph g = g2k(cycle_graph(3), 3);
    std::string text = format_graph(g);
    std::istringstream in(text);
    Graph parsed = read_graph(in);
    CHECK(parsed == g);
    CHECK(format_graph(parsed) == text);  // canonical writer is idempotent
}

TEST_CASE("edge list io accepts comments and dimacs") {
    std::istringstream plain("# a square\n4 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(read_graph(plain) == cycle_graph(4));

    std::istringstream dimacs("c a square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    CHECK(read_graph(dimacs) == cycle_graph(4));
}

TEST_CASE("edge list io diagnostics carry line numbers") {
    std::istringstream bad("3 1\n0 5\n");
    try {
        read_graph(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream missing("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph(missing), ParseError);
}

TEST_CASE("seeded gnp generation is reproducible") {
    Graph a = random_gnp(10, 0.5, 42);
    Graph b = random_gnp(10, 0.5, 42);
    CHECK(a == b);
    CHECK(random_gnp(6, 0.0, 1).size() == 0);
    CHECK(random_gnp(6, 1.0, 1) == complete_graph(6));
}
