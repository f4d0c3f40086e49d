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

#ifndef QTRD_GRAPH_HPP
#define QTRD_GRAPH_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qtrd {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // always kept sorted ascending
using Edge = std::pair<Vertex, Vertex>;

struct InducedSubgraph;

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Immutable after construction. Neighbor lists are sorted, symmetric and
/// self-loop free; constructors reject anything else. Optional per-vertex
/// display names are carried along for family-generated graphs.
class Graph {
  public:
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);
    Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> names);

    int order() const { return n_; }
    std::size_t size() const { return m_; }

    bool has_edge(Vertex u, Vertex v) const;
    const VertexSet& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    VertexSet closed_neighborhood(Vertex v) const;

    int max_degree() const;
    int min_degree() const;
    bool has_isolated_vertex() const { return n_ > 0 && min_degree() == 0; }

    Graph complement() const;

    InducedSubgraph induced_subgraph(std::span<const Vertex> s) const;

    /// Maximal connected vertex sets, ordered by minimum vertex id.
    std::vector<VertexSet> connected_components() const;
    bool is_connected() const;

    static constexpr int kUnreachable = std::numeric_limits<int>::max();
    /// BFS distance; kUnreachable when u and v are in different components.
    int distance(Vertex u, Vertex v) const;

    /// { y : N[y] ∩ x = {v} }. Requires v ∈ x.
    VertexSet private_neighbors(Vertex v, std::span<const Vertex> x) const;
    /// Private neighbors of v that lie outside the set itself.
    VertexSet external_private_neighbors(Vertex v, std::span<const Vertex> s) const;

    std::vector<Edge> edges() const;  // each edge once, (u,v) with u < v, sorted

    bool has_names() const { return !names_.empty(); }
    const std::string& name(Vertex v) const;
    /// Resolves a display name to its vertex id; throws if unknown.
    Vertex vertex_by_name(const std::string& name) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

  private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> names_;
};

struct InducedSubgraph {
    Graph graph;
    VertexSet originals;  // new id -> old id (ascending, so new = rank of old)
};

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels vertices: vertex v of g becomes perm[v]. perm must be a bijection.
Graph permute(const Graph& g, std::span<const Vertex> perm);

}  // namespace qtrd

#endif  // QTRD_GRAPH_HPP
