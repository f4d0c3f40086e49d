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

#include "qtrd/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qtrd {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        m_ += nbrs.size();
    }
    m_ /= 2;
}

Graph::Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> names)
    : Graph(n, edges) {
    if (static_cast<int>(names.size()) != n)
        throw std::invalid_argument("name list length must equal graph order");
    names_ = std::move(names);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex id " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    check_vertex(v);
    VertexSet out = adj_[v];
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (const auto& nbrs : adj_) d = std::min(d, static_cast<int>(nbrs.size()));
    return d;
}

Graph Graph::complement() const {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n_; ++u) {
        auto it = adj_[u].begin();
        for (Vertex v = u + 1; v < n_; ++v) {
            while (it != adj_[u].end() && *it < v) ++it;
            if (it == adj_[u].end() || *it != v) edges.emplace_back(u, v);
        }
    }
    if (names_.empty()) return Graph(n_, edges);
    return Graph(n_, edges, names_);
}

InducedSubgraph Graph::induced_subgraph(std::span<const Vertex> s) const {
    VertexSet verts(s.begin(), s.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<Vertex> remap(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        check_vertex(verts[i]);
        remap[verts[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (Vertex old_u : verts)
        for (Vertex old_v : adj_[old_u])
            if (old_u < old_v && remap[old_v] >= 0)
                edges.emplace_back(remap[old_u], remap[old_v]);
    Graph sub(static_cast<int>(verts.size()), edges);
    if (!names_.empty()) {
        std::vector<std::string> names;
        names.reserve(verts.size());
        for (Vertex v : verts) names.push_back(names_[v]);
        sub.names_ = std::move(names);
    }
    return InducedSubgraph{std::move(sub), std::move(verts)};
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> comps;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (Vertex root = 0; root < n_; ++root) {
        if (seen[root]) continue;
        VertexSet comp;
        std::deque<Vertex> queue{root};
        seen[root] = 1;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (Vertex w : adj_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    return connected_components().size() == 1;
}

int Graph::distance(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    dist[u] = 0;
    std::deque<Vertex> queue{u};
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex w : adj_[x]) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[x] + 1;
            if (w == v) return dist[w];
            queue.push_back(w);
        }
    }
    return kUnreachable;
}

VertexSet Graph::private_neighbors(Vertex v, std::span<const Vertex> x) const {
    check_vertex(v);
    std::vector<char> in_x(static_cast<std::size_t>(n_), 0);
    for (Vertex u : x) {
        check_vertex(u);
        in_x[u] = 1;
    }
    if (!in_x[v]) throw std::invalid_argument("vertex must belong to the set");
    VertexSet out;
    for (Vertex y = 0; y < n_; ++y) {
        // N[y] ∩ x must be exactly {v}
        bool hit_v = (y == v);
        bool hit_other = (y != v) && in_x[y];
        for (Vertex w : adj_[y]) {
            if (!in_x[w]) continue;
            if (w == v)
                hit_v = true;
            else
                hit_other = true;
            if (hit_other) break;
        }
        if (hit_v && !hit_other) out.push_back(y);
    }
    return out;
}

VertexSet Graph::external_private_neighbors(Vertex v, std::span<const Vertex> s) const {
    VertexSet pn = private_neighbors(v, s);
    std::vector<char> in_s(static_cast<std::size_t>(n_), 0);
    for (Vertex u : s) in_s[u] = 1;
    VertexSet out;
    for (Vertex y : pn)
        if (!in_s[y]) out.push_back(y);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

const std::string& Graph::name(Vertex v) const {
    check_vertex(v);
    static const std::string empty;
    return names_.empty() ? empty : names_[v];
}

Vertex Graph::vertex_by_name(const std::string& name) const {
    for (Vertex v = 0; v < n_; ++v)
        if (!names_.empty() && names_[v] == name) return v;
    throw std::invalid_argument("no vertex named '" + name + "'");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    int n = a.order() + b.order();
    if (!a.has_names() && !b.has_names()) return Graph(n, edges);
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < a.order(); ++v) names.push_back(a.name(v));
    for (Vertex v = 0; v < b.order(); ++v) names.push_back(b.name(v));
    return Graph(n, edges, std::move(names));
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("permutation length must equal graph order");
    std::vector<char> hit(perm.size(), 0);
    for (Vertex p : perm) {
        if (p < 0 || p >= g.order() || hit[p])
            throw std::invalid_argument("not a permutation");
        hit[p] = 1;
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

}  // namespace qtrd
