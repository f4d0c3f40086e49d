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

#include "qtrd/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtrd {

GreedyTrace greedy_qtrdf(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw std::invalid_argument("greedy construction needs at least 2 vertices");

    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> res_deg(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) res_deg[v] = g.degree(v);

    GreedyTrace trace;
    trace.labeling = RomanLabeling::uniform(n, 0);
    int alive_count = n;

    while (alive_count > 0) {
        // residual vertex of maximum residual degree, smallest id on ties
        Vertex center = -1;
        for (Vertex v = 0; v < n; ++v)
            if (alive[v] && (center < 0 || res_deg[v] > res_deg[center])) center = v;
        if (res_deg[center] == 0) break;  // only isolated residual vertices remain

        // support: residual neighbor of minimum residual degree, smallest id
        Vertex support = -1;
        for (Vertex w : g.neighbors(center))
            if (alive[w] && (support < 0 || res_deg[w] < res_deg[support])) support = w;

        GreedyStep step;
        step.center = center;
        step.support = support;
        step.removed.push_back(center);
        for (Vertex w : g.neighbors(center))
            if (alive[w]) step.removed.push_back(w);
        std::sort(step.removed.begin(), step.removed.end());

        trace.labeling.values[center] = 2;
        trace.labeling.values[support] = 1;
        for (Vertex w : step.removed) {
            alive[w] = 0;
            --alive_count;
            for (Vertex u : g.neighbors(w))
                if (alive[u]) --res_deg[u];
        }
        trace.steps.push_back(std::move(step));
    }

    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) {
            trace.labeling.values[v] = 1;
            trace.leftover.push_back(v);
        }
    return trace;
}

std::optional<int> delta_order_bound(const Graph& g, const std::vector<Vertex>& centers) {
    const int n = g.order();
    std::vector<char> is_center(static_cast<std::size_t>(n), 0);
    for (Vertex v : centers) {
        if (v < 0 || v >= n) throw std::out_of_range("center id out of range");
        is_center[v] = 1;
    }
    if (centers.empty()) return std::nullopt;

    int degree_sum = 0;
    for (Vertex v : centers) {
        if (g.degree(v) <= 2) return std::nullopt;
        degree_sum += g.degree(v) + 1;
    }
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (g.distance(centers[i], centers[j]) < 3) return std::nullopt;

    // vertices adjacent to no center must form an independent set
    std::vector<char> near_center(static_cast<std::size_t>(n), 0);
    for (Vertex c : centers)
        for (Vertex w : g.neighbors(c)) near_center[w] = 1;
    for (Vertex u = 0; u < n; ++u) {
        if (near_center[u] || is_center[u]) continue;
        for (Vertex w : g.neighbors(u))
            if (!near_center[w] && !is_center[w]) return std::nullopt;
    }

    return n + 3 * static_cast<int>(centers.size()) - degree_sum;
}

}  // namespace qtrd
