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

#ifndef QTRD_GREEDY_HPP
#define QTRD_GREEDY_HPP

#include <optional>
#include <vector>

#include "qtrd/graph.hpp"
#include "qtrd/labeling.hpp"

namespace qtrd {

struct GreedyStep {
    Vertex center;      // taken into V2
    Vertex support;     // its neighbor moved to V1
    VertexSet removed;  // closed neighborhood within the residual graph
};

/// Record of one run of the degree-greedy QTRDF construction. The removed
/// sets plus `leftover` partition V; each removed set has size >= 2 and the
/// labeling weighs exactly 3q + |I| with q = steps.size(), I = leftover.
struct GreedyTrace {
    RomanLabeling labeling;
    std::vector<GreedyStep> steps;
    VertexSet leftover;  // residual isolated vertices, labeled 1

    std::size_t loop_iterations() const { return steps.size(); }
};

/// Degree-greedy construction of a QTRDF: repeatedly take a residual vertex
/// of maximum residual degree, label it 2, one of its residual neighbors 1,
/// the rest of its residual closed neighborhood 0, and delete that closed
/// neighborhood; leftover isolated vertices get label 1. Ties: the center is
/// the smallest id among maximum-degree vertices; the support is the
/// neighbor of minimum residual degree, smallest id first. Requires n >= 2.
GreedyTrace greedy_qtrdf(const Graph& g);

/// Upper bound n + 3q - sum(d(v_i)+1) that the greedy realizes when the
/// chosen centers all have degree > 2, lie pairwise at distance >= 3, and
/// the vertices adjacent to no center form an independent set. Returns
/// nullopt when those preconditions fail.
std::optional<int> delta_order_bound(const Graph& g, const std::vector<Vertex>& centers);

}  // namespace qtrd

#endif  // QTRD_GREEDY_HPP
