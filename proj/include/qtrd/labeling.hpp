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

#ifndef QTRD_LABELING_HPP
#define QTRD_LABELING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtrd/graph.hpp"

namespace qtrd {

/// A vertex labeling f : V -> {0,1,2} with weight |V1| + 2|V2|.
struct RomanLabeling {
    std::vector<std::uint8_t> values;

    RomanLabeling() = default;
    explicit RomanLabeling(std::vector<std::uint8_t> v);
    static RomanLabeling uniform(int n, std::uint8_t value);

    int size() const { return static_cast<int>(values.size()); }
    int weight() const;
    /// Vertices with label i.
    VertexSet level(std::uint8_t i) const;

    bool operator==(const RomanLabeling&) const = default;
};

/// Outcome of a validity predicate. On failure, `witness` is the smallest
/// vertex id violating a condition.
struct LabelCheck {
    bool ok = true;
    std::optional<Vertex> witness;

    explicit operator bool() const { return ok; }
};

// Roman dominating function: every 0-labeled vertex has a 2-labeled neighbor.
LabelCheck check_rdf(const Graph& g, const RomanLabeling& f);

// Quasi-total variant: additionally, a vertex that would sit isolated inside
// the subgraph induced by the positive labels must carry label 1. Checked in
// the equivalent form "every 2-labeled vertex has a neighbor labeled 1 or 2"
// (a 1-labeled vertex isolated among the positives already satisfies the
// definition, so only the 2s constrain anything).
LabelCheck check_qtrdf(const Graph& g, const RomanLabeling& f);

// Total variant: the positive-labeled vertices induce a subgraph without
// isolated vertices. Only defined on graphs without isolated vertices;
// throws otherwise.
LabelCheck check_trdf(const Graph& g, const RomanLabeling& f);

inline bool is_rdf(const Graph& g, const RomanLabeling& f) { return check_rdf(g, f).ok; }
inline bool is_qtrdf(const Graph& g, const RomanLabeling& f) { return check_qtrdf(g, f).ok; }
inline bool is_trdf(const Graph& g, const RomanLabeling& f) { return check_trdf(g, f).ok; }

/// Label-1 vertices with at least one label-2 neighbor.
VertexSet v12_star(const Graph& g, const RomanLabeling& f);

// Text form: one line of comma-separated digits 0/1/2 indexed by vertex id.
RomanLabeling parse_labeling(const std::string& text);
std::string format_labeling(const RomanLabeling& f);

}  // namespace qtrd

#endif  // QTRD_LABELING_HPP
