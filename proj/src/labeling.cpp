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

#include "qtrd/labeling.hpp"

#include <numeric>
#include <stdexcept>

namespace qtrd {

RomanLabeling::RomanLabeling(std::vector<std::uint8_t> v) : values(std::move(v)) {
    for (auto x : values)
        if (x > 2) throw std::invalid_argument("labels must be 0, 1 or 2");
}

RomanLabeling RomanLabeling::uniform(int n, std::uint8_t value) {
    if (n < 0) throw std::invalid_argument("negative length");
    return RomanLabeling(std::vector<std::uint8_t>(static_cast<std::size_t>(n), value));
}

int RomanLabeling::weight() const {
    return std::accumulate(values.begin(), values.end(), 0);
}

VertexSet RomanLabeling::level(std::uint8_t i) const {
    VertexSet out;
    for (Vertex v = 0; v < size(); ++v)
        if (values[v] == i) out.push_back(v);
    return out;
}

namespace {

void check_lengths(const Graph& g, const RomanLabeling& f) {
    if (f.size() != g.order())
        throw std::invalid_argument("labeling length " + std::to_string(f.size()) +
                                    " does not match graph order " +
                                    std::to_string(g.order()));
}

bool has_neighbor_with_label(const Graph& g, const RomanLabeling& f, Vertex v,
                             std::uint8_t lo) {
    for (Vertex w : g.neighbors(v))
        if (f.values[w] >= lo) return true;
    return false;
}

}  // namespace

LabelCheck check_rdf(const Graph& g, const RomanLabeling& f) {
    check_lengths(g, f);
    for (Vertex v = 0; v < g.order(); ++v)
        if (f.values[v] == 0 && !has_neighbor_with_label(g, f, v, 2))
            return {false, v};
    return {};
}

LabelCheck check_qtrdf(const Graph& g, const RomanLabeling& f) {
    check_lengths(g, f);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (f.values[v] == 0 && !has_neighbor_with_label(g, f, v, 2)) return {false, v};
        if (f.values[v] == 2 && !has_neighbor_with_label(g, f, v, 1)) return {false, v};
    }
    return {};
}

LabelCheck check_trdf(const Graph& g, const RomanLabeling& f) {
    check_lengths(g, f);
    if (g.has_isolated_vertex())
        throw std::invalid_argument("total Roman domination is undefined on graphs "
                                    "with isolated vertices");
    for (Vertex v = 0; v < g.order(); ++v) {
        if (f.values[v] == 0 && !has_neighbor_with_label(g, f, v, 2)) return {false, v};
        if (f.values[v] >= 1 && !has_neighbor_with_label(g, f, v, 1)) return {false, v};
    }
    return {};
}

VertexSet v12_star(const Graph& g, const RomanLabeling& f) {
    check_lengths(g, f);
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (f.values[v] == 1 && has_neighbor_with_label(g, f, v, 2)) out.push_back(v);
    return out;
}

RomanLabeling parse_labeling(const std::string& text) {
    std::vector<std::uint8_t> values;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++i;
            continue;
        }
        if (c < '0' || c > '2')
            throw std::invalid_argument("labeling digit must be 0, 1 or 2, got '" +
                                        std::string(1, c) + "'");
        values.push_back(static_cast<std::uint8_t>(c - '0'));
        ++i;
        while (i < text.size() &&
               (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == '\n'))
            ++i;
        if (i < text.size()) {
            if (text[i] != ',') throw std::invalid_argument("expected ',' between labels");
            ++i;
        }
    }
    if (values.empty()) throw std::invalid_argument("empty labeling");
    return RomanLabeling(std::move(values));
}

std::string format_labeling(const RomanLabeling& f) {
    std::string out;
    for (int v = 0; v < f.size(); ++v) {
        if (v) out += ',';
        out += static_cast<char>('0' + f.values[v]);
    }
    return out;
}

}  // namespace qtrd
