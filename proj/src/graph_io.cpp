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

#include "qtrd/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace qtrd {

namespace {

bool is_blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    bool dimacs = false;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank(line) || line[0] == '#') continue;
        if (line[0] == 'c' && (dimacs || n < 0)) continue;  // DIMACS comment
        std::istringstream ls(line);
        if (n < 0) {
            // header
            if (line[0] == 'p') {
                std::string p, kind;
                if (!(ls >> p >> kind >> n >> m) || kind != "edge")
                    throw ParseError(lineno, "expected 'p edge <n> <m>'");
                dimacs = true;
            } else if (!(ls >> n >> m)) {
                throw ParseError(lineno, "expected header '<n> <m>'");
            }
            if (n < 0 || m < 0) throw ParseError(lineno, "negative vertex or edge count");
            continue;
        }
        long u, v;
        if (dimacs) {
            std::string e;
            if (!(ls >> e >> u >> v) || e != "e")
                throw ParseError(lineno, "expected 'e <u> <v>'");
            --u;
            --v;
        } else if (!(ls >> u >> v)) {
            throw ParseError(lineno, "expected edge '<u> <v>'");
        }
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex id out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(lineno, "edge count mismatch: header says " + std::to_string(m) +
                                     ", found " + std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_graph(out, g);
}

}  // namespace qtrd
