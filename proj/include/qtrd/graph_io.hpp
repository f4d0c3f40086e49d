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

#ifndef QTRD_GRAPH_IO_HPP
#define QTRD_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qtrd/graph.hpp"

namespace qtrd {

/// Parse failure with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// Edge-list text format: first non-comment line `n m`, then m lines `u v`
// with 0-based ids. Lines starting with `#` are ignored. A DIMACS-like
// header `p edge n m` with `e u v` lines (1-based) is also accepted and
// normalized; in that mode `c` lines are comments.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// Canonical form: `n m` then the sorted edges `u v` (u < v), one per line.
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace qtrd

#endif  // QTRD_GRAPH_IO_HPP
