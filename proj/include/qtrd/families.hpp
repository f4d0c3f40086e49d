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

#ifndef QTRD_FAMILIES_HPP
#define QTRD_FAMILIES_HPP

#include <map>
#include <memory>
#include <string>

#include "qtrd/graph.hpp"
#include "qtrd/labeling.hpp"

namespace qtrd {

// ---------------------------------------------------------------------------
// classic graphs
// ---------------------------------------------------------------------------

Graph path_graph(int n);           // n >= 1
Graph cycle_graph(int n);          // n >= 3
Graph complete_graph(int n);       // n >= 1
Graph star_graph(int n);           // order n, center 0, i.e. K_{1,n-1}; n >= 1
Graph empty_graph(int n);          // n >= 0, no edges

// ---------------------------------------------------------------------------
// constructions used for the tightness and hardness results
// ---------------------------------------------------------------------------

// The 14-vertex tree gadget. Layout: 0=w, 1=w1, 2=w2, 3=w3, 4=x', 5=x,
// 6..7 leaves of w1, 8..10 leaves of w2, 11..13 leaves of w3. The hub w is
// adjacent to w1,w2,w3; w1 carries two leaves plus the path x'-x; w2 and w3
// carry three leaves each. Degrees: d(w)=3, d(w1)=d(w2)=d(w3)=4, d(x')=2,
// d(x)=1.
Graph gadget_h();

// Center u (vertex 0) joined to the hub w of t disjoint gadget copies; copy
// c occupies the id block 1+14c .. 14+14c with the gadget layout. Order 14t+1.
Graph g1(int t);

// k >= 3 pendant vertices on every vertex of the base plus every base edge
// replaced by a path u-x-z-v. Requires base minimum degree >= 2. Layout:
// base vertices first, then per-edge pairs (x adjacent to the smaller
// endpoint) in sorted edge order, then pendants grouped by base vertex.
// Order n + 2m + nk.
Graph g2k(const Graph& base, int k);

// k >= 3 pendants on every base vertex, with the first pendant edge of each
// vertex subdivided once. Requires base minimum degree >= 2. Layout: base,
// then pendants grouped by vertex, then one subdivision vertex per base
// vertex. Order n(k+1) + n.
Graph gprime_k(const Graph& base, int k);

// Like g2k but each base edge becomes a path through three new vertices.
// Requires base minimum degree >= 3. Order n(k+1) + 3m.
Graph g3k(const Graph& base, int k);

// Hardness construction: one gadget copy per base vertex z, joined by the
// edge z-w. Layout: base vertices first, copy for z in block n+14z. Order 15n.
Graph reduction_gprime(const Graph& base);

// Canonical order-n member of the family with exactly one vertex of degree
// n-1 and at least one pendant: center 0 adjacent to everything,
// `pendant_count` vertices of degree one, the rest forming a clique.
// n >= 4, 1 <= pendant_count <= n-1 (pendant_count = n-1 gives the star).
Graph f1_member(int n, int pendant_count);

// The 13-vertex tree used for the labeling comparisons: center 0, four
// 2-edge arms (1,2),(3,4),(5,6),(7,8) and four leaves 9..12 on the center.
Graph figure1_graph();

// ---------------------------------------------------------------------------
// recipes
// ---------------------------------------------------------------------------

/// Declarative description of a family instance, parseable from strings like
/// "classic:cycle:5", "g1:t=2", "g2k:base=classic:cycle:3,k=3",
/// "f1:n=5,p=2" or "g3k:base=@graph.txt,k=3".
struct GraphRecipe {
    enum class Family {
        path, cycle, complete, star, empty,
        gadget_h, g1, g2k, gprime_k, g3k, reduction_gprime, f1_member, figure1,
    };
    Family family{};
    std::map<std::string, long> params;     // n, t, k, p
    std::shared_ptr<GraphRecipe> base;      // nested base recipe
    std::string base_file;                  // or a base edge-list file path

    std::string to_string() const;
};

GraphRecipe parse_recipe(const std::string& text);
bool looks_like_recipe(const std::string& text);
Graph build(const GraphRecipe& recipe);

// ---------------------------------------------------------------------------
// explicit labelings from the constructions
// ---------------------------------------------------------------------------

/// The named labelings attached to a construction, each passing its claimed
/// predicate: for g1 the RDF/TRDF/QTRDF triple f1/f2/f3 of weights
/// 7t+1/9t+1/8t+1; for g2k the unique weight-2n RDF plus the weight-3n QTRDF;
/// for gprime_k the weight-3n QTRDF plus the weight-4n TRDF; for g3k the
/// weight-(3n+m) QTRDF; for reduction_gprime the weight-(8n+gamma_R(base))
/// QTRDF f_prime; for figure1 the three demonstration labelings.
std::map<std::string, RomanLabeling> paper_labelings(const GraphRecipe& recipe);

/// f_prime on reduction_gprime(base) assembled from a given RDF of the base:
/// every copy takes 2 on w1,w2,w3 and 1 on w and x.
RomanLabeling reduction_fprime(const Graph& base, const RomanLabeling& base_rdf);

}  // namespace qtrd

#endif  // QTRD_FAMILIES_HPP
