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

#ifndef QTRD_BOUNDS_HPP
#define QTRD_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtrd/graph.hpp"
#include "qtrd/solvers.hpp"

namespace qtrd {

// ---------------------------------------------------------------------------
// structural recognizers backing the characterization checks
// ---------------------------------------------------------------------------

bool is_path_graph(const Graph& g);   // connected, max degree <= 2, acyclic
bool is_cycle_graph(const Graph& g);  // connected 2-regular
bool is_p2(const Graph& g);
bool is_c5(const Graph& g);
bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);
bool is_k4_minus_e(const Graph& g);

// order n, exactly one vertex of degree n-1, at least one vertex of degree
// one; n >= 4
bool in_family_f1(const Graph& g);
// complements of family-F1 members
bool in_family_f1_prime(const Graph& g);

// K4, its complement, K4 minus an edge, that graph's complement, or a member
// of F1 / F1' — the class on which the complement-sum bound sits at 7
bool in_nordhaus_equality_class(const Graph& g);

// ---------------------------------------------------------------------------
// bound checks
// ---------------------------------------------------------------------------

struct Comparison {
    std::string label;
    long long lhs = 0;
    std::string rel;  // "<=", "==", "<=>" (booleans encoded as 0/1)
    long long rhs = 0;
    bool ok = true;
};

struct BoundCheck {
    std::string name;
    bool applicable = false;
    bool holds = true;  // conjunction of the comparisons; true when inapplicable
    std::vector<Comparison> comparisons;
    std::string witness;  // first failing comparison, for diagnostics
};

struct BoundReport {
    std::string graph_id;
    std::vector<BoundCheck> checks;
    bool all_hold = true;  // over applicable checks only
};

enum class Check : unsigned {
    chain = 1u << 0,
    v2_bridge = 1u << 1,
    total_sandwich = 1u << 2,
    gamma_bounds = 1u << 3,
    maxdeg = 1u << 4,
    small_values = 1u << 5,
    packing = 1u << 6,
    nordhaus_gaddum = 1u << 7,
};
constexpr unsigned kAllChecks = 0xffu;

unsigned check_mask_from_names(const std::string& comma_separated);
std::vector<std::string> check_names(unsigned mask);

/// Runs the theorem checks against one graph, computing each parameter at
/// most once. Inapplicable preconditions yield applicable=false rather than
/// a vacuous pass.
class BoundChecker {
  public:
    explicit BoundChecker(Graph g, SolveOptions opts = {});

    BoundCheck check_chain();
    BoundCheck check_v2_bridge();
    BoundCheck check_total_sandwich();
    BoundCheck check_gamma_bounds();
    BoundCheck check_maxdeg();
    BoundCheck check_small_values();
    BoundCheck check_packing();
    BoundCheck check_nordhaus_gaddum();

    BoundReport run(std::string graph_id, unsigned mask = kAllChecks);

  private:
    int value(Parameter p);
    const ParamResult& result(Parameter p);
    int complement_qtr();

    Graph g_;
    SolveOptions opts_;
    std::map<Parameter, ParamResult> cache_;
    std::optional<int> complement_qtr_;
    std::optional<bool> efficient_;
    std::optional<ParamResult> rho_;
};

// ---------------------------------------------------------------------------
// exhaustive verification over all labeled graphs of a given order
// ---------------------------------------------------------------------------

struct EnumerationViolation {
    std::uint64_t edge_mask;  // bit i = i-th vertex pair in lexicographic order
    std::string check;
    std::string witness;
};

struct EnumerationResult {
    int n = 0;
    bool connected_only = false;
    unsigned checks = 0;
    std::uint64_t graphs_checked = 0;
    std::map<std::string, std::uint64_t> applicable_counts;
    std::vector<EnumerationViolation> violations;
};

/// Decodes the lexicographic pair encoding used by the enumeration.
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Runs the selected checks on every labeled graph of order n (all
/// 2^(n choose 2) edge subsets, optionally filtered to connected graphs).
/// Sharded across `threads` workers (0 = auto from QTRD_THREADS or the
/// hardware); the aggregate is independent of the worker count. n <= 7, and
/// n == 7 only with allow_deep.
EnumerationResult enumerate_and_check(int n, unsigned mask, bool connected_only,
                                      int threads = 0, bool allow_deep = false,
                                      const SolveOptions& opts = {});

/// Worker count resolution: explicit request > QTRD_THREADS > hardware.
int worker_count(int requested);

}  // namespace qtrd

#endif  // QTRD_BOUNDS_HPP
