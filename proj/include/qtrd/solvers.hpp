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

#ifndef QTRD_SOLVERS_HPP
#define QTRD_SOLVERS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "qtrd/graph.hpp"
#include "qtrd/labeling.hpp"

namespace qtrd {

enum class Parameter {
    domination,        // gamma
    total_domination,  // gamma_t
    roman,             // gamma_R
    total_roman,       // gamma_tR
    quasi_total_roman, // gamma_qtR
    packing,           // rho (maximized)
};

bool is_roman_parameter(Parameter p);
bool requires_no_isolated_vertex(Parameter p);
std::string to_string(Parameter p);
Parameter parameter_from_string(const std::string& name);

struct SolveOptions {
    std::chrono::milliseconds budget{60'000};

    // brute-force caps: 3^n labelings / 2^n subsets
    int labeling_cap = 15;
    int subset_cap = 20;

    // branch-and-bound pruning rules; each can be switched off independently
    // for differential testing against the brute-force oracle
    bool prune_weight_bound = true;      // residual-weight lower bound
    bool prune_hopeless_two = true;      // a vertex whose neighbors are all 0 cannot take 2
    bool prune_uncoverable_zero = true;  // a 0 with no remaining 2-candidates is dead

    // optional incumbent for Roman parameters; must be valid for the
    // requested parameter or solve() refuses it
    std::optional<RomanLabeling> warm_start;
};

struct ParamResult {
    Parameter parameter{};
    int value = 0;
    std::optional<RomanLabeling> labeling;  // Roman-type certificate
    std::optional<VertexSet> vertex_set;    // gamma / gamma_t / rho certificate
    std::uint64_t nodes_explored = 0;
    std::chrono::microseconds elapsed{0};
    bool exact = true;
};

/// Thrown when solve() runs out of budget; carries the best certificate
/// found so far (always valid, marked exact=false).
class BudgetExhausted : public std::runtime_error {
  public:
    explicit BudgetExhausted(ParamResult best)
        : std::runtime_error("solver budget exhausted"), best_(std::move(best)) {}
    const ParamResult& best_known() const { return best_; }

  private:
    ParamResult best_;
};

/// Exhaustive enumeration of all 3^n labelings (Roman parameters) or 2^n
/// subsets (set parameters). Returns the optimal value together with the
/// lexicographically least optimal certificate: labelings compared as digit
/// strings over vertex ids, sets as sorted id sequences. Refuses graphs
/// beyond the configured caps.
ParamResult brute_force(const Graph& g, Parameter p, const SolveOptions& opts = {});

/// Pruned branch-and-bound. Same value as brute_force everywhere both run;
/// the certificate is valid and optimal but not necessarily the same one.
/// Deterministic and single-threaded. Throws BudgetExhausted when the time
/// budget runs out.
ParamResult solve(const Graph& g, Parameter p, const SolveOptions& opts = {});

/// gamma_qtR of an arbitrary (possibly disconnected) graph via the component
/// decomposition: singleton components contribute 1 each, every other
/// component is solved exactly; the assembled certificate is a QTRDF of g.
ParamResult qtrd_disconnected(const Graph& g, const SolveOptions& opts = {});

/// Maximum packing (pairwise disjoint closed neighborhoods) by subset
/// enumeration; honors the subset cap.
ParamResult packing_number(const Graph& g, const SolveOptions& opts = {});

/// A set whose closed neighborhoods partition V, or nullopt when the graph
/// has none. Deterministic: the id-lexicographically first such set.
std::optional<VertexSet> efficient_dominating_set(const Graph& g,
                                                  const SolveOptions& opts = {});

/// True iff the certificate carried by the result passes the matching
/// validity predicate and its weight/cardinality equals the reported value.
bool certificate_valid(const Graph& g, const ParamResult& result);

}  // namespace qtrd

#endif  // QTRD_SOLVERS_HPP
