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

#include "qtrd/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "qtrd/greedy.hpp"

namespace qtrd {

namespace {

using Clock = std::chrono::steady_clock;

int ceil_div(long a, long b) { return static_cast<int>((a + b - 1) / b); }

LabelCheck run_predicate(const Graph& g, Parameter p, const RomanLabeling& f) {
    switch (p) {
        case Parameter::roman: return check_rdf(g, f);
        case Parameter::total_roman: return check_trdf(g, f);
        case Parameter::quasi_total_roman: return check_qtrdf(g, f);
        default: throw std::logic_error("not a Roman parameter");
    }
}

void check_preconditions(const Graph& g, Parameter p) {
    if (g.order() < 1) throw std::invalid_argument("empty graph");
    if (requires_no_isolated_vertex(p) && g.has_isolated_vertex())
        throw std::invalid_argument(to_string(p) +
                                    " is undefined on graphs with isolated vertices");
}

// sorted id sequences compared lexicographically; minima of a parameter all
// share one cardinality, so this is a total order on optimal certificates
bool set_less(const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// brute force: 3^n labelings
// ---------------------------------------------------------------------------

ParamResult brute_force_roman(const Graph& g, Parameter p, const SolveOptions& opts) {
    const int n = g.order();
    if (n > opts.labeling_cap)
        throw std::invalid_argument("brute force labeling cap exceeded: n=" +
                                    std::to_string(n) + " > " +
                                    std::to_string(opts.labeling_cap));

    RomanLabeling f = RomanLabeling::uniform(n, 0);
    int best_w = -1;
    RomanLabeling best;
    std::uint64_t visited = 0;

    // odometer in digit-string lexicographic order; keeping only strict
    // improvements makes the retained optimum the lexicographically least one
    while (true) {
        ++visited;
        int w = f.weight();
        if ((best_w < 0 || w < best_w) && run_predicate(g, p, f).ok) {
            best_w = w;
            best = f;
        }
        int pos = n - 1;
        while (pos >= 0 && f.values[pos] == 2) f.values[pos--] = 0;
        if (pos < 0) break;
        ++f.values[pos];
    }

    ParamResult result;
    result.parameter = p;
    result.value = best_w;
    result.labeling = std::move(best);
    result.nodes_explored = visited;
    return result;
}

// ---------------------------------------------------------------------------
// brute force: 2^n subsets
// ---------------------------------------------------------------------------

VertexSet mask_to_set(std::uint64_t mask, int n) {
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

ParamResult brute_force_sets(const Graph& g, Parameter p, const SolveOptions& opts) {
    const int n = g.order();
    if (n > opts.subset_cap || n > 63)
        throw std::invalid_argument("brute force subset cap exceeded: n=" +
                                    std::to_string(n) + " > " +
                                    std::to_string(std::min(opts.subset_cap, 63)));

    std::vector<std::uint64_t> closed(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> open(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) open[v] |= std::uint64_t{1} << w;
        closed[v] = open[v] | std::uint64_t{1} << v;
    }

    const bool maximize = (p == Parameter::packing);
    int best_val = maximize ? -1 : n + 1;
    VertexSet best_set;
    std::uint64_t visited = 0;

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        ++visited;
        bool valid = true;
        if (p == Parameter::domination) {
            for (Vertex v = 0; v < n && valid; ++v) valid = (closed[v] & mask) != 0;
        } else if (p == Parameter::total_domination) {
            for (Vertex v = 0; v < n && valid; ++v) valid = (open[v] & mask) != 0;
        } else {  // packing: pairwise disjoint closed neighborhoods
            std::uint64_t seen = 0;
            for (Vertex v = 0; v < n && valid; ++v) {
                if (!(mask >> v & 1)) continue;
                if (seen & closed[v]) valid = false;
                seen |= closed[v];
            }
        }
        if (!valid) continue;
        int card = static_cast<int>(std::popcount(mask));
        bool better = maximize ? card > best_val : card < best_val;
        if (better) {
            best_val = card;
            best_set = mask_to_set(mask, n);
        } else if (card == best_val) {
            VertexSet s = mask_to_set(mask, n);
            if (set_less(s, best_set)) best_set = std::move(s);
        }
    }

    ParamResult result;
    result.parameter = p;
    result.value = best_val;
    result.vertex_set = std::move(best_set);
    result.nodes_explored = visited;
    return result;
}

// ---------------------------------------------------------------------------
// branch and bound over labelings (gamma_R, gamma_tR, gamma_qtR)
// ---------------------------------------------------------------------------

class RomanBranchAndBound {
  public:
    RomanBranchAndBound(const Graph& g, Parameter p, const SolveOptions& opts)
        : g_(g), param_(p), opts_(opts), n_(g.order()) {
        needs_support_ = (p != Parameter::roman);
        // lower-bound denominator: a unit of future weight can cover at most
        // Delta/2 vertices when every 2 keeps a positive neighbor, and at
        // most (Delta+1)/2 otherwise
        int delta = g.max_degree();
        lb_denom_ = std::max(param_ == Parameter::roman ? delta + 1 : delta, 2);

        label_.assign(n_, -1);
        two_nbrs_.assign(n_, 0);
        pos_nbrs_.assign(n_, 0);
        un_nbrs_.assign(n_, 0);
        for (Vertex v = 0; v < n_; ++v) un_nbrs_[v] = g.degree(v);
        uncovered_ = n_;

        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    void seed_incumbent(const RomanLabeling& f) {
        int w = f.weight();
        if (best_w_ < 0 || w < best_w_) {
            best_w_ = w;
            best_ = f;
        }
    }

    ParamResult run() {
        deadline_ = Clock::now() + opts_.budget;
        search(0);

        ParamResult result;
        result.parameter = param_;
        result.value = best_w_;
        result.labeling = best_;
        result.nodes_explored = nodes_;
        result.exact = !out_of_budget_;
        if (out_of_budget_) throw BudgetExhausted(std::move(result));
        return result;
    }

  private:
    void search(int depth) {
        if (out_of_budget_) return;
        if ((++nodes_ & 0xfff) == 0 && Clock::now() > deadline_) {
            out_of_budget_ = true;
            return;
        }
        if (depth == n_) {
            if (partial_ < best_w_) {
                RomanLabeling f(std::vector<std::uint8_t>(label_.begin(), label_.end()));
                if (run_predicate(g_, param_, f).ok) {
                    best_w_ = partial_;
                    best_ = std::move(f);
                }
            }
            return;
        }
        if (opts_.prune_weight_bound &&
            partial_ + ceil_div(2L * uncovered_, lb_denom_) >= best_w_)
            return;

        const Vertex v = order_[depth];
        for (int lab : {2, 0, 1}) {
            if (lab == 2 && needs_support_ && opts_.prune_hopeless_two &&
                pos_nbrs_[v] == 0 && un_nbrs_[v] == 0)
                continue;  // all neighbors already fixed to 0
            if (lab == 0 && opts_.prune_uncoverable_zero && two_nbrs_[v] == 0 &&
                un_nbrs_[v] == 0)
                continue;  // no 2-neighbor can ever appear
            if (opts_.prune_weight_bound && partial_ + lab >= best_w_) continue;
            assign(v, lab);
            if (!dead_after(v, lab)) search(depth + 1);
            undo(v, lab);
            if (out_of_budget_) return;
        }
    }

    void assign(Vertex v, int lab) {
        label_[v] = static_cast<signed char>(lab);
        partial_ += lab;
        if (lab >= 1 && two_nbrs_[v] == 0) --uncovered_;
        for (Vertex w : g_.neighbors(v)) {
            --un_nbrs_[w];
            if (lab >= 1) ++pos_nbrs_[w];
            if (lab == 2 && two_nbrs_[w]++ == 0 && label_[w] <= 0) --uncovered_;
        }
    }

    void undo(Vertex v, int lab) {
        for (Vertex w : g_.neighbors(v)) {
            if (lab == 2 && --two_nbrs_[w] == 0 && label_[w] <= 0) ++uncovered_;
            if (lab >= 1) --pos_nbrs_[w];
            ++un_nbrs_[w];
        }
        if (lab >= 1 && two_nbrs_[v] == 0) ++uncovered_;
        partial_ -= lab;
        label_[v] = -1;
    }

    // violations introduced by fixing v can only involve v or its neighbors
    bool dead_after(Vertex v, int lab) {
        if (opts_.prune_uncoverable_zero) {
            if (lab == 0 && two_nbrs_[v] == 0 && un_nbrs_[v] == 0) return true;
            if (lab != 2)
                for (Vertex w : g_.neighbors(v))
                    if (label_[w] == 0 && two_nbrs_[w] == 0 && un_nbrs_[w] == 0)
                        return true;
        }
        if (needs_support_ && opts_.prune_hopeless_two) {
            if (needs_support_label(lab) && pos_nbrs_[v] == 0 && un_nbrs_[v] == 0)
                return true;
            if (lab == 0)
                for (Vertex w : g_.neighbors(v))
                    if (label_[w] > 0 && needs_support_label(label_[w]) &&
                        pos_nbrs_[w] == 0 && un_nbrs_[w] == 0)
                        return true;
        }
        return false;
    }

    bool needs_support_label(int lab) const {
        if (param_ == Parameter::total_roman) return lab >= 1;
        return lab == 2;  // quasi-total: only the 2s need a positive neighbor
    }

    const Graph& g_;
    Parameter param_;
    const SolveOptions& opts_;
    int n_;
    bool needs_support_ = true;
    int lb_denom_ = 2;

    std::vector<Vertex> order_;
    std::vector<signed char> label_;
    std::vector<int> two_nbrs_, pos_nbrs_, un_nbrs_;
    int uncovered_ = 0;
    int partial_ = 0;

    int best_w_ = -1;
    RomanLabeling best_;

    std::uint64_t nodes_ = 0;
    Clock::time_point deadline_;
    bool out_of_budget_ = false;
};

// ---------------------------------------------------------------------------
// branch and bound over vertex sets (gamma, gamma_t)
// ---------------------------------------------------------------------------

class CoverBranchAndBound {
  public:
    CoverBranchAndBound(const Graph& g, Parameter p, const SolveOptions& opts)
        : g_(g), param_(p), opts_(opts), n_(g.order()) {
        closed_ = (p == Parameter::domination);
        cover_per_pick_ = std::max(g.max_degree() + (closed_ ? 1 : 0), 1);
        chosen_.assign(n_, 0);
        excluded_.assign(n_, 0);
        covers_.assign(n_, 0);
        uncovered_ = n_;
    }

    ParamResult run() {
        deadline_ = Clock::now() + opts_.budget;
        // D = V is feasible under the module preconditions
        best_size_ = n_;
        best_.resize(n_);
        std::iota(best_.begin(), best_.end(), 0);

        search(0);

        ParamResult result;
        result.parameter = param_;
        result.value = best_size_;
        result.vertex_set = best_;
        result.nodes_explored = nodes_;
        result.exact = !out_of_budget_;
        if (out_of_budget_) throw BudgetExhausted(std::move(result));
        return result;
    }

  private:
    bool in_scope(Vertex v, Vertex w) const {
        return closed_ || v != w;  // closed vs open neighborhood
    }

    void search(int chosen_count) {
        if (out_of_budget_) return;
        if ((++nodes_ & 0xfff) == 0 && Clock::now() > deadline_) {
            out_of_budget_ = true;
            return;
        }
        if (uncovered_ == 0) {
            if (chosen_count < best_size_) {
                best_size_ = chosen_count;
                best_.clear();
                for (Vertex v = 0; v < n_; ++v)
                    if (chosen_[v]) best_.push_back(v);
            }
            return;
        }
        if (chosen_count + ceil_div(uncovered_, cover_per_pick_) >= best_size_) return;

        // branch on the uncovered vertex with the fewest remaining candidates
        Vertex pivot = -1;
        int pivot_cands = n_ + 1;
        for (Vertex v = 0; v < n_; ++v) {
            if (covers_[v] > 0) continue;
            int cands = 0;
            if (closed_ && !excluded_[v]) ++cands;
            for (Vertex w : g_.neighbors(v))
                if (!excluded_[w]) ++cands;
            if (cands < pivot_cands) {
                pivot_cands = cands;
                pivot = v;
                if (cands == 0) break;
            }
        }
        if (pivot_cands == 0) return;  // pivot can never be covered

        VertexSet candidates;
        if (closed_ && !excluded_[pivot]) candidates.push_back(pivot);
        for (Vertex w : g_.neighbors(pivot))
            if (!excluded_[w]) candidates.push_back(w);
        std::sort(candidates.begin(), candidates.end());

        for (Vertex w : candidates) {
            pick(w);
            search(chosen_count + 1);
            unpick(w);
            excluded_[w] = 1;  // later branches must cover pivot differently
            if (out_of_budget_) break;
        }
        for (Vertex w : candidates) excluded_[w] = 0;
    }

    void pick(Vertex w) {
        chosen_[w] = 1;
        if (closed_ && covers_[w]++ == 0) --uncovered_;
        for (Vertex u : g_.neighbors(w))
            if (covers_[u]++ == 0) --uncovered_;
    }

    void unpick(Vertex w) {
        chosen_[w] = 0;
        if (closed_ && --covers_[w] == 0) ++uncovered_;
        for (Vertex u : g_.neighbors(w))
            if (--covers_[u] == 0) ++uncovered_;
    }

    const Graph& g_;
    Parameter param_;
    const SolveOptions& opts_;
    int n_;
    bool closed_;
    int cover_per_pick_;

    std::vector<char> chosen_, excluded_;
    std::vector<int> covers_;
    int uncovered_;

    int best_size_ = 0;
    VertexSet best_;

    std::uint64_t nodes_ = 0;
    Clock::time_point deadline_;
    bool out_of_budget_ = false;
};

// ---------------------------------------------------------------------------
// branch and bound for the packing number (maximization)
// ---------------------------------------------------------------------------

class PackingBranchAndBound {
  public:
    PackingBranchAndBound(const Graph& g, const SolveOptions& opts)
        : g_(g), opts_(opts), n_(g.order()) {
        // u conflicts with v iff their closed neighborhoods intersect
        ball2_.resize(n_);
        std::vector<char> mark(static_cast<std::size_t>(n_), 0);
        for (Vertex v = 0; v < n_; ++v) {
            VertexSet ball;
            auto touch = [&](Vertex x) {
                if (!mark[x]) {
                    mark[x] = 1;
                    ball.push_back(x);
                }
            };
            touch(v);
            for (Vertex w : g.neighbors(v)) {
                touch(w);
                for (Vertex u : g.neighbors(w)) touch(u);
            }
            for (Vertex x : ball) mark[x] = 0;
            std::sort(ball.begin(), ball.end());
            ball2_[v] = std::move(ball);
        }
        blocked_.assign(n_, 0);
    }

    ParamResult run() {
        deadline_ = Clock::now() + opts_.budget;
        search(0, 0);

        ParamResult result;
        result.parameter = Parameter::packing;
        result.value = best_size_;
        result.vertex_set = best_;
        result.nodes_explored = nodes_;
        result.exact = !out_of_budget_;
        if (out_of_budget_) throw BudgetExhausted(std::move(result));
        return result;
    }

  private:
    void search(Vertex idx, int size) {
        if (out_of_budget_) return;
        if ((++nodes_ & 0xfff) == 0 && Clock::now() > deadline_) {
            out_of_budget_ = true;
            return;
        }
        if (size > best_size_) {
            best_size_ = size;
            best_ = current_;
        }
        if (idx == n_) return;
        int free_left = 0;
        for (Vertex v = idx; v < n_; ++v)
            if (blocked_[v] == 0) ++free_left;
        if (size + free_left <= best_size_) return;

        if (blocked_[idx] == 0) {
            current_.push_back(idx);
            for (Vertex w : ball2_[idx]) ++blocked_[w];
            search(idx + 1, size + 1);
            for (Vertex w : ball2_[idx]) --blocked_[w];
            current_.pop_back();
        }
        search(idx + 1, size);
    }

    const Graph& g_;
    const SolveOptions& opts_;
    int n_;
    std::vector<VertexSet> ball2_;
    std::vector<int> blocked_;
    VertexSet current_;

    int best_size_ = -1;
    VertexSet best_;

    std::uint64_t nodes_ = 0;
    Clock::time_point deadline_;
    bool out_of_budget_ = false;
};

template <typename F>
ParamResult timed(F&& body) {
    auto start = Clock::now();
    try {
        ParamResult result = body();
        result.elapsed =
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
        return result;
    } catch (BudgetExhausted& e) {
        ParamResult best = e.best_known();
        best.elapsed =
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
        throw BudgetExhausted(std::move(best));
    }
}

}  // namespace

bool is_roman_parameter(Parameter p) {
    return p == Parameter::roman || p == Parameter::total_roman ||
           p == Parameter::quasi_total_roman;
}

bool requires_no_isolated_vertex(Parameter p) {
    return p == Parameter::total_domination || p == Parameter::total_roman;
}

std::string to_string(Parameter p) {
    switch (p) {
        case Parameter::domination: return "gamma";
        case Parameter::total_domination: return "gamma_t";
        case Parameter::roman: return "gamma_R";
        case Parameter::total_roman: return "gamma_tR";
        case Parameter::quasi_total_roman: return "gamma_qtR";
        case Parameter::packing: return "rho";
    }
    throw std::logic_error("unknown parameter");
}

Parameter parameter_from_string(const std::string& name) {
    if (name == "gamma") return Parameter::domination;
    if (name == "gamma_t" || name == "t") return Parameter::total_domination;
    if (name == "gamma_R" || name == "R") return Parameter::roman;
    if (name == "gamma_tR" || name == "tR") return Parameter::total_roman;
    if (name == "gamma_qtR" || name == "qtR") return Parameter::quasi_total_roman;
    if (name == "rho") return Parameter::packing;
    throw std::invalid_argument("unknown parameter '" + name + "'");
}

ParamResult brute_force(const Graph& g, Parameter p, const SolveOptions& opts) {
    check_preconditions(g, p);
    return timed([&] {
        return is_roman_parameter(p) ? brute_force_roman(g, p, opts)
                                     : brute_force_sets(g, p, opts);
    });
}

ParamResult solve(const Graph& g, Parameter p, const SolveOptions& opts) {
    check_preconditions(g, p);
    return timed([&]() -> ParamResult {
        if (is_roman_parameter(p)) {
            RomanBranchAndBound bnb(g, p, opts);
            bnb.seed_incumbent(RomanLabeling::uniform(g.order(), 1));
            if (p == Parameter::quasi_total_roman && g.order() >= 2)
                bnb.seed_incumbent(greedy_qtrdf(g).labeling);
            if (opts.warm_start) {
                if (!run_predicate(g, p, *opts.warm_start).ok)
                    throw std::invalid_argument("warm start labeling is not a valid " +
                                                to_string(p) + " certificate");
                bnb.seed_incumbent(*opts.warm_start);
            }
            return bnb.run();
        }
        if (p == Parameter::packing) return PackingBranchAndBound(g, opts).run();
        return CoverBranchAndBound(g, p, opts).run();
    });
}

ParamResult qtrd_disconnected(const Graph& g, const SolveOptions& opts) {
    auto components = g.connected_components();
    ParamResult result;
    result.parameter = Parameter::quasi_total_roman;
    RomanLabeling assembled = RomanLabeling::uniform(g.order(), 1);
    int total = 0;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    for (const auto& comp : components) {
        if (comp.size() == 1) {
            ++total;  // singleton components contribute weight 1
            continue;
        }
        auto induced = g.induced_subgraph(comp);
        ParamResult sub;
        try {
            sub = solve(induced.graph, Parameter::quasi_total_roman, opts);
        } catch (const BudgetExhausted& e) {
            sub = e.best_known();
            exhausted = true;
        }
        nodes += sub.nodes_explored;
        total += sub.value;
        for (std::size_t i = 0; i < comp.size(); ++i)
            assembled.values[induced.originals[i]] = sub.labeling->values[i];
        if (exhausted) break;  // remaining components keep the all-1 fallback
    }

    result.value = exhausted ? assembled.weight() : total;
    result.labeling = std::move(assembled);
    result.nodes_explored = nodes;
    result.exact = !exhausted;
    if (exhausted) throw BudgetExhausted(std::move(result));
    return result;
}

ParamResult packing_number(const Graph& g, const SolveOptions& opts) {
    return brute_force(g, Parameter::packing, opts);
}

bool certificate_valid(const Graph& g, const ParamResult& result) {
    if (is_roman_parameter(result.parameter)) {
        if (!result.labeling || result.labeling->size() != g.order()) return false;
        if (result.labeling->weight() != result.value) return false;
        return run_predicate(g, result.parameter, *result.labeling).ok;
    }
    if (!result.vertex_set) return false;
    const VertexSet& set = *result.vertex_set;
    if (static_cast<int>(set.size()) != result.value) return false;
    std::vector<char> in_set(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : set) {
        if (v < 0 || v >= g.order()) return false;
        in_set[v] = 1;
    }
    auto dominated = [&](Vertex v, bool closed) {
        if (closed && in_set[v]) return true;
        for (Vertex w : g.neighbors(v))
            if (in_set[w]) return true;
        return false;
    };
    switch (result.parameter) {
        case Parameter::domination:
            for (Vertex v = 0; v < g.order(); ++v)
                if (!dominated(v, true)) return false;
            return true;
        case Parameter::total_domination:
            for (Vertex v = 0; v < g.order(); ++v)
                if (!dominated(v, false)) return false;
            return true;
        case Parameter::packing: {
            std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
            for (Vertex v : set) {
                ++hits[v];
                for (Vertex w : g.neighbors(v)) ++hits[w];
            }
            for (int h : hits)
                if (h > 1) return false;
            return true;
        }
        default: return false;
    }
}

namespace {

bool edr_search(const Graph& g, std::vector<char>& covered, int uncovered, VertexSet& out) {
    if (uncovered == 0) return true;
    Vertex pivot = 0;
    while (covered[pivot]) ++pivot;
    // pivot must be covered by choosing a vertex of N[pivot] whose whole
    // closed neighborhood is still free
    for (Vertex w : g.closed_neighborhood(pivot)) {
        bool free = !covered[w];
        for (Vertex u : g.neighbors(w))
            if (covered[u]) {
                free = false;
                break;
            }
        if (!free) continue;
        covered[w] = 1;
        int newly = 1;
        for (Vertex u : g.neighbors(w)) {
            covered[u] = 1;
            ++newly;
        }
        out.push_back(w);
        if (edr_search(g, covered, uncovered - newly, out)) return true;
        out.pop_back();
        covered[w] = 0;
        for (Vertex u : g.neighbors(w)) covered[u] = 0;
    }
    return false;
}

}  // namespace

std::optional<VertexSet> efficient_dominating_set(const Graph& g, const SolveOptions& opts) {
    if (g.order() < 1) throw std::invalid_argument("empty graph");
    if (g.order() > opts.subset_cap)
        throw std::invalid_argument("efficient domination cap exceeded: n=" +
                                    std::to_string(g.order()) + " > " +
                                    std::to_string(opts.subset_cap));
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    VertexSet out;
    if (!edr_search(g, covered, g.order(), out)) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace qtrd
