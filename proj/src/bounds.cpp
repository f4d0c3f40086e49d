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

#include "qtrd/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "qtrd/labeling.hpp"

namespace qtrd {

// ---------------------------------------------------------------------------
// recognizers
// ---------------------------------------------------------------------------

bool is_path_graph(const Graph& g) {
    return g.order() >= 1 && g.is_connected() && g.max_degree() <= 2 &&
           g.size() == static_cast<std::size_t>(g.order()) - 1;
}

bool is_cycle_graph(const Graph& g) {
    return g.order() >= 3 && g.is_connected() && g.min_degree() == 2 &&
           g.max_degree() == 2;
}

bool is_p2(const Graph& g) { return g.order() == 2 && g.size() == 1; }

bool is_c5(const Graph& g) { return g.order() == 5 && is_cycle_graph(g); }

bool is_complete(const Graph& g) {
    return 2 * g.size() == static_cast<std::size_t>(g.order()) *
                               static_cast<std::size_t>(g.order() - 1);
}

bool is_edgeless(const Graph& g) { return g.size() == 0; }

bool is_k4_minus_e(const Graph& g) {
    if (g.order() != 4 || g.size() != 5) return false;
    std::vector<int> degs;
    for (Vertex v = 0; v < 4; ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    return degs == std::vector<int>{2, 2, 3, 3};
}

bool in_family_f1(const Graph& g) {
    const int n = g.order();
    if (n < 4) return false;
    int full = 0, pendant = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) ++full;
        if (g.degree(v) == 1) ++pendant;
    }
    return full == 1 && pendant >= 1;
}

bool in_family_f1_prime(const Graph& g) { return in_family_f1(g.complement()); }

bool in_nordhaus_equality_class(const Graph& g) {
    if (g.order() == 4 && (is_complete(g) || is_edgeless(g) || is_k4_minus_e(g) ||
                           is_k4_minus_e(g.complement())))
        return true;
    return in_family_f1(g) || in_family_f1_prime(g);
}

// ---------------------------------------------------------------------------
// BoundChecker
// ---------------------------------------------------------------------------

namespace {

std::string cmp_text(const Comparison& c) {
    std::ostringstream out;
    out << c.label << ": " << c.lhs << ' ' << c.rel << ' ' << c.rhs;
    return out.str();
}

void add(BoundCheck& check, const std::string& label, long long lhs,
         const std::string& rel, long long rhs) {
    bool ok;
    if (rel == "<=")
        ok = lhs <= rhs;
    else if (rel == "==")
        ok = lhs == rhs;
    else  // "<=>" between 0/1-encoded predicates
        ok = (lhs != 0) == (rhs != 0);
    check.comparisons.push_back({label, lhs, rel, rhs, ok});
    if (!ok && check.witness.empty()) check.witness = cmp_text(check.comparisons.back());
    check.holds = check.holds && ok;
}

BoundCheck not_applicable(const std::string& name) {
    BoundCheck check;
    check.name = name;
    check.applicable = false;
    return check;
}

}  // namespace

BoundChecker::BoundChecker(Graph g, SolveOptions opts)
    : g_(std::move(g)), opts_(std::move(opts)) {}

const ParamResult& BoundChecker::result(Parameter p) {
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
    ParamResult r = (p == Parameter::quasi_total_roman) ? qtrd_disconnected(g_, opts_)
                                                        : solve(g_, p, opts_);
    return cache_.emplace(p, std::move(r)).first->second;
}

int BoundChecker::value(Parameter p) { return result(p).value; }

int BoundChecker::complement_qtr() {
    if (!complement_qtr_) complement_qtr_ = qtrd_disconnected(g_.complement(), opts_).value;
    return *complement_qtr_;
}

BoundCheck BoundChecker::check_chain() {
    if (g_.order() < 1 || g_.has_isolated_vertex()) return not_applicable("chain");
    BoundCheck check;
    check.name = "chain";
    check.applicable = true;
    add(check, "gamma_R <= gamma_qtR", value(Parameter::roman), "<=",
        value(Parameter::quasi_total_roman));
    add(check, "gamma_qtR <= gamma_tR", value(Parameter::quasi_total_roman), "<=",
        value(Parameter::total_roman));
    return check;
}

BoundCheck BoundChecker::check_v2_bridge() {
    if (g_.order() < 1 || g_.has_isolated_vertex()) return not_applicable("v2_bridge");
    BoundCheck check;
    check.name = "v2_bridge";
    check.applicable = true;
    const auto& rdf = result(Parameter::roman);
    long long v2 = static_cast<long long>(rdf.labeling->level(2).size());
    add(check, "gamma_qtR <= gamma_R + |V2|", value(Parameter::quasi_total_roman), "<=",
        rdf.value + v2);
    const auto& qtr = result(Parameter::quasi_total_roman);
    long long v1 = static_cast<long long>(qtr.labeling->level(1).size());
    add(check, "gamma_tR <= gamma_qtR + |V1'|", value(Parameter::total_roman), "<=",
        qtr.value + v1);
    return check;
}

BoundCheck BoundChecker::check_total_sandwich() {
    if (g_.order() < 2 || !g_.is_connected()) return not_applicable("total_sandwich");
    BoundCheck check;
    check.name = "total_sandwich";
    check.applicable = true;
    int gt = value(Parameter::total_domination);
    int qtr = value(Parameter::quasi_total_roman);
    add(check, "gamma_t <= gamma_qtR", gt, "<=", qtr);
    add(check, "gamma_qtR <= 2*gamma_t", qtr, "<=", 2LL * gt);
    add(check, "gamma_qtR == gamma_t  iff  P2", qtr == gt, "<=>", is_p2(g_));
    add(check, "gamma_qtR == gamma_t+1  iff  gamma_qtR == 3", qtr == gt + 1, "<=>",
        qtr == 3);
    add(check, "gamma_qtR == 2*gamma_t  iff  gamma_qtR == gamma_tR == 2*gamma_t",
        qtr == 2 * gt, "<=>",
        qtr == value(Parameter::total_roman) && value(Parameter::total_roman) == 2 * gt);
    return check;
}

BoundCheck BoundChecker::check_gamma_bounds() {
    if (g_.order() < 1 || g_.has_isolated_vertex()) return not_applicable("gamma_bounds");
    BoundCheck check;
    check.name = "gamma_bounds";
    check.applicable = true;
    const auto& qtr = result(Parameter::quasi_total_roman);
    long long gamma = value(Parameter::domination);
    long long v2 = static_cast<long long>(qtr.labeling->level(2).size());
    long long v12 = static_cast<long long>(v12_star(g_, *qtr.labeling).size());
    add(check, "gamma + |V2| + |V12*| <= gamma_qtR", gamma + v2 + v12, "<=", qtr.value);
    add(check, "gamma_qtR <= 3*gamma", qtr.value, "<=", 3 * gamma);
    return check;
}

BoundCheck BoundChecker::check_maxdeg() {
    if (g_.max_degree() < 2) return not_applicable("maxdeg");
    BoundCheck check;
    check.name = "maxdeg";
    check.applicable = true;
    long long n = g_.order(), delta = g_.max_degree();
    int qtr = value(Parameter::quasi_total_roman);
    add(check, "ceil(2n/Delta) <= gamma_qtR", (2 * n + delta - 1) / delta, "<=", qtr);
    add(check, "gamma_qtR <= n - Delta + 2", qtr, "<=", n - delta + 2);
    return check;
}

BoundCheck BoundChecker::check_small_values() {
    if (g_.order() < 3 || !g_.is_connected()) return not_applicable("small_values");
    BoundCheck check;
    check.name = "small_values";
    check.applicable = true;
    const long long n = g_.order();
    int qtr = value(Parameter::quasi_total_roman);
    add(check, "3 <= gamma_qtR", 3, "<=", qtr);
    add(check, "gamma_qtR <= n", qtr, "<=", n);
    add(check, "gamma_qtR == 3  iff  Delta == n-1", qtr == 3, "<=>",
        g_.max_degree() == n - 1);
    add(check, "gamma_qtR == 4  iff  gamma == gamma_t == 2", qtr == 4, "<=>",
        value(Parameter::domination) == 2 && value(Parameter::total_domination) == 2);
    add(check, "gamma_qtR == n  iff  path or cycle", qtr == n, "<=>",
        is_path_graph(g_) || is_cycle_graph(g_));
    return check;
}

BoundCheck BoundChecker::check_packing() {
    if (g_.order() < 1) return not_applicable("packing");
    BoundCheck check;
    check.name = "packing";
    check.applicable = true;
    long long n = g_.order(), delta_min = g_.min_degree();
    int qtr = value(Parameter::quasi_total_roman);
    int rho = value(Parameter::packing);
    add(check, "gamma_qtR <= n - rho*(delta-2)", qtr, "<=", n - rho * (delta_min - 2));
    if (g_.order() <= opts_.subset_cap) {
        if (!efficient_) efficient_ = efficient_dominating_set(g_, opts_).has_value();
        if (*efficient_)
            add(check, "gamma_qtR <= 3*rho (efficient domination graph)", qtr, "<=",
                3LL * rho);
    } else if (check.witness.empty()) {
        check.witness = "efficient domination test skipped (subset cap)";
    }
    return check;
}

BoundCheck BoundChecker::check_nordhaus_gaddum() {
    if (g_.order() < 4) return not_applicable("nordhaus_gaddum");
    BoundCheck check;
    check.name = "nordhaus_gaddum";
    check.applicable = true;
    const long long n = g_.order();
    long long sum = value(Parameter::quasi_total_roman) + complement_qtr();
    add(check, "7 <= sum", 7, "<=", sum);
    add(check, "sum <= n+5", sum, "<=", n + 5);
    add(check, "sum == 7  iff  K4/-K4/K4-e/-K4-e/F1/F1'", sum == 7, "<=>",
        in_nordhaus_equality_class(g_));
    add(check, "sum == n+5  iff  C5", sum == n + 5, "<=>", is_c5(g_));
    return check;
}

BoundReport BoundChecker::run(std::string graph_id, unsigned mask) {
    BoundReport report;
    report.graph_id = std::move(graph_id);
    auto push = [&](Check c, BoundCheck&& b) {
        if (!(mask & static_cast<unsigned>(c))) return;
        if (b.applicable) report.all_hold = report.all_hold && b.holds;
        report.checks.push_back(std::move(b));
    };
    push(Check::chain, check_chain());
    push(Check::v2_bridge, check_v2_bridge());
    push(Check::total_sandwich, check_total_sandwich());
    push(Check::gamma_bounds, check_gamma_bounds());
    push(Check::maxdeg, check_maxdeg());
    push(Check::small_values, check_small_values());
    push(Check::packing, check_packing());
    push(Check::nordhaus_gaddum, check_nordhaus_gaddum());
    return report;
}

// ---------------------------------------------------------------------------
// check selection
// ---------------------------------------------------------------------------

namespace {

const std::vector<std::pair<std::string, Check>> kCheckNames = {
    {"chain", Check::chain},
    {"v2_bridge", Check::v2_bridge},
    {"total_sandwich", Check::total_sandwich},
    {"gamma_bounds", Check::gamma_bounds},
    {"maxdeg", Check::maxdeg},
    {"small_values", Check::small_values},
    {"packing", Check::packing},
    {"nordhaus_gaddum", Check::nordhaus_gaddum},
};

}  // namespace

unsigned check_mask_from_names(const std::string& comma_separated) {
    if (comma_separated.empty() || comma_separated == "all") return kAllChecks;
    unsigned mask = 0;
    std::istringstream stream(comma_separated);
    std::string name;
    while (std::getline(stream, name, ',')) {
        bool found = false;
        for (const auto& [known, bit] : kCheckNames)
            if (known == name) {
                mask |= static_cast<unsigned>(bit);
                found = true;
            }
        if (!found) throw std::invalid_argument("unknown check '" + name + "'");
    }
    return mask;
}

std::vector<std::string> check_names(unsigned mask) {
    std::vector<std::string> names;
    for (const auto& [name, bit] : kCheckNames)
        if (mask & static_cast<unsigned>(bit)) names.push_back(name);
    return names;
}

// ---------------------------------------------------------------------------
// exhaustive enumeration
// ---------------------------------------------------------------------------

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return Graph(n, edges);
}

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QTRD_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

EnumerationResult enumerate_and_check(int n, unsigned mask, bool connected_only,
                                      int threads, bool allow_deep,
                                      const SolveOptions& opts) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumeration supports 1 <= n <= 7");
    if (n == 7 && !allow_deep)
        throw std::invalid_argument("n == 7 enumerates 2^21 graphs; pass the deep flag");

    const int pairs = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << pairs;
    const int workers = worker_count(threads);

    struct Shard {
        std::uint64_t checked = 0;
        std::map<std::string, std::uint64_t> applicable;
        std::vector<EnumerationViolation> violations;
    };
    std::vector<Shard> shards(static_cast<std::size_t>(workers));

    auto run_shard = [&](int shard_id) {
        Shard& shard = shards[shard_id];
        for (std::uint64_t m = shard_id; m < total; m += workers) {
            Graph g = graph_from_edge_mask(n, m);
            if (connected_only && !g.is_connected()) continue;
            ++shard.checked;
            BoundChecker checker(g, opts);
            BoundReport report = checker.run("", mask);
            for (const auto& check : report.checks) {
                if (!check.applicable) continue;
                ++shard.applicable[check.name];
                if (!check.holds)
                    shard.violations.push_back({m, check.name, check.witness});
            }
        }
    };

    if (workers == 1) {
        run_shard(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(run_shard, t);
        for (auto& th : pool) th.join();
    }

    EnumerationResult result;
    result.n = n;
    result.connected_only = connected_only;
    result.checks = mask;
    for (const auto& shard : shards) {
        result.graphs_checked += shard.checked;
        for (const auto& [name, count] : shard.applicable)
            result.applicable_counts[name] += count;
        result.violations.insert(result.violations.end(), shard.violations.begin(),
                                 shard.violations.end());
    }
    std::sort(result.violations.begin(), result.violations.end(),
              [](const EnumerationViolation& a, const EnumerationViolation& b) {
                  return a.edge_mask != b.edge_mask ? a.edge_mask < b.edge_mask
                                                    : a.check < b.check;
              });
    return result;
}

}  // namespace qtrd
