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

#include <doctest.h>

#include <random>

#include "qtrd/bounds.hpp"
#include "qtrd/families.hpp"
#include "qtrd/random_graphs.hpp"

using namespace qtrd;

namespace {

BoundCheck run_one(const Graph& g, BoundCheck (BoundChecker::*method)()) {
    BoundChecker checker(g);
    return (checker.*method)();
}

}  // namespace

TEST_CASE("recognizers") {
    CHECK(is_path_graph(path_graph(1)));
    CHECK(is_path_graph(path_graph(6)));
    CHECK(!is_path_graph(cycle_graph(6)));
    CHECK(is_cycle_graph(cycle_graph(3)));
    CHECK(!is_cycle_graph(disjoint_union(cycle_graph(3), cycle_graph(3))));
    CHECK(is_p2(path_graph(2)));
    CHECK(is_c5(cycle_graph(5)));
    CHECK(!is_c5(path_graph(5)));
    CHECK(is_k4_minus_e(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})));
    CHECK(!is_k4_minus_e(complete_graph(4)));
    CHECK(in_family_f1(star_graph(5)));
    CHECK(in_family_f1(f1_member(6, 2)));
    CHECK(!in_family_f1(complete_graph(5)));  // every vertex has full degree
    CHECK(in_family_f1_prime(star_graph(5).complement()));
}

TEST_CASE("f1 recognizer accepts every generated member") {
    for (int n = 4; n <= 8; ++n)
        for (int p = 1; p <= n - 1; ++p) {
            CHECK(in_family_f1(f1_member(n, p)));
            CHECK(in_family_f1_prime(f1_member(n, p).complement()));
            CHECK(in_nordhaus_equality_class(f1_member(n, p)));
        }
}

TEST_CASE("chain check") {
    CHECK(run_one(cycle_graph(5), &BoundChecker::check_chain).holds);
    CHECK(run_one(complete_graph(4), &BoundChecker::check_chain).holds);
    CHECK(run_one(path_graph(2), &BoundChecker::check_chain).holds);
    CHECK(!run_one(disjoint_union(path_graph(2), empty_graph(1)), &BoundChecker::check_chain)
               .applicable);
}

TEST_CASE("v2 bridge check and its equality families") {
    BoundChecker g2(g2k(cycle_graph(3), 3));
    BoundCheck bridge = g2.check_v2_bridge();
    CHECK(bridge.holds);
    // gamma_qtR = gamma_R + |V2| holds with equality here: 9 = 6 + 3
    CHECK(bridge.comparisons[0].lhs == 9);
    CHECK(bridge.comparisons[0].rhs == 9);

    BoundChecker gp(gprime_k(cycle_graph(3), 3));
    BoundCheck bridge2 = gp.check_v2_bridge();
    CHECK(bridge2.holds);
    // gamma_tR = gamma_qtR + |V1'| holds with equality here: 12 = 9 + 3
    CHECK(bridge2.comparisons[1].lhs == 12);
    CHECK(bridge2.comparisons[1].rhs == 12);

    CHECK(run_one(complete_graph(5), &BoundChecker::check_v2_bridge).holds);
}

TEST_CASE("total sandwich check") {
    CHECK(run_one(path_graph(2), &BoundChecker::check_total_sandwich).holds);
    CHECK(run_one(complete_graph(7), &BoundChecker::check_total_sandwich).holds);
    CHECK(run_one(cycle_graph(6), &BoundChecker::check_total_sandwich).holds);
    CHECK(!run_one(empty_graph(3), &BoundChecker::check_total_sandwich).applicable);
}

TEST_CASE("gamma bounds check") {
    BoundCheck c6 = run_one(cycle_graph(6), &BoundChecker::check_gamma_bounds);
    CHECK(c6.holds);
    CHECK(c6.comparisons[1].lhs == 6);  // gamma_qtR = 6 = 3*gamma, tight
    CHECK(c6.comparisons[1].rhs == 6);
    BoundCheck star = run_one(star_graph(7), &BoundChecker::check_gamma_bounds);
    CHECK(star.holds);
    CHECK(run_one(path_graph(5), &BoundChecker::check_gamma_bounds).holds);
}

TEST_CASE("max degree check") {
    BoundCheck c8 = run_one(cycle_graph(8), &BoundChecker::check_maxdeg);
    CHECK(c8.holds);
    CHECK(c8.comparisons[0].lhs == 8);  // both sides tight on cycles
    CHECK(c8.comparisons[1].rhs == 8);
    CHECK(run_one(complete_graph(6), &BoundChecker::check_maxdeg).holds);
    CHECK(!run_one(path_graph(2), &BoundChecker::check_maxdeg).applicable);

    // the Petersen graph: ceil(2n/Delta) = 7 <= gamma_qtR <= 9
    Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    BoundCheck p = run_one(petersen, &BoundChecker::check_maxdeg);
    CHECK(p.holds);
    CHECK(p.comparisons[0].lhs == 7);
}

TEST_CASE("small values check") {
    CHECK(run_one(star_graph(5), &BoundChecker::check_small_values).holds);
    CHECK(run_one(cycle_graph(4), &BoundChecker::check_small_values).holds);
    CHECK(run_one(path_graph(7), &BoundChecker::check_small_values).holds);
    CHECK(!run_one(path_graph(2), &BoundChecker::check_small_values).applicable);
    CHECK(!run_one(disjoint_union(cycle_graph(3), cycle_graph(3)),
                   &BoundChecker::check_small_values)
               .applicable);
}

TEST_CASE("packing check") {
    BoundCheck k5 = run_one(complete_graph(5), &BoundChecker::check_packing);
    CHECK(k5.holds);
    CHECK(k5.comparisons[0].lhs == 3);  // gamma_qtR = 3 = n - rho(delta-2), tight
    CHECK(k5.comparisons[0].rhs == 3);
    BoundCheck c6 = run_one(cycle_graph(6), &BoundChecker::check_packing);
    CHECK(c6.holds);
    // C6 admits an efficient dominating set, so the 3*rho bound applies too
    REQUIRE(c6.comparisons.size() == 2);
    CHECK(c6.comparisons[1].rhs == 6);
}

TEST_CASE("f1 members attain the complement-sum lower extreme") {
    for (auto [n, p] : {std::pair{4, 1}, {5, 2}, {4, 3}}) {
        Graph g = f1_member(n, p);
        int sum = qtrd_disconnected(g).value + qtrd_disconnected(g.complement()).value;
        CHECK(sum == 7);
    }
}

TEST_CASE("nordhaus-gaddum check") {
    CHECK(run_one(complete_graph(4), &BoundChecker::check_nordhaus_gaddum).holds);
    BoundCheck c5 = run_one(cycle_graph(5), &BoundChecker::check_nordhaus_gaddum);
    CHECK(c5.holds);
    CHECK(c5.comparisons[1].lhs == 10);  // the n+5 extreme
    CHECK(run_one(path_graph(4), &BoundChecker::check_nordhaus_gaddum).holds);
    CHECK(run_one(f1_member(6, 2), &BoundChecker::check_nordhaus_gaddum).holds);
    CHECK(run_one(star_graph(4), &BoundChecker::check_nordhaus_gaddum).holds);
    CHECK(!run_one(path_graph(3), &BoundChecker::check_nordhaus_gaddum).applicable);
}

TEST_CASE("reports aggregate applicability") {
    BoundChecker checker(cycle_graph(5));
    BoundReport report = checker.run("c5");
    CHECK(report.all_hold);
    CHECK(report.graph_id == "c5");
    CHECK(report.checks.size() == 8);
    for (const auto& check : report.checks) CHECK(check.applicable);
}

TEST_CASE("exhaustive n=4 run finds no violations") {
    EnumerationResult result = enumerate_and_check(4, kAllChecks, false);
    CHECK(result.graphs_checked == 64);
    CHECK(result.violations.empty());
}

TEST_CASE("exhaustive n=5 small-values run over connected graphs") {
    EnumerationResult result = enumerate_and_check(
        5, static_cast<unsigned>(Check::small_values), true);
    CHECK(result.violations.empty());
    CHECK(result.graphs_checked < 1024);  // the filter really dropped some graphs
    CHECK(result.applicable_counts.at("small_values") == result.graphs_checked);
}

TEST_CASE("enumeration is independent of the worker count") {
    EnumerationResult one = enumerate_and_check(4, kAllChecks, false, 1);
    EnumerationResult four = enumerate_and_check(4, kAllChecks, false, 4);
    CHECK(one.graphs_checked == four.graphs_checked);
    CHECK(one.applicable_counts == four.applicable_counts);
    CHECK(one.violations.size() == four.violations.size());
}

TEST_CASE("enumeration guards its limits") {
    CHECK_THROWS_AS((void)enumerate_and_check(8, kAllChecks, false), std::invalid_argument);
    CHECK_THROWS_AS((void)enumerate_and_check(7, kAllChecks, false), std::invalid_argument);
}

TEST_CASE("check selection parsing") {
    CHECK(check_mask_from_names("all") == kAllChecks);
    CHECK(check_mask_from_names("chain,maxdeg") ==
          (static_cast<unsigned>(Check::chain) | static_cast<unsigned>(Check::maxdeg)));
    CHECK_THROWS_AS((void)check_mask_from_names("nope"), std::invalid_argument);
    CHECK(check_names(kAllChecks).size() == 8);
}

TEST_CASE("randomized corpus finds no violations") {
    std::mt19937_64 rng(73);
    for (int n : {7, 9}) {
        for (double p : {0.25, 0.6}) {
            for (int i = 0; i < 4; ++i) {
                Graph g = random_gnp(n, p, rng());
                BoundChecker checker(g);
                BoundReport report = checker.run("gnp");
                CHECK(report.all_hold);
            }
        }
    }
}
