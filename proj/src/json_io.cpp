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

#include "qtrd/json_io.hpp"

namespace qtrd {

using nlohmann::json;

json to_json(const ParamResult& result, bool include_timing) {
    json out;
    out["parameter"] = to_string(result.parameter);
    out["value"] = result.value;
    if (result.labeling) out["certificate"] = format_labeling(*result.labeling);
    if (result.vertex_set) out["certificate"] = *result.vertex_set;
    out["nodes_explored"] = result.nodes_explored;
    if (include_timing)
        out["elapsed_ms"] = static_cast<std::int64_t>(result.elapsed.count() / 1000);
    out["exact"] = result.exact;
    return out;
}

json to_json(const GreedyTrace& trace) {
    json steps = json::array();
    for (const auto& step : trace.steps)
        steps.push_back({{"center", step.center},
                         {"support", step.support},
                         {"removed", step.removed}});
    return json{{"labeling", format_labeling(trace.labeling)},
                {"weight", trace.labeling.weight()},
                {"q", trace.steps.size()},
                {"leftover", trace.leftover},
                {"steps", steps}};
}

json to_json(const BoundCheck& check) {
    json cmps = json::array();
    for (const auto& cmp : check.comparisons)
        cmps.push_back({{"label", cmp.label},
                        {"lhs", cmp.lhs},
                        {"rel", cmp.rel},
                        {"rhs", cmp.rhs},
                        {"ok", cmp.ok}});
    json out{{"name", check.name},
             {"applicable", check.applicable},
             {"holds", check.holds},
             {"comparisons", cmps}};
    if (!check.witness.empty()) out["witness"] = check.witness;
    return out;
}

json to_json(const BoundReport& report) {
    json checks = json::array();
    for (const auto& check : report.checks) checks.push_back(to_json(check));
    return json{{"graph_id", report.graph_id},
                {"checks", checks},
                {"all_hold", report.all_hold}};
}

json to_json(const EnumerationResult& result) {
    json violations = json::array();
    for (const auto& v : result.violations)
        violations.push_back(
            {{"edge_mask", v.edge_mask}, {"check", v.check}, {"witness", v.witness}});
    return json{{"n", result.n},
                {"connected_only", result.connected_only},
                {"checks", check_names(result.checks)},
                {"graphs_checked", result.graphs_checked},
                {"applicable_counts", result.applicable_counts},
                {"violations", violations}};
}

}  // namespace qtrd
