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

#include "qtrd/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtrd/graph_io.hpp"
#include "qtrd/solvers.hpp"

namespace qtrd {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// gadget edges relative to a block starting at `off`, plus local names
const std::vector<Edge> kGadgetEdges = {
    {0, 1}, {0, 2}, {0, 3},            // w - w1, w2, w3
    {1, 4}, {4, 5},                    // w1 - x' - x
    {1, 6}, {1, 7},                    // leaves of w1
    {2, 8}, {2, 9}, {2, 10},           // leaves of w2
    {3, 11}, {3, 12}, {3, 13},         // leaves of w3
};
const std::vector<std::string> kGadgetNames = {
    "w", "w1", "w2", "w3", "x'", "x",
    "w1.a1", "w1.a2", "w2.a1", "w2.a2", "w2.a3", "w3.a1", "w3.a2", "w3.a3",
};

void append_gadget(std::vector<Edge>& edges, std::vector<std::string>& names, int off,
                   const std::string& prefix) {
    for (auto [u, v] : kGadgetEdges) edges.emplace_back(off + u, off + v);
    for (const auto& local : kGadgetNames) names.push_back(prefix + local);
}

}  // namespace

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph star_graph(int n) {
    require(n >= 1, "star needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, edges);
}

Graph empty_graph(int n) {
    require(n >= 0, "negative order");
    return Graph(n);
}

Graph gadget_h() {
    return Graph(14, kGadgetEdges, kGadgetNames);
}

Graph g1(int t) {
    require(t >= 1, "g1 needs t >= 1");
    std::vector<Edge> edges;
    std::vector<std::string> names = {"u"};
    for (int c = 0; c < t; ++c) {
        int off = 1 + 14 * c;
        append_gadget(edges, names, off, "copy" + std::to_string(c) + ".");
        edges.emplace_back(0, off);  // u - w of this copy
    }
    return Graph(14 * t + 1, edges, std::move(names));
}

Graph g2k(const Graph& base, int k) {
    require(k >= 3, "g2k needs k >= 3");
    require(base.order() >= 1 && base.min_degree() >= 2, "g2k base needs minimum degree 2");
    const int n = base.order();
    const auto base_edges = base.edges();
    const int m = static_cast<int>(base_edges.size());

    std::vector<Edge> edges;
    std::vector<std::string> names;
    for (Vertex v = 0; v < n; ++v) names.push_back("b" + std::to_string(v));
    for (int i = 0; i < m; ++i) {
        auto [u, v] = base_edges[i];
        Vertex x = n + 2 * i, z = n + 2 * i + 1;
        edges.emplace_back(u, x);
        edges.emplace_back(x, z);
        edges.emplace_back(z, v);
        names.push_back("e" + std::to_string(i) + ".x");
        names.push_back("e" + std::to_string(i) + ".z");
    }
    for (Vertex v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j) {
            edges.emplace_back(v, n + 2 * m + v * k + j);
            names.push_back("p" + std::to_string(v) + "." + std::to_string(j));
        }
    return Graph(n + 2 * m + n * k, edges, std::move(names));
}

Graph gprime_k(const Graph& base, int k) {
    require(k >= 3, "gprime_k needs k >= 3");
    require(base.order() >= 1 && base.min_degree() >= 2,
            "gprime_k base needs minimum degree 2");
    const int n = base.order();

    std::vector<Edge> edges = base.edges();
    std::vector<std::string> names;
    for (Vertex v = 0; v < n; ++v) names.push_back("b" + std::to_string(v));
    for (Vertex v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j)
            names.push_back("p" + std::to_string(v) + "." + std::to_string(j));
    for (Vertex v = 0; v < n; ++v) names.push_back("s" + std::to_string(v));

    for (Vertex v = 0; v < n; ++v) {
        Vertex sub = n + n * k + v;
        // the first pendant edge of each vertex is the subdivided one
        edges.emplace_back(v, sub);
        edges.emplace_back(sub, n + v * k);
        for (int j = 1; j < k; ++j) edges.emplace_back(v, n + v * k + j);
    }
    return Graph(n * (k + 1) + n, edges, std::move(names));
}

Graph g3k(const Graph& base, int k) {
    require(k >= 3, "g3k needs k >= 3");
    require(base.order() >= 1 && base.min_degree() >= 3, "g3k base needs minimum degree 3");
    const int n = base.order();
    const auto base_edges = base.edges();
    const int m = static_cast<int>(base_edges.size());

    std::vector<Edge> edges;
    std::vector<std::string> names;
    for (Vertex v = 0; v < n; ++v) names.push_back("b" + std::to_string(v));
    for (int i = 0; i < m; ++i) {
        auto [u, v] = base_edges[i];
        Vertex a = n + 3 * i, b = a + 1, c = a + 2;
        edges.emplace_back(u, a);
        edges.emplace_back(a, b);
        edges.emplace_back(b, c);
        edges.emplace_back(c, v);
        names.push_back("e" + std::to_string(i) + ".a");
        names.push_back("e" + std::to_string(i) + ".mid");
        names.push_back("e" + std::to_string(i) + ".c");
    }
    for (Vertex v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j) {
            edges.emplace_back(v, n + 3 * m + v * k + j);
            names.push_back("p" + std::to_string(v) + "." + std::to_string(j));
        }
    return Graph(n * (k + 1) + 3 * m, edges, std::move(names));
}

Graph reduction_gprime(const Graph& base) {
    const int n = base.order();
    require(n >= 1, "reduction needs a nonempty base");
    std::vector<Edge> edges = base.edges();
    std::vector<std::string> names;
    for (Vertex v = 0; v < n; ++v) names.push_back("z" + std::to_string(v));
    for (Vertex z = 0; z < n; ++z) {
        int off = n + 14 * z;
        append_gadget(edges, names, off, "copy" + std::to_string(z) + ".");
        edges.emplace_back(z, off);
    }
    return Graph(15 * n, edges, std::move(names));
}

Graph f1_member(int n, int pendant_count) {
    require(n >= 4, "f1 member needs n >= 4");
    require(pendant_count >= 1 && pendant_count <= n - 1,
            "pendant count must be in [1, n-1]");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
    for (Vertex u = pendant_count + 1; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph figure1_graph() {
    std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6},
                               {0, 7}, {7, 8}, {0, 9}, {0, 10}, {0, 11}, {0, 12}};
    std::vector<std::string> names = {"c",        "arm0.mid", "arm0.end", "arm1.mid",
                                      "arm1.end", "arm2.mid", "arm2.end", "arm3.mid",
                                      "arm3.end", "leaf0",    "leaf1",    "leaf2",
                                      "leaf3"};
    return Graph(13, edges, std::move(names));
}

// ---------------------------------------------------------------------------
// recipes
// ---------------------------------------------------------------------------

namespace {

const std::map<std::string, GraphRecipe::Family> kFamilyNames = {
    {"path", GraphRecipe::Family::path},
    {"cycle", GraphRecipe::Family::cycle},
    {"complete", GraphRecipe::Family::complete},
    {"star", GraphRecipe::Family::star},
    {"empty", GraphRecipe::Family::empty},
    {"gadget_h", GraphRecipe::Family::gadget_h},
    {"g1", GraphRecipe::Family::g1},
    {"g2k", GraphRecipe::Family::g2k},
    {"gprime_k", GraphRecipe::Family::gprime_k},
    {"gprimek", GraphRecipe::Family::gprime_k},
    {"g3k", GraphRecipe::Family::g3k},
    {"reduction", GraphRecipe::Family::reduction_gprime},
    {"reduction_gprime", GraphRecipe::Family::reduction_gprime},
    {"f1", GraphRecipe::Family::f1_member},
    {"f1_member", GraphRecipe::Family::f1_member},
    {"figure1", GraphRecipe::Family::figure1},
};

std::string family_name(GraphRecipe::Family f) {
    switch (f) {
        case GraphRecipe::Family::path: return "path";
        case GraphRecipe::Family::cycle: return "cycle";
        case GraphRecipe::Family::complete: return "complete";
        case GraphRecipe::Family::star: return "star";
        case GraphRecipe::Family::empty: return "empty";
        case GraphRecipe::Family::gadget_h: return "gadget_h";
        case GraphRecipe::Family::g1: return "g1";
        case GraphRecipe::Family::g2k: return "g2k";
        case GraphRecipe::Family::gprime_k: return "gprime_k";
        case GraphRecipe::Family::g3k: return "g3k";
        case GraphRecipe::Family::reduction_gprime: return "reduction";
        case GraphRecipe::Family::f1_member: return "f1";
        case GraphRecipe::Family::figure1: return "figure1";
    }
    throw std::logic_error("unknown family");
}

bool is_classic(GraphRecipe::Family f) {
    using F = GraphRecipe::Family;
    return f == F::path || f == F::cycle || f == F::complete || f == F::star ||
           f == F::empty;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

std::string GraphRecipe::to_string() const {
    std::string out = family_name(family);
    if (is_classic(family)) return "classic:" + out + ":" + std::to_string(params.at("n"));
    std::string sep = ":";
    if (base) {
        out += sep + "base=" + base->to_string();
        sep = ",";
    } else if (!base_file.empty()) {
        out += sep + "base=@" + base_file;
        sep = ",";
    }
    for (const auto& [key, value] : params) {
        out += sep + key + "=" + std::to_string(value);
        sep = ",";
    }
    return out;
}

bool looks_like_recipe(const std::string& text) {
    std::string head = text.substr(0, text.find(':'));
    return head == "classic" || kFamilyNames.count(head) > 0;
}

GraphRecipe parse_recipe(const std::string& text) {
    std::string body = text;
    if (body.rfind("classic:", 0) == 0) body = body.substr(8);

    std::size_t colon = body.find(':');
    std::string head = body.substr(0, colon);
    auto it = kFamilyNames.find(head);
    if (it == kFamilyNames.end())
        throw std::invalid_argument("unknown graph family '" + head + "'");

    GraphRecipe recipe;
    recipe.family = it->second;
    std::string rest = colon == std::string::npos ? "" : body.substr(colon + 1);

    if (is_classic(recipe.family)) {
        if (rest.empty()) throw std::invalid_argument("classic family needs an order");
        recipe.params["n"] = std::stol(rest);
        return recipe;
    }
    if (rest.empty()) return recipe;

    // key=value pairs; the base recipe may itself contain ':' but no ','
    for (const std::string& part : split(rest, ',')) {
        std::size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value in recipe, got '" + part + "'");
        std::string key = part.substr(0, eq);
        std::string value = part.substr(eq + 1);
        if (key == "base") {
            if (!value.empty() && value[0] == '@')
                recipe.base_file = value.substr(1);
            else
                recipe.base = std::make_shared<GraphRecipe>(parse_recipe(value));
        } else {
            recipe.params[key] = std::stol(value);
        }
    }
    return recipe;
}

namespace {

Graph build_base(const GraphRecipe& recipe) {
    if (recipe.base) return build(*recipe.base);
    if (!recipe.base_file.empty()) return read_graph_file(recipe.base_file);
    throw std::invalid_argument("recipe '" + recipe.to_string() + "' needs a base graph");
}

long param_or_throw(const GraphRecipe& recipe, const std::string& key) {
    auto it = recipe.params.find(key);
    if (it == recipe.params.end())
        throw std::invalid_argument("recipe '" + recipe.to_string() + "' misses parameter '" +
                                    key + "'");
    return it->second;
}

}  // namespace

Graph build(const GraphRecipe& recipe) {
    using F = GraphRecipe::Family;
    switch (recipe.family) {
        case F::path: return path_graph(static_cast<int>(param_or_throw(recipe, "n")));
        case F::cycle: return cycle_graph(static_cast<int>(param_or_throw(recipe, "n")));
        case F::complete:
            return complete_graph(static_cast<int>(param_or_throw(recipe, "n")));
        case F::star: return star_graph(static_cast<int>(param_or_throw(recipe, "n")));
        case F::empty: return empty_graph(static_cast<int>(param_or_throw(recipe, "n")));
        case F::gadget_h: return gadget_h();
        case F::g1: return g1(static_cast<int>(param_or_throw(recipe, "t")));
        case F::g2k:
            return g2k(build_base(recipe), static_cast<int>(param_or_throw(recipe, "k")));
        case F::gprime_k:
            return gprime_k(build_base(recipe),
                            static_cast<int>(param_or_throw(recipe, "k")));
        case F::g3k:
            return g3k(build_base(recipe), static_cast<int>(param_or_throw(recipe, "k")));
        case F::reduction_gprime: return reduction_gprime(build_base(recipe));
        case F::f1_member:
            return f1_member(static_cast<int>(param_or_throw(recipe, "n")),
                             static_cast<int>(param_or_throw(recipe, "p")));
        case F::figure1: return figure1_graph();
    }
    throw std::logic_error("unknown family");
}

// ---------------------------------------------------------------------------
// paper labelings
// ---------------------------------------------------------------------------

RomanLabeling reduction_fprime(const Graph& base, const RomanLabeling& base_rdf) {
    const int n = base.order();
    if (base_rdf.size() != n)
        throw std::invalid_argument("base labeling length mismatch");
    if (!is_rdf(base, base_rdf))
        throw std::invalid_argument("base labeling is not an RDF");
    RomanLabeling f = RomanLabeling::uniform(15 * n, 0);
    for (Vertex v = 0; v < n; ++v) f.values[v] = base_rdf.values[v];
    for (Vertex z = 0; z < n; ++z) {
        int off = n + 14 * z;
        f.values[off + 0] = 1;  // w
        f.values[off + 1] = 2;  // w1
        f.values[off + 2] = 2;  // w2
        f.values[off + 3] = 2;  // w3
        f.values[off + 5] = 1;  // x
    }
    return f;
}

std::map<std::string, RomanLabeling> paper_labelings(const GraphRecipe& recipe) {
    using F = GraphRecipe::Family;
    std::map<std::string, RomanLabeling> out;

    switch (recipe.family) {
        case F::g1: {
            int t = static_cast<int>(param_or_throw(recipe, "t"));
            const int n = 14 * t + 1;
            RomanLabeling f1 = RomanLabeling::uniform(n, 0);
            f1.values[0] = 1;  // u
            for (int c = 0; c < t; ++c) {
                int off = 1 + 14 * c;
                f1.values[off + 1] = f1.values[off + 2] = f1.values[off + 3] = 2;
                f1.values[off + 5] = 1;  // x
            }
            RomanLabeling f3 = f1;
            for (int c = 0; c < t; ++c) f3.values[1 + 14 * c] = 1;  // + w
            RomanLabeling f2 = f3;
            for (int c = 0; c < t; ++c) f2.values[1 + 14 * c + 4] = 1;  // + x'
            out["f1"] = std::move(f1);
            out["f2"] = std::move(f2);
            out["f3"] = std::move(f3);
            return out;
        }
        case F::g2k: {
            Graph base = build_base(recipe);
            int k = static_cast<int>(param_or_throw(recipe, "k"));
            Graph g = g2k(base, k);
            const int n = base.order();
            RomanLabeling rdf = RomanLabeling::uniform(g.order(), 0);
            for (Vertex v = 0; v < n; ++v) rdf.values[v] = 2;
            RomanLabeling qtr = rdf;
            for (Vertex v = 0; v < n; ++v)
                qtr.values[g.neighbors(v).front()] =
                    std::max<std::uint8_t>(qtr.values[g.neighbors(v).front()], 1);
            out["rdf_2n"] = std::move(rdf);
            out["qtrdf_3n"] = std::move(qtr);
            return out;
        }
        case F::gprime_k: {
            Graph base = build_base(recipe);
            int k = static_cast<int>(param_or_throw(recipe, "k"));
            const int n = base.order();
            const int order = n * (k + 1) + n;
            RomanLabeling qtr = RomanLabeling::uniform(order, 0);
            for (Vertex v = 0; v < n; ++v) {
                qtr.values[v] = 2;
                qtr.values[n + v * k] = 1;  // the far pendant behind the subdivision
            }
            RomanLabeling trd = qtr;
            for (Vertex v = 0; v < n; ++v) trd.values[n + n * k + v] = 1;  // s_v
            out["qtrdf_3n"] = std::move(qtr);
            out["trdf_4n"] = std::move(trd);
            return out;
        }
        case F::g3k: {
            Graph base = build_base(recipe);
            int k = static_cast<int>(param_or_throw(recipe, "k"));
            Graph g = g3k(base, k);
            const int n = base.order();
            const int m = static_cast<int>(base.size());
            RomanLabeling qtr = RomanLabeling::uniform(g.order(), 0);
            for (Vertex v = 0; v < n; ++v) {
                qtr.values[v] = 2;
                qtr.values[g.neighbors(v).front()] =
                    std::max<std::uint8_t>(qtr.values[g.neighbors(v).front()], 1);
            }
            for (int i = 0; i < m; ++i) qtr.values[n + 3 * i + 1] = 1;  // path midpoints
            out["qtrdf_3n_plus_m"] = std::move(qtr);
            return out;
        }
        case F::reduction_gprime: {
            Graph base = build_base(recipe);
            RomanLabeling base_rdf = *brute_force(base, Parameter::roman).labeling;
            out["f_prime"] = reduction_fprime(base, base_rdf);
            return out;
        }
        case F::figure1: {
            RomanLabeling left = RomanLabeling::uniform(13, 0);
            left.values[0] = 2;
            for (Vertex v = 1; v <= 8; ++v) left.values[v] = 1;
            RomanLabeling right = RomanLabeling::uniform(13, 0);
            right.values[0] = 2;
            for (Vertex v : {1, 3, 5, 7}) right.values[v] = 2;
            RomanLabeling eff = RomanLabeling::uniform(13, 0);
            eff.values[0] = 2;
            for (Vertex v : {2, 4, 6, 8}) eff.values[v] = 1;
            eff.values[12] = 1;  // one center leaf keeps the 2 company
            out["fig1_left"] = std::move(left);
            out["fig1_right"] = std::move(right);
            out["fig2"] = std::move(eff);
            return out;
        }
        default:
            throw std::invalid_argument("no stock labelings for recipe '" +
                                        recipe.to_string() + "'");
    }
}

}  // namespace qtrd
