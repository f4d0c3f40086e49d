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

#include "qtrd/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qtrd/bounds.hpp"
#include "qtrd/families.hpp"
#include "qtrd/graph_io.hpp"
#include "qtrd/greedy.hpp"
#include "qtrd/json_io.hpp"
#include "qtrd/labeling.hpp"
#include "qtrd/random_graphs.hpp"
#include "qtrd/solvers.hpp"

namespace qtrd {

namespace {

using nlohmann::json;

struct GlobalConfig {
    long budget_ms = 60'000;
    int labeling_cap = 15;
    int subset_cap = 20;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string output;
    bool omit_timing = false;

    SolveOptions solve_options() const {
        SolveOptions opts;
        opts.budget = std::chrono::milliseconds(budget_ms);
        opts.labeling_cap = labeling_cap;
        opts.subset_cap = subset_cap;
        return opts;
    }
};

/// `@path`, a recipe string, or a plain file path.
Graph load_graph(const std::string& input) {
    if (!input.empty() && input[0] == '@') return read_graph_file(input.substr(1));
    if (looks_like_recipe(input)) return build(parse_recipe(input));
    return read_graph_file(input);
}

std::string load_text(const std::string& input) {
    // inline digits or a file path
    if (input.find_first_not_of("012, \t") == std::string::npos) return input;
    std::ifstream in(input.empty() || input[0] != '@' ? input : input.substr(1));
    if (!in) throw std::runtime_error("cannot open '" + input + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void emit(const GlobalConfig& config, std::ostream& out, const std::string& text) {
    if (config.output.empty() || config.output == "-") {
        out << text;
        return;
    }
    std::ofstream file(config.output);
    if (!file) throw std::runtime_error("cannot open '" + config.output + "' for writing");
    file << text;
}

void emit_json(const GlobalConfig& config, std::ostream& out, json payload) {
    payload["schema_version"] = kSchemaVersion;
    emit(config, out, payload.dump(2) + "\n");
}

void revalidate(const Graph& g, const ParamResult& result) {
    // certificates are re-checked before leaving the process
    if (!certificate_valid(g, result))
        throw std::logic_error("internal error: invalid certificate for " +
                               to_string(result.parameter));
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

struct ComputeArgs {
    std::string input;
    std::string param = "gamma_qtR";
    bool all_params = false;
    bool use_brute_force = false;
};

int cmd_compute(const GlobalConfig& config, const ComputeArgs& args, std::ostream& out) {
    Graph g = load_graph(args.input);
    SolveOptions opts = config.solve_options();

    std::vector<Parameter> params;
    if (args.all_params)
        params = {Parameter::domination,      Parameter::total_domination,
                  Parameter::roman,           Parameter::total_roman,
                  Parameter::quasi_total_roman, Parameter::packing};
    else
        params.push_back(parameter_from_string(args.param));

    json results = json::array();
    bool exhausted = false;
    for (Parameter p : params) {
        try {
            ParamResult r = args.use_brute_force ? brute_force(g, p, opts)
                                                 : solve(g, p, opts);
            revalidate(g, r);
            results.push_back(to_json(r, !config.omit_timing));
        } catch (const BudgetExhausted& e) {
            results.push_back(to_json(e.best_known(), !config.omit_timing));
            exhausted = true;
        }
    }

    json payload{{"command", "compute"},
                 {"graph", {{"id", args.input}, {"order", g.order()}, {"size", g.size()}}},
                 {"results", results}};
    if (config.format == "text") {
        std::ostringstream text;
        for (const auto& r : results)
            text << r["parameter"].get<std::string>() << " = " << r["value"]
                 << (r["exact"].get<bool>() ? "" : " (budget exhausted, upper bound)")
                 << "\n";
        emit(config, out, text.str());
    } else {
        emit_json(config, out, payload);
    }
    return exhausted ? kExitBudgetExhausted : kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const GlobalConfig& config, const std::string& graph_input,
               const std::string& labeling_input, std::ostream& out) {
    Graph g = load_graph(graph_input);
    RomanLabeling f = parse_labeling(load_text(labeling_input));
    if (f.size() != g.order())
        throw std::invalid_argument("labeling has " + std::to_string(f.size()) +
                                    " entries for a graph of order " +
                                    std::to_string(g.order()));

    auto verdict = [](const LabelCheck& check) {
        json v{{"ok", check.ok}};
        if (check.witness) v["witness"] = *check.witness;
        return v;
    };
    json payload{{"command", "verify"}, {"weight", f.weight()}};
    payload["rdf"] = verdict(check_rdf(g, f));
    payload["qtrdf"] = verdict(check_qtrdf(g, f));
    if (g.has_isolated_vertex())
        payload["trdf"] = {{"error", "graph has an isolated vertex"}};
    else
        payload["trdf"] = verdict(check_trdf(g, f));

    if (config.format == "text") {
        std::ostringstream text;
        text << "weight " << f.weight() << "\n";
        for (const char* kind : {"rdf", "qtrdf", "trdf"}) {
            text << kind << ": ";
            if (payload[kind].contains("error"))
                text << "error (" << payload[kind]["error"].get<std::string>() << ")";
            else
                text << (payload[kind]["ok"].get<bool>() ? "true" : "false");
            if (payload[kind].contains("witness"))
                text << " (witness vertex " << payload[kind]["witness"] << ")";
            text << "\n";
        }
        emit(config, out, text.str());
    } else {
        emit_json(config, out, payload);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// greedy
// ---------------------------------------------------------------------------

int cmd_greedy(const GlobalConfig& config, const std::string& input, std::ostream& out) {
    Graph g = load_graph(input);
    GreedyTrace trace = greedy_qtrdf(g);
    json payload{{"command", "greedy"}, {"trace", to_json(trace)}};
    if (g.order() <= config.labeling_cap) {
        try {
            payload["exact_gamma_qtR"] =
                qtrd_disconnected(g, config.solve_options()).value;
        } catch (const BudgetExhausted&) {
            // leave the exact value out when the budget does not allow it
        }
    }
    if (config.format == "text") {
        std::ostringstream text;
        text << "greedy weight " << trace.labeling.weight() << " (q = "
             << trace.steps.size() << ", leftover " << trace.leftover.size() << ")\n";
        if (payload.contains("exact_gamma_qtR"))
            text << "exact gamma_qtR " << payload["exact_gamma_qtR"] << "\n";
        emit(config, out, text.str());
    } else {
        emit_json(config, out, payload);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

struct FamilyArgs {
    std::string recipe;  // full recipe string, or assembled from the flags below
    std::string name;
    std::string base;
    long k = -1, t = -1, n = -1, p = -1;
    bool emit_labelings = false;
};

int cmd_family(const GlobalConfig& config, const FamilyArgs& args, std::ostream& out) {
    std::string recipe_text = args.recipe;
    if (recipe_text.empty()) {
        if (args.name.empty())
            throw std::invalid_argument("family needs a recipe or --name");
        recipe_text = args.name;
        std::string sep = ":";
        if (!args.base.empty()) {
            recipe_text += sep + "base=" + args.base;
            sep = ",";
        }
        for (auto [key, value] : {std::pair{"k", args.k}, {"t", args.t}, {"n", args.n},
                                  {"p", args.p}})
            if (value >= 0) {
                recipe_text += sep + key + "=" + std::to_string(value);
                sep = ",";
            }
    }
    GraphRecipe recipe = parse_recipe(recipe_text);
    Graph g = build(recipe);

    if (!args.emit_labelings) {
        emit(config, out, format_graph(g));
        return kExitOk;
    }
    json labelings = json::object();
    for (const auto& [name, f] : paper_labelings(recipe))
        labelings[name] = {{"labeling", format_labeling(f)}, {"weight", f.weight()}};
    json payload{{"command", "family"},
                 {"recipe", recipe.to_string()},
                 {"order", g.order()},
                 {"size", g.size()},
                 {"edge_list", format_graph(g)},
                 {"labelings", labelings}};
    emit_json(config, out, payload);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify-bounds / enumerate
// ---------------------------------------------------------------------------

struct BoundsArgs {
    std::string graph;
    int enumerate_n = 0;
    std::vector<std::string> random_args;  // n p count seed
    std::string checks = "all";
    bool connected_only = false;
    bool deep = false;
};

int cmd_verify_bounds(const GlobalConfig& config, const BoundsArgs& args,
                      std::ostream& out) {
    unsigned mask = check_mask_from_names(args.checks);
    SolveOptions opts = config.solve_options();

    if (args.enumerate_n > 0) {
        EnumerationResult result = enumerate_and_check(args.enumerate_n, mask,
                                                       args.connected_only, 0, args.deep,
                                                       opts);
        emit_json(config, out, json{{"command", "verify-bounds"},
                                    {"enumeration", to_json(result)}});
        return result.violations.empty() ? kExitOk : kExitViolation;
    }

    std::vector<std::pair<std::string, Graph>> graphs;
    if (!args.graph.empty()) {
        graphs.emplace_back(args.graph, load_graph(args.graph));
    } else if (!args.random_args.empty()) {
        if (args.random_args.size() != 4)
            throw std::invalid_argument("--random needs: n p count seed");
        int n = std::stoi(args.random_args[0]);
        double p = std::stod(args.random_args[1]);
        int count = std::stoi(args.random_args[2]);
        std::uint64_t seed = std::stoull(args.random_args[3]);
        for (int i = 0; i < count; ++i) {
            std::uint64_t s = corpus_seed(seed, static_cast<std::uint64_t>(i));
            std::ostringstream id;
            id << "gnp:n=" << n << ",p=" << p << ",seed=" << s;
            graphs.emplace_back(id.str(), random_gnp(n, p, s));
        }
    } else {
        throw std::invalid_argument("verify-bounds needs --graph, --enumerate or --random");
    }

    json reports = json::array();
    bool all_hold = true;
    for (const auto& [id, g] : graphs) {
        BoundChecker checker(g, opts);
        BoundReport report = checker.run(id, mask);
        all_hold = all_hold && report.all_hold;
        reports.push_back(to_json(report));
    }
    emit_json(config, out, json{{"command", "verify-bounds"}, {"reports", reports}});
    return all_hold ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

struct CorpusArgs {
    int n = 8;
    double p = 0.5;
    int count = 10;
    std::string output_dir = ".";
};

int cmd_corpus(const GlobalConfig& config, const CorpusArgs& args, std::ostream& out) {
    namespace fs = std::filesystem;
    fs::create_directories(args.output_dir);

    json files = json::array();
    for (int i = 0; i < args.count; ++i) {
        std::uint64_t seed = corpus_seed(config.seed, static_cast<std::uint64_t>(i));
        Graph g = random_gnp(args.n, args.p, seed);
        std::string text = format_graph(g);
        std::ostringstream name;
        name << "gnp_" << std::setw(4) << std::setfill('0') << i << ".edges";
        std::ofstream file(fs::path(args.output_dir) / name.str());
        if (!file) throw std::runtime_error("cannot write corpus file " + name.str());
        file << text;
        std::ostringstream hash;
        hash << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(text);
        files.push_back({{"name", name.str()}, {"seed", seed}, {"fnv1a64", hash.str()}});
    }
    json manifest{{"command", "corpus"},
                  {"engine", "mt19937_64"},
                  {"seed", config.seed},
                  {"n", args.n},
                  {"p", args.p},
                  {"count", args.count},
                  {"files", files}};
    std::ofstream mf(fs::path(args.output_dir) / "manifest.json");
    manifest["schema_version"] = kSchemaVersion;
    mf << manifest.dump(2) << "\n";
    emit_json(config, out, manifest);
    return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and heuristic quasi-total Roman domination toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    GlobalConfig config;
    app.add_option("--budget-ms", config.budget_ms, "solver budget per call (ms)")
        ->capture_default_str();
    app.add_option("--cap-n", config.labeling_cap,
                   "brute-force labeling cap (3^n enumeration)")
        ->capture_default_str();
    app.add_option("--subset-cap", config.subset_cap,
                   "brute-force subset cap (2^n enumeration)")
        ->capture_default_str();
    app.add_option("--seed", config.seed, "base seed for randomized corpora")
        ->capture_default_str();
    app.add_option("--format", config.format, "json or text (text is not a stable format)")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--output", config.output, "output file (default stdout)");
    app.add_flag("--omit-timing", config.omit_timing,
                 "drop elapsed_ms fields for byte-stable output");
    app.footer("Graph inputs are edge-list files, DIMACS files, or recipes like\n"
               "classic:cycle:5, g1:t=2, g2k:base=classic:cycle:3,k=3, f1:n=5,p=2,\n"
               "gadget_h, figure1, reduction:base=@graph.txt.\n"
               "QTRD_THREADS caps enumeration workers (0 = auto).");

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "compute a domination parameter exactly");
    compute->add_option("input", compute_args.input, "graph file or recipe")->required();
    compute->add_option("--param", compute_args.param,
                        "gamma | gamma_t | gamma_R | gamma_tR | gamma_qtR | rho");
    compute->add_flag("--all-params", compute_args.all_params, "compute all six");
    compute->add_flag("--brute", compute_args.use_brute_force,
                      "use the exhaustive oracle instead of branch and bound");

    std::string verify_graph, verify_labeling;
    auto* verify = app.add_subcommand("verify", "check a labeling against the predicates");
    verify->add_option("--graph", verify_graph, "graph file or recipe")->required();
    verify->add_option("--labeling", verify_labeling, "labeling file or inline digits")
        ->required();

    std::string greedy_input;
    auto* greedy = app.add_subcommand("greedy", "run the degree-greedy QTRDF construction");
    greedy->add_option("input", greedy_input, "graph file or recipe")->required();

    FamilyArgs family_args;
    auto* family = app.add_subcommand("family", "generate a named graph family instance");
    family->add_option("recipe", family_args.recipe, "full recipe string");
    family->add_option("--name", family_args.name, "family name");
    family->add_option("--base", family_args.base, "base recipe or @file");
    family->add_option("--k", family_args.k, "pendants per vertex");
    family->add_option("--t", family_args.t, "number of gadget copies");
    family->add_option("--n", family_args.n, "order");
    family->add_option("--p", family_args.p, "pendant count (f1)");
    family->add_flag("--emit-labelings", family_args.emit_labelings,
                     "include the construction labelings as JSON");

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("verify-bounds", "check the bound theorems");
    bounds->add_option("--graph", bounds_args.graph, "graph file or recipe");
    bounds->add_option("--enumerate", bounds_args.enumerate_n,
                       "all labeled graphs of this order (<= 6, 7 with --deep)");
    bounds->add_option("--random", bounds_args.random_args, "n p count seed")
        ->expected(4);
    bounds->add_option("--checks", bounds_args.checks, "comma list or 'all'");
    bounds->add_flag("--connected", bounds_args.connected_only, "connected graphs only");
    bounds->add_flag("--deep", bounds_args.deep, "allow the multi-minute n=7 sweep");

    BoundsArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate",
                                         "exhaustive bound sweep over labeled graphs");
    enumerate->add_option("--n", enum_args.enumerate_n, "graph order")->required();
    enumerate->add_option("--checks", enum_args.checks, "comma list or 'all'");
    enumerate->add_flag("--connected", enum_args.connected_only, "connected graphs only");
    enumerate->add_flag("--deep", enum_args.deep, "allow the multi-minute n=7 sweep");

    CorpusArgs corpus_args;
    auto* corpus = app.add_subcommand("corpus", "write a seeded G(n,p) corpus + manifest");
    corpus->add_option("--n", corpus_args.n, "order")->capture_default_str();
    corpus->add_option("--p", corpus_args.p, "edge probability")->capture_default_str();
    corpus->add_option("--count", corpus_args.count, "number of graphs")
        ->capture_default_str();
    corpus->add_option("--output-dir", corpus_args.output_dir, "target directory")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (compute->parsed()) return cmd_compute(config, compute_args, out);
        if (verify->parsed()) return cmd_verify(config, verify_graph, verify_labeling, out);
        if (greedy->parsed()) return cmd_greedy(config, greedy_input, out);
        if (family->parsed()) return cmd_family(config, family_args, out);
        if (bounds->parsed()) return cmd_verify_bounds(config, bounds_args, out);
        if (enumerate->parsed()) return cmd_verify_bounds(config, enum_args, out);
        if (corpus->parsed()) return cmd_corpus(config, corpus_args, out);
    } catch (const BudgetExhausted&) {
        err << "error: solver budget exhausted\n";
        return kExitBudgetExhausted;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    err << "no command\n";
    return kExitInputError;
}

}  // namespace qtrd
