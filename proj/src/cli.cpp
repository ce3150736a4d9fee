#include "eis/cli.hpp"

#include "eis/constructions.hpp"
#include "eis/error.hpp"
#include "eis/harness.hpp"
#include "eis/solver.hpp"
#include "eis/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace eis::cli {

using ordered_json = nlohmann::ordered_json;

namespace {

    struct Config {
        bool json = false;
        int k = 0;
        int leaves = 0;
        std::string graph_path;
        std::string labeling_path;
        std::string out_path;
        std::string k_range;
        std::string leaf_range;
        std::string cache_path;
        std::optional<int> max_k;
        std::optional<double> timeout_seconds;
        std::optional<std::uint64_t> node_budget;
        int jobs = 1;
        int oracle_cap = 9;
        bool no_twins = false;
        bool dot = false;
    };

    // Thrown for bad flag values that CLI11 cannot catch on its own.
    struct UsageError : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    std::string join(const std::vector<int>& xs)
    {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i)
            s += (i ? " " : "") + std::to_string(xs[i]);
        return s;
    }

    void write_text(const std::string& path, const std::string& text)
    {
        std::ofstream f(path, std::ios::binary);
        if (!f || !(f << text))
            throw std::runtime_error("cannot write '" + path + "'");
    }

    SearchBudget budget_from(const Config& cfg)
    {
        SearchBudget budget;
        if (cfg.node_budget)
            budget.max_nodes = *cfg.node_budget;
        if (cfg.timeout_seconds) {
            if (*cfg.timeout_seconds <= 0)
                throw UsageError("--timeout must be positive");
            budget.max_time = std::chrono::milliseconds(static_cast<long long>(*cfg.timeout_seconds * 1000.0));
        }
        return budget;
    }

    std::string dot_text(const Graph& g)
    {
        std::string s = "graph G {\n";
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            s += "  " + std::to_string(v) + ";\n";
        for (const auto& e : g.edges())
            s += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
        return s + "}\n";
    }

    int cmd_gen(const Config& cfg, std::ostream& out)
    {
        auto g = build_cycle_star({cfg.k, cfg.leaves});
        std::string text = cfg.dot ? dot_text(g) : serialize_graph(g);
        if (!cfg.out_path.empty())
            write_text(cfg.out_path, text);

        if (cfg.json) {
            ordered_json j;
            j["n"] = g.num_vertices();
            j["m"] = g.num_edges();
            auto edges = ordered_json::array();
            for (const auto& e : g.edges())
                edges.push_back({e.u, e.v});
            j["edges"] = edges;
            j["max_degree"] = max_degree(g);
            j["lower_bound"] = lower_bound(g);
            out << j.dump(2) << '\n';
        } else if (cfg.out_path.empty()) {
            out << text;
        }
        return ok;
    }

    int cmd_label(const Config& cfg, std::ostream& out)
    {
        const CycleStarSpec spec{cfg.k, cfg.leaves};
        auto result = construct_labeling(spec);
        auto g = build_cycle_star(spec);
        auto weights = edge_weights(g, result.labeling).weights;
        auto labeling_text = serialize_labeling(result.labeling);
        if (!cfg.out_path.empty())
            write_text(cfg.out_path, labeling_text);

        if (cfg.json) {
            ordered_json j;
            j["k"] = spec.cycle_len;
            j["leaves"] = spec.leaf_count;
            j["n"] = spec.order();
            j["es"] = result.claimed_es;
            j["case"] = result.case_tag;
            j["labeling"] = result.labeling.labels();
            j["weights"] = weights;
            j["irregular"] = is_edge_irregular(g, result.labeling).irregular;
            j["lower_bound"] = lower_bound(g);
            j["repairs"] = result.repairs;
            out << j.dump(2) << '\n';
            return ok;
        }

        // Every report line is a comment, so stdout is itself a labeling file.
        out << "# CS(" << spec.cycle_len << ", " << spec.leaf_count << ") n " << spec.order() << " case "
            << result.case_tag << '\n';
        out << "# es " << result.claimed_es << '\n';
        out << "# lower_bound " << lower_bound(g) << '\n';
        out << "# weights " << join(weights) << '\n';
        out << "# verdict irregular\n";
        if (result.repairs.empty())
            out << "# repairs none\n";
        for (const auto& r : result.repairs)
            out << "# repair: " << r << '\n';
        out << labeling_text;
        return ok;
    }

    int cmd_verify(const Config& cfg, std::ostream& out)
    {
        auto g = read_graph_file(cfg.graph_path);
        auto phi = read_labeling_file(cfg.labeling_path, static_cast<std::size_t>(g.num_vertices()));
        auto weights = edge_weights(g, phi).weights;
        auto verdict = is_edge_irregular(g, phi);

        if (cfg.json) {
            ordered_json j;
            j["irregular"] = verdict.irregular;
            j["first_collision"] = verdict.first_collision
                ? ordered_json::array({verdict.first_collision->first, verdict.first_collision->second})
                : ordered_json(nullptr);
            j["span"] = phi.span();
            j["weights"] = weights;
            if (g.num_edges() > 0)
                j["lower_bound"] = lower_bound(g);
            out << j.dump(2) << '\n';
            return ok;
        }

        out << "verdict " << (verdict.irregular ? "irregular" : "not irregular") << '\n';
        if (verdict.first_collision) {
            auto [i, j] = *verdict.first_collision;
            const auto& a = g.edges()[i];
            const auto& b = g.edges()[j];
            out << "first_collision " << i << ' ' << j << " (edges " << a.u << '-' << a.v << " and " << b.u << '-'
                << b.v << ", weight " << weights[i] << ")\n";
        }
        out << "span " << phi.span() << '\n';
        out << "weights " << join(weights) << '\n';
        if (g.num_edges() > 0)
            out << "lower_bound " << lower_bound(g) << '\n';
        return ok;
    }

    int print_outcome(const Config& cfg, const Graph& g, const EsOutcome& outcome, std::ostream& out)
    {
        if (const auto* r = std::get_if<EsResult>(&outcome)) {
            if (cfg.json) {
                ordered_json j;
                j["es"] = r->es_value;
                j["lower_bound"] = lower_bound(g);
                j["witness"] = r->witness.labels();
                j["method"] = std::string(to_string(r->method));
                j["nodes"] = r->nodes_explored;
                j["elapsed_ms"] = r->elapsed.count();
                out << j.dump(2) << '\n';
            } else {
                out << "es " << r->es_value << '\n';
                out << "lower_bound " << lower_bound(g) << '\n';
                out << "witness " << join(r->witness.labels()) << '\n';
                out << "method " << to_string(r->method) << '\n';
                out << "nodes " << r->nodes_explored << '\n';
                out << "elapsed_ms " << r->elapsed.count() << '\n';
            }
            return ok;
        }

        const auto& u = std::get<EsUnknown>(outcome);
        if (cfg.json) {
            ordered_json j;
            j["es"] = nullptr;
            j["lower"] = u.lower;
            j["upper"] = u.upper ? ordered_json(*u.upper) : ordered_json(nullptr);
            j["nodes"] = u.nodes_explored;
            j["elapsed_ms"] = u.elapsed.count();
            out << j.dump(2) << '\n';
        } else {
            out << "es unknown\n";
            out << "lower " << u.lower << '\n';
            if (u.upper)
                out << "upper " << *u.upper << '\n';
            out << "nodes " << u.nodes_explored << '\n';
            out << "elapsed_ms " << u.elapsed.count() << '\n';
        }
        return budget_exhausted;
    }

    int cmd_es(const Config& cfg, std::ostream& out)
    {
        auto g = read_graph_file(cfg.graph_path);
        SolverOptions options;
        options.twin_symmetry = !cfg.no_twins;
        options.max_k = cfg.max_k;
        try {
            return print_outcome(cfg, g, exact_es(g, budget_from(cfg), options), out);
        } catch (const std::invalid_argument& e) {
            throw UsageError(cfg.graph_path + ": " + e.what());
        }
    }

    int cmd_oracle(const Config& cfg, std::ostream& out)
    {
        auto g = read_graph_file(cfg.graph_path);
        try {
            return print_outcome(cfg, g, brute_force_es(g, cfg.oracle_cap), out);
        } catch (const std::invalid_argument& e) {
            throw UsageError(cfg.graph_path + ": " + e.what());
        }
    }

    int cmd_sweep(const Config& cfg, std::ostream& out, std::ostream& err)
    {
        SweepConfig sc;
        try {
            sc.k_range = parse_range(cfg.k_range);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--k: ") + e.what());
        }
        try {
            sc.l_range = parse_range(cfg.leaf_range);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--leaves: ") + e.what());
        }
        if (sc.k_range.first < 3)
            throw UsageError("--k: cycle length must be at least 3");
        if (sc.l_range.first < 1)
            throw UsageError("--leaves: leaf count must be at least 1");
        sc.budget = budget_from(cfg);
        sc.cache_path = cfg.cache_path;
        sc.jobs = cfg.jobs;

        auto report = sweep(sc);
        for (const auto& w : report.warnings)
            err << "warning: " << w << " (row recomputed)\n";
        for (const auto& r : report.rows)
            if (r.agrees == false)
                err << "mismatch: CS(" << r.k << ", " << r.l << ") es " << *r.es_exact << " vs formula "
                    << r.es_formula << '\n';

        auto text = cfg.json ? emit_json(report.rows) : emit_csv(report.rows);
        if (!cfg.out_path.empty())
            write_text(cfg.out_path, text);
        out << text;
        return report.any_unknown() ? budget_exhausted : ok;
    }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Edge irregularity strength of graphs and cycle-star constructions", "eis"};
    app.require_subcommand(1);
    app.add_flag("--json", cfg.json, "Emit a single JSON document on stdout");

    auto* gen = app.add_subcommand("gen", "Write the canonical cycle-star graph file");
    gen->add_option("--k", cfg.k, "Cycle length")->required()->check(CLI::Range(3, 1 << 20));
    gen->add_option("--leaves", cfg.leaves, "Number of leaves")->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--out", cfg.out_path, "Output file (default: stdout)");
    gen->add_flag("--dot", cfg.dot, "Write Graphviz DOT instead of the edge list");

    auto* label = app.add_subcommand("label", "Print the explicit labeling for CS(k, l), 3 <= k <= 7");
    label->add_option("--k", cfg.k, "Cycle length")->required()->check(CLI::Range(3, 7));
    label->add_option("--leaves", cfg.leaves, "Number of leaves")->required()->check(CLI::Range(1, 1 << 20));
    label->add_option("--out", cfg.out_path, "Also write the labeling file here");

    auto* verify = app.add_subcommand("verify", "Check a labeling for distinct edge weights");
    verify->add_option("--graph", cfg.graph_path, "Graph file")->required();
    verify->add_option("--labeling", cfg.labeling_path, "Labeling file")->required();

    auto* es = app.add_subcommand("es", "Compute es(G) exactly by backtracking");
    es->add_option("--graph", cfg.graph_path, "Graph file")->required();
    es->add_option("--timeout", cfg.timeout_seconds, "Time budget in seconds");
    es->add_option("--nodes", cfg.node_budget, "Search node budget");
    es->add_option("--max-k", cfg.max_k, "Largest span to try")->check(CLI::PositiveNumber);
    es->add_flag("--no-twins", cfg.no_twins, "Disable twin symmetry breaking");

    auto* oracle = app.add_subcommand("oracle", "Compute es(G) by plain enumeration");
    oracle->add_option("--graph", cfg.graph_path, "Graph file")->required();
    oracle->add_option("--cap", cfg.oracle_cap, "Largest vertex count accepted")->check(CLI::Range(1, 12));

    auto* sw = app.add_subcommand("sweep", "Compare exact es with the closed/conjectured forms over a grid");
    sw->add_option("--k", cfg.k_range, "Cycle lengths, A..B")->required();
    sw->add_option("--leaves", cfg.leaf_range, "Leaf counts, C..D")->required();
    sw->add_option("--cache", cfg.cache_path, "JSON Lines result cache")->required();
    sw->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 1024));
    sw->add_option("--timeout", cfg.timeout_seconds, "Time budget per instance in seconds");
    sw->add_option("--nodes", cfg.node_budget, "Node budget per instance");
    sw->add_option("--out", cfg.out_path, "Also write the report here");

    std::vector<const char*> argv{"eis"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        if (*gen)
            return cmd_gen(cfg, out);
        if (*label)
            return cmd_label(cfg, out);
        if (*verify)
            return cmd_verify(cfg, out);
        if (*es)
            return cmd_es(cfg, out);
        if (*oracle)
            return cmd_oracle(cfg, out);
        return cmd_sweep(cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return io_error;
    }
}

}  // namespace eis::cli
