#pragma once

#include "eis/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace eis {

// Limits for one search call. When a limit is hit the answer is unknown,
// never a guess.
struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> max_time;
};

struct SolverOptions {
    // Require non-decreasing labels along each class of false twins.
    bool twin_symmetry = true;
    // A known irregular labeling. Its span caps the search, so every k below
    // it must be refuted before it is returned.
    std::optional<VertexLabeling> upper_witness;
    // Give up (unknown) instead of trying spans above this.
    std::optional<int> max_k;
};

enum class Feasibility { found, infeasible, unknown };

struct LabelingSearch {
    Feasibility status = Feasibility::unknown;
    std::optional<VertexLabeling> labeling;
    std::uint64_t nodes = 0;
};

enum class Method { backtracking, brute_force, construction };

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view text);

struct EsResult {
    int es_value = 0;
    VertexLabeling witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
    Method method = Method::backtracking;
};

// Budget ran out. Every span below `lower` was refuted; `upper`, when known,
// is the span of a labeling that works.
struct EsUnknown {
    int lower = 0;
    std::optional<int> upper;
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
};

using EsOutcome = std::variant<EsResult, EsUnknown>;

// The order in which the backtracking search assigns vertices: decreasing
// degree, ties broken by BFS discovery from the first max-degree vertex.
std::vector<Vertex> search_order(const Graph& g);

// Classes of vertices with identical open neighbourhoods (size >= 2 only).
std::vector<std::vector<Vertex>> false_twin_classes(const Graph& g);

// Decides whether g has an edge irregular labeling with labels in 1..k.
// Requires a connected graph with at least one edge.
LabelingSearch find_irregular_labeling(const Graph& g, int k, const SearchBudget& budget = {},
                                       const SolverOptions& options = {});

// es(g) by iterative deepening on k from lower_bound(g).
EsOutcome exact_es(const Graph& g, const SearchBudget& budget = {}, const SolverOptions& options = {});

// Plain enumeration of all k^n labelings for each k from lower_bound(g).
// Independent of the backtracking search; used to cross-check it.
EsResult brute_force_es(const Graph& g, int max_vertices = 9);

}  // namespace eis
