#pragma once

#include "eis/graph.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace eis {

// Edge weights phi(u) + phi(v), one per edge in the graph's edge order.
struct WeightProfile {
    std::vector<int> weights;
};

struct Verdict {
    bool irregular = false;
    // Lexicographically first pair (i, j), i < j, of edge indices with equal
    // weight. Present exactly when `irregular` is false.
    std::optional<std::pair<std::size_t, std::size_t>> first_collision;
};

WeightProfile edge_weights(const Graph& g, const VertexLabeling& phi);
Verdict is_edge_irregular(const Graph& g, const VertexLabeling& phi);

// max(ceil((m + 1) / 2), max degree). Throws for an edgeless graph.
int lower_bound(const Graph& g);

}  // namespace eis
