#include "eis/verifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace eis {

namespace {

    void require_matching(const Graph& g, const VertexLabeling& phi)
    {
        if (phi.size() != static_cast<std::size_t>(g.num_vertices()))
            throw std::invalid_argument("labeling has " + std::to_string(phi.size()) + " labels but graph has "
                                        + std::to_string(g.num_vertices()) + " vertices");
    }

}  // namespace

WeightProfile edge_weights(const Graph& g, const VertexLabeling& phi)
{
    require_matching(g, phi);
    WeightProfile profile;
    profile.weights.reserve(g.edges().size());
    for (const auto& e : g.edges())
        profile.weights.push_back(phi[e.u] + phi[e.v]);
    return profile;
}

Verdict is_edge_irregular(const Graph& g, const VertexLabeling& phi)
{
    auto weights = edge_weights(g, phi).weights;

    // Scan right to left so `next_same[i]` is the nearest later edge with the
    // same weight; the first i that has one gives the lexicographic minimum.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> next_same(weights.size(), none);
    std::unordered_map<int, std::size_t> last_seen;
    for (std::size_t i = weights.size(); i-- > 0;) {
        auto [it, inserted] = last_seen.try_emplace(weights[i], i);
        if (!inserted) {
            next_same[i] = it->second;
            it->second = i;
        }
    }

    for (std::size_t i = 0; i < weights.size(); ++i)
        if (next_same[i] != none)
            return Verdict{false, std::pair{i, next_same[i]}};
    return Verdict{true, std::nullopt};
}

int lower_bound(const Graph& g)
{
    const int m = g.num_edges();
    if (m == 0)
        throw std::invalid_argument("lower bound is undefined for a graph without edges");
    return std::max((m + 2) / 2, max_degree(g));
}

}  // namespace eis
