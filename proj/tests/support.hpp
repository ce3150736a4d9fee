#pragma once

// Test-only helpers. The oracle here shares no code with the library: it
// works on raw edge pairs and its own weight bookkeeping.

#include "eis/graph.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eis_test {

using RawEdges = std::vector<std::pair<int, int>>;

inline RawEdges raw_edges(const eis::Graph& g)
{
    RawEdges out;
    for (const auto& e : g.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

// First labeling in lexicographic order with labels in 1..k and pairwise
// distinct edge sums, if any.
inline std::optional<std::vector<int>> enumerate_irregular(int n, const RawEdges& edges, int k)
{
    std::vector<int> labels(n, 1);
    for (;;) {
        std::set<int> sums;
        for (auto [u, v] : edges)
            sums.insert(labels[u] + labels[v]);
        if (sums.size() == edges.size())
            return labels;
        int i = n - 1;
        while (i >= 0 && labels[i] == k)
            labels[i--] = 1;
        if (i < 0)
            return std::nullopt;
        ++labels[i];
    }
}

// Smallest k admitting an irregular labeling, searching from k = 1.
inline int enumerate_es(int n, const RawEdges& edges)
{
    for (int k = 1;; ++k)
        if (enumerate_irregular(n, edges, k))
            return k;
}

// Random connected graph: a random tree plus each other pair with
// probability p.
inline eis::Graph random_connected_graph(std::mt19937_64& rng, int n, double p)
{
    std::vector<eis::Edge> edges;
    std::set<std::pair<int, int>> seen;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        int a = perm[i], b = perm[pick(rng)];
        seen.insert({std::min(a, b), std::max(a, b)});
        edges.push_back({a, b});
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!seen.count({u, v}) && coin(rng))
                edges.push_back({u, v});
    return eis::Graph(n, std::move(edges));
}

inline eis::Graph path_graph(int n)
{
    std::vector<eis::Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return eis::Graph(n, std::move(edges));
}

inline eis::Graph star_graph(int leaves)
{
    std::vector<eis::Edge> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.push_back({0, i});
    return eis::Graph(leaves + 1, std::move(edges));
}

inline eis::Graph complete_graph(int n)
{
    std::vector<eis::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return eis::Graph(n, std::move(edges));
}

class TempDir {
public:
    TempDir()
    {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path()
            / ("eis_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

}  // namespace eis_test
