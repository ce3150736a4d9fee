#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eis {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Each edge is stored with u < v,
// in the order it was supplied. Construction rejects self-loops, duplicates
// and out-of-range endpoints, so every Graph value is valid.
class Graph {
public:
    Graph(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::vector<int> degrees() const;
    std::vector<std::vector<Vertex>> adjacency() const;

    // Same graph with the edge list sorted lexicographically.
    Graph normalized() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<Edge> edges_;
};

int max_degree(const Graph& g);
bool is_connected(const Graph& g);

// A vertex labeling phi: V -> {1, 2, ...}. Labels are positive.
class VertexLabeling {
public:
    VertexLabeling() = default;
    explicit VertexLabeling(std::vector<int> labels);

    std::size_t size() const noexcept { return labels_.size(); }
    int operator[](std::size_t i) const { return labels_[i]; }
    const std::vector<int>& labels() const noexcept { return labels_; }

    // Largest label; 0 for an empty labeling.
    int span() const noexcept;

    friend bool operator==(const VertexLabeling&, const VertexLabeling&) = default;

private:
    std::vector<int> labels_;
};

// CS(k, l): a k-cycle with l pendant leaves on one cycle vertex (the hub).
struct CycleStarSpec {
    int cycle_len = 3;
    int leaf_count = 0;

    int order() const noexcept { return cycle_len + leaf_count; }

    friend bool operator==(const CycleStarSpec&, const CycleStarSpec&) = default;
    friend auto operator<=>(const CycleStarSpec&, const CycleStarSpec&) = default;
};

// Canonical indexing: 0 is the hub, 1..l are the leaves, and l+1..l+k-1 are
// the other cycle vertices in cyclic order 0 -> l+1 -> ... -> l+k-1 -> 0.
// l = 0 yields the plain cycle C_k.
Graph build_cycle_star(CycleStarSpec spec);

// Graph file: "n m" header, then m lines "u v". Lines starting with '#' and
// blank lines are skipped.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Labeling file: whitespace-separated positive integers, one per vertex.
VertexLabeling parse_labeling(std::string_view text, std::size_t expected_len);
std::string serialize_labeling(const VertexLabeling& phi);

Graph read_graph_file(const std::string& path);
VertexLabeling read_labeling_file(const std::string& path, std::size_t expected_len);

}  // namespace eis
