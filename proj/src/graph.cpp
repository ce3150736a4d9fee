#include "eis/graph.hpp"

#include "eis/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eis {

namespace {

    std::string edge_str(int u, int v) { return "(" + std::to_string(u) + ", " + std::to_string(v) + ")"; }

    struct Line {
        int number;
        std::vector<std::string_view> tokens;
    };

    // Splits text into non-empty, non-comment lines of whitespace tokens.
    std::vector<Line> tokenize(std::string_view text)
    {
        std::vector<Line> lines;
        int number = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            auto raw = text.substr(pos, end - pos);
            ++number;
            pos = end + 1;

            auto first = raw.find_first_not_of(" \t\r\f\v");
            if (first == std::string_view::npos || raw[first] == '#')
                continue;

            Line line{number, {}};
            std::size_t i = first;
            while (i < raw.size()) {
                auto j = raw.find_first_of(" \t\r\f\v", i);
                if (j == std::string_view::npos)
                    j = raw.size();
                if (j > i)
                    line.tokens.push_back(raw.substr(i, j - i));
                i = raw.find_first_not_of(" \t\r\f\v", j);
                if (i == std::string_view::npos)
                    break;
            }
            lines.push_back(std::move(line));
        }
        return lines;
    }

    long long to_integer(std::string_view token, int line, const char* what)
    {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw FormatError(line, std::string(what) + " '" + std::string(token) + "' is not an integer");
        return value;
    }

    std::string slurp(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges))
{
    if (n_ < 1)
        throw std::invalid_argument("graph needs at least one vertex, got " + std::to_string(n_));

    std::set<Edge> seen;
    for (auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw std::invalid_argument("edge " + edge_str(e.u, e.v) + " has an endpoint out of range for n = "
                                        + std::to_string(n_));
        if (e.u == e.v)
            throw std::invalid_argument("edge " + edge_str(e.u, e.v) + " is a self-loop");
        if (e.u > e.v)
            std::swap(e.u, e.v);
        if (!seen.insert(e).second)
            throw std::invalid_argument("edge " + edge_str(e.u, e.v) + " is duplicated");
    }
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

std::vector<std::vector<Vertex>> Graph::adjacency() const
{
    std::vector<std::vector<Vertex>> adj(n_);
    for (const auto& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& row : adj)
        std::sort(row.begin(), row.end());
    return adj;
}

Graph Graph::normalized() const
{
    auto sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    return Graph(n_, std::move(sorted));
}

int max_degree(const Graph& g)
{
    auto deg = g.degrees();
    return *std::max_element(deg.begin(), deg.end());
}

bool is_connected(const Graph& g)
{
    auto adj = g.adjacency();
    std::vector<bool> seen(g.num_vertices(), false);
    std::queue<Vertex> queue;
    queue.push(0);
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop();
        for (auto w : adj[u])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push(w);
            }
    }
    return reached == g.num_vertices();
}

VertexLabeling::VertexLabeling(std::vector<int> labels) : labels_(std::move(labels))
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] < 1)
            throw std::invalid_argument("label of vertex " + std::to_string(i) + " is "
                                        + std::to_string(labels_[i]) + ", labels must be positive");
}

int VertexLabeling::span() const noexcept
{
    return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
}

Graph build_cycle_star(CycleStarSpec spec)
{
    const int k = spec.cycle_len;
    const int l = spec.leaf_count;
    if (k < 3)
        throw std::invalid_argument("cycle length must be at least 3, got " + std::to_string(k));
    if (l < 0)
        throw std::invalid_argument("leaf count must be non-negative, got " + std::to_string(l));

    const int n = k + l;
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int leaf = 1; leaf <= l; ++leaf)
        edges.push_back({0, leaf});
    edges.push_back({0, l + 1});
    edges.push_back({0, n - 1});
    for (int v = l + 1; v < n - 1; ++v)
        edges.push_back({v, v + 1});
    return Graph(n, std::move(edges));
}

Graph parse_graph(std::string_view text)
{
    auto lines = tokenize(text);
    if (lines.empty())
        throw FormatError(0, "missing 'n m' header");

    const auto& header = lines.front();
    if (header.tokens.size() != 2)
        throw FormatError(header.number, "header must be 'n m'");
    auto n = to_integer(header.tokens[0], header.number, "vertex count");
    auto m = to_integer(header.tokens[1], header.number, "edge count");
    if (n < 1)
        throw FormatError(header.number, "vertex count must be positive");
    if (m < 0)
        throw FormatError(header.number, "edge count must be non-negative");

    if (static_cast<long long>(lines.size()) - 1 != m)
        throw FormatError(lines.back().number, "header declares " + std::to_string(m) + " edges, found "
                                                   + std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 2)
            throw FormatError(line.number, "edge line must be 'u v'");
        auto u = to_integer(line.tokens[0], line.number, "endpoint");
        auto v = to_integer(line.tokens[1], line.number, "endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw FormatError(line.number, "vertex index out of range in edge " + edge_str(int(u), int(v)));
        if (u == v)
            throw FormatError(line.number, "self-loop at vertex " + std::to_string(u));
        Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
        if (!seen.insert(e).second)
            throw FormatError(line.number, "duplicate edge " + edge_str(e.u, e.v));
        edges.push_back(e);
    }
    return Graph(static_cast<int>(n), std::move(edges)).normalized();
}

std::string serialize_graph(const Graph& g)
{
    auto norm = g.normalized();
    std::string out = std::to_string(norm.num_vertices()) + " " + std::to_string(norm.num_edges()) + "\n";
    for (const auto& e : norm.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

VertexLabeling parse_labeling(std::string_view text, std::size_t expected_len)
{
    std::vector<int> labels;
    for (const auto& line : tokenize(text))
        for (auto token : line.tokens) {
            auto value = to_integer(token, line.number, "label");
            if (value < 1)
                throw FormatError(line.number, "non-positive label " + std::string(token));
            if (value > std::numeric_limits<int>::max() / 2)
                throw FormatError(line.number, "label " + std::string(token) + " is too large");
            labels.push_back(static_cast<int>(value));
        }
    if (labels.size() != expected_len)
        throw FormatError(0, "wrong length: expected " + std::to_string(expected_len) + " labels, found "
                                 + std::to_string(labels.size()));
    return VertexLabeling(std::move(labels));
}

std::string serialize_labeling(const VertexLabeling& phi)
{
    std::string out;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(phi[i]);
    }
    out += '\n';
    return out;
}

Graph read_graph_file(const std::string& path)
{
    auto text = slurp(path);
    try {
        return parse_graph(text);
    } catch (const FormatError& e) {
        throw FormatError(e.line(), e.message(), path);
    }
}

VertexLabeling read_labeling_file(const std::string& path, std::size_t expected_len)
{
    auto text = slurp(path);
    try {
        return parse_labeling(text, expected_len);
    } catch (const FormatError& e) {
        throw FormatError(e.line(), e.message(), path);
    }
}

}  // namespace eis
