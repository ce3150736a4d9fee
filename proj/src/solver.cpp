#include "eis/solver.hpp"

#include "eis/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace eis {

namespace {

    using Clock = std::chrono::steady_clock;

    std::chrono::milliseconds since(Clock::time_point start)
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    }

    void require_searchable(const Graph& g)
    {
        if (g.num_edges() == 0)
            throw std::invalid_argument("es is undefined for a graph without edges");
        if (!is_connected(g))
            throw std::invalid_argument("graph is disconnected; only connected graphs are supported");
    }

    // Node and time accounting shared by every k tried in one exact_es call.
    class BudgetTracker {
    public:
        explicit BudgetTracker(const SearchBudget& budget) : budget_(budget), start_(Clock::now()) {}

        // Counts one node; false once the budget is spent.
        bool charge()
        {
            if (exhausted_)
                return false;
            ++nodes_;
            if (budget_.max_nodes && nodes_ > *budget_.max_nodes)
                exhausted_ = true;
            else if (budget_.max_time && (nodes_ & 1023) == 0 && since(start_) >= *budget_.max_time)
                exhausted_ = true;
            return !exhausted_;
        }

        bool exhausted() const noexcept { return exhausted_; }
        std::uint64_t nodes() const noexcept { return nodes_; }
        Clock::time_point start() const noexcept { return start_; }

    private:
        SearchBudget budget_;
        Clock::time_point start_;
        std::uint64_t nodes_ = 0;
        bool exhausted_ = false;
    };

    class Backtracker {
    public:
        Backtracker(const Graph& g, int k, bool twin_symmetry, BudgetTracker& tracker)
            : k_(k), n_(g.num_vertices()), tracker_(tracker), order_(search_order(g)),
              labels_(n_, 0), used_(2 * static_cast<std::size_t>(k) + 1, 0)
        {
            std::vector<int> position(n_);
            for (int p = 0; p < n_; ++p)
                position[order_[p]] = p;

            auto adj = g.adjacency();
            earlier_.resize(n_);
            for (int p = 0; p < n_; ++p)
                for (auto w : adj[order_[p]])
                    if (position[w] < p)
                        earlier_[p].push_back(w);

            twin_prev_.assign(n_, -1);
            if (twin_symmetry)
                for (const auto& cls : false_twin_classes(g)) {
                    auto members = cls;
                    std::sort(members.begin(), members.end(),
                              [&](Vertex a, Vertex b) { return position[a] < position[b]; });
                    for (std::size_t i = 1; i < members.size(); ++i)
                        twin_prev_[position[members[i]]] = members[i - 1];
                }
        }

        Feasibility run()
        {
            // 2k - 1 possible weights; more edges than that can never fit.
            if (static_cast<long long>(earlier_total()) > 2LL * k_ - 1) {
                tracker_.charge();
                return tracker_.exhausted() ? Feasibility::unknown : Feasibility::infeasible;
            }
            if (expand(0))
                return Feasibility::found;
            return tracker_.exhausted() ? Feasibility::unknown : Feasibility::infeasible;
        }

        VertexLabeling labeling() const { return VertexLabeling(labels_); }

    private:
        std::size_t earlier_total() const
        {
            std::size_t total = 0;
            for (const auto& e : earlier_)
                total += e.size();
            return total;
        }

        bool expand(int pos)
        {
            if (!tracker_.charge())
                return false;
            if (pos == n_)
                return true;

            const Vertex v = order_[pos];
            const auto& nbrs = earlier_[pos];
            const int first = twin_prev_[pos] >= 0 ? labels_[twin_prev_[pos]] : 1;

            for (int x = first; x <= k_; ++x) {
                std::size_t marked = 0;
                for (; marked < nbrs.size(); ++marked) {
                    auto w = x + labels_[nbrs[marked]];
                    if (used_[w])
                        break;
                    used_[w] = 1;
                }

                if (marked == nbrs.size()) {
                    labels_[v] = x;
                    if (expand(pos + 1))
                        return true;
                    labels_[v] = 0;
                }

                for (std::size_t i = 0; i < marked; ++i)
                    used_[x + labels_[nbrs[i]]] = 0;

                if (tracker_.exhausted())
                    return false;
            }
            return false;
        }

        int k_;
        int n_;
        BudgetTracker& tracker_;
        std::vector<Vertex> order_;
        std::vector<std::vector<Vertex>> earlier_;  // neighbours assigned before position p
        std::vector<Vertex> twin_prev_;             // previous twin in order, or -1
        std::vector<int> labels_;
        std::vector<char> used_;
    };

    LabelingSearch search_with(const Graph& g, int k, bool twin_symmetry, BudgetTracker& tracker)
    {
        const auto before = tracker.nodes();
        Backtracker bt(g, k, twin_symmetry, tracker);
        LabelingSearch out;
        out.status = bt.run();
        if (out.status == Feasibility::found)
            out.labeling = bt.labeling();
        out.nodes = tracker.nodes() - before;
        return out;
    }

}  // namespace

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::backtracking:
        return "backtracking";
    case Method::brute_force:
        return "brute_force";
    case Method::construction:
        return "construction";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view text)
{
    for (auto m : {Method::backtracking, Method::brute_force, Method::construction})
        if (to_string(m) == text)
            return m;
    return std::nullopt;
}

std::vector<Vertex> search_order(const Graph& g)
{
    const int n = g.num_vertices();
    auto deg = g.degrees();
    auto adj = g.adjacency();
    auto root = static_cast<Vertex>(std::max_element(deg.begin(), deg.end()) - deg.begin());

    std::vector<int> bfs_rank(n, n);
    int next_rank = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    bfs_rank[root] = next_rank++;
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop();
        for (auto w : adj[u])
            if (bfs_rank[w] == n) {
                bfs_rank[w] = next_rank++;
                queue.push(w);
            }
    }

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (deg[a] != deg[b])
            return deg[a] > deg[b];
        if (bfs_rank[a] != bfs_rank[b])
            return bfs_rank[a] < bfs_rank[b];
        return a < b;
    });
    return order;
}

std::vector<std::vector<Vertex>> false_twin_classes(const Graph& g)
{
    std::map<std::vector<Vertex>, std::vector<Vertex>> by_neighbourhood;
    auto adj = g.adjacency();
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        by_neighbourhood[adj[v]].push_back(v);

    std::vector<std::vector<Vertex>> classes;
    for (auto& [nbrs, members] : by_neighbourhood)
        if (members.size() > 1)
            classes.push_back(std::move(members));
    std::sort(classes.begin(), classes.end());
    return classes;
}

LabelingSearch find_irregular_labeling(const Graph& g, int k, const SearchBudget& budget,
                                       const SolverOptions& options)
{
    require_searchable(g);
    if (k < 1)
        throw std::invalid_argument("span bound k must be positive, got " + std::to_string(k));
    BudgetTracker tracker(budget);
    return search_with(g, k, options.twin_symmetry, tracker);
}

EsOutcome exact_es(const Graph& g, const SearchBudget& budget, const SolverOptions& options)
{
    require_searchable(g);

    std::optional<int> upper;
    if (options.upper_witness) {
        if (!is_edge_irregular(g, *options.upper_witness).irregular)
            throw std::invalid_argument("upper-bound witness is not an edge irregular labeling");
        upper = options.upper_witness->span();
    }

    BudgetTracker tracker(budget);
    for (int k = lower_bound(g);; ++k) {
        if (upper && k >= *upper)
            return EsResult{*upper, *options.upper_witness, tracker.nodes(), since(tracker.start()),
                            Method::construction};
        if (options.max_k && k > *options.max_k)
            return EsUnknown{k, upper, tracker.nodes(), since(tracker.start())};

        auto attempt = search_with(g, k, options.twin_symmetry, tracker);
        if (attempt.status == Feasibility::found)
            return EsResult{k, std::move(*attempt.labeling), tracker.nodes(), since(tracker.start()),
                            Method::backtracking};
        if (attempt.status == Feasibility::unknown)
            return EsUnknown{k, upper, tracker.nodes(), since(tracker.start())};
    }
}

EsResult brute_force_es(const Graph& g, int max_vertices)
{
    require_searchable(g);
    const int n = g.num_vertices();
    if (n > max_vertices)
        throw std::invalid_argument("brute force is capped at " + std::to_string(max_vertices) + " vertices, graph has "
                                    + std::to_string(n));

    const auto start = Clock::now();
    const auto& edges = g.edges();
    std::uint64_t nodes = 0;

    for (int k = lower_bound(g);; ++k) {
        std::vector<int> labels(n, 1);
        // seen[w] == stamp marks weight w as taken in the current labeling.
        std::vector<std::uint64_t> seen(2 * static_cast<std::size_t>(k) + 1, 0);
        for (;;) {
            ++nodes;
            bool distinct = true;
            for (const auto& e : edges) {
                auto w = labels[e.u] + labels[e.v];
                if (seen[w] == nodes) {
                    distinct = false;
                    break;
                }
                seen[w] = nodes;
            }
            if (distinct)
                return EsResult{k, VertexLabeling(labels), nodes, since(start), Method::brute_force};

            int i = n - 1;
            while (i >= 0 && labels[i] == k)
                labels[i--] = 1;
            if (i < 0)
                break;
            ++labels[i];
        }
    }
}

}  // namespace eis
