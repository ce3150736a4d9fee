#include "eis/constructions.hpp"

#include "eis/error.hpp"
#include "eis/verifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace eis {

namespace {

    // Labels in canonical order: the hub, the leaves, then the remaining cycle
    // vertices walking away from the hub.
    struct Layout {
        int hub = 0;
        std::vector<int> leaves;
        std::vector<int> cycle;
        std::string tag;
        std::vector<std::string> repairs;
    };

    std::vector<int> iota_labels(int first, int last)
    {
        std::vector<int> out;
        for (int x = first; x <= last; ++x)
            out.push_back(x);
        return out;
    }

    // k = 3, span n-1. Hub 1, leaves 1..l, cycle l+1, l+2.
    Layout triangle(int n)
    {
        return {1, iota_labels(1, n - 3), {n - 2, n - 1}, "k3", {}};
    }

    // k = 4, span n-2. Hub 1, leaves 1..n-4; going round: n-3, 3, n-2.
    // Weights: leaves 2..n-3, cycle n-2, n, n+1, n-1.
    Layout square(int n)
    {
        return {1, iota_labels(1, n - 4), {n - 3, 3, n - 2}, "k4",
                {"cycle order follows the weight list: label 3 sits between labels n-3 and n-2"}};
    }

    // k = 5, n = 6, span 4. Hub 1, leaf 1; cycle 2, 4, 4, 3.
    // Weights 2 | 3, 6, 8, 7, 4.
    Layout pentagon_one_leaf()
    {
        return {1, {1}, {2, 4, 4, 3}, "k5_n6", {}};
    }

    // k = 5, n >= 7, span n-3. Hub 1, leaves 1..n-5; cycle n-4, n-4, n-3, n-3.
    // Weights: leaves 2..n-4, hub edges n-3 and n-2, cycle 2n-8, 2n-7, 2n-6.
    Layout pentagon(int n)
    {
        return {1, iota_labels(1, n - 5), {n - 4, n - 4, n - 3, n - 3}, "k5_n_ge7",
                {"cycle order follows the weight list: the hub's cycle neighbours are labelled n-4 and n-3"}};
    }

    // k = 6, n in {7, 8}, span n-3. Hub 1, leaves 2..n-5;
    // cycle 1, n-3, n-3, n-4, n-4. Weights: leaves 3..n-4, hub edges 2 and n-3,
    // cycle n-2, 2n-6, 2n-7, 2n-8.
    Layout hexagon_small(int n)
    {
        return {1, iota_labels(2, n - 5), {1, n - 3, n - 3, n - 4, n - 4}, "k6_n7_8",
                {"hub edge to the label-1 cycle vertex (weight 2) added to the weight list"}};
    }

    // k = 6, n >= 9, span n-4. Hub n-4; leaves 2, then 4..n-4; cycle 1, 1, 2, 2, 3.
    // Weights: leaves n-2 and n..2n-8, hub edges n-3 and n-1, cycle 2..5.
    Layout hexagon(int n)
    {
        auto leaves = iota_labels(4, n - 4);
        leaves.insert(leaves.begin(), 2);
        return {n - 4, std::move(leaves), {1, 1, 2, 2, 3}, "k6_n_ge9", {}};
    }

    // k = 7, n = 8, span 5. Hub 1, leaf 1; cycle 2, 3, 3, 4, 5, 3.
    // Weights 2 | 3, 5, 6, 7, 9, 8, 4.
    Layout heptagon_one_leaf()
    {
        return {1, {1}, {2, 3, 3, 4, 5, 3}, "k7_n8", {}};
    }

    // k = 7, n in {9, 10}, span n-4. Hub 5; leaves 3, then 5..n-4;
    // cycle 1, 1, 2, 2, 3, 4. Weights: leaves 8, 10.., hub edges 6 and 9,
    // cycle 2, 3, 4, 5, 7.
    Layout heptagon_small(int n)
    {
        auto leaves = iota_labels(5, n - 4);
        leaves.insert(leaves.begin(), 3);
        return {5, std::move(leaves), {1, 1, 2, 2, 3, 4}, "k7_n9_10", {}};
    }

    // k = 7, n >= 11, span n-5. Hub n-5; leaves 2, 4, 5, ..., n-5;
    // cycle 1, 1, 2, 2, 3, 3. Weights: leaves n-3 and n-1..2n-10, hub edges
    // n-4 and n-2, cycle 2..6.
    Layout heptagon(int n)
    {
        auto leaves = iota_labels(4, n - 5);
        leaves.insert(leaves.begin(), 2);
        return {n - 5, std::move(leaves), {1, 1, 2, 2, 3, 3}, "k7_n_ge11",
                {"hub-leaf weights are n-5+i for leaves i in {2, 4, 5, ..., n-5}, not n-1+i",
                 "weight 6 comes from the edge joining the two label-3 cycle vertices"}};
    }

    void check_range(CycleStarSpec spec)
    {
        if (spec.cycle_len < 3 || spec.cycle_len > 7)
            throw std::invalid_argument("closed form covers cycle lengths 3..7, got " + std::to_string(spec.cycle_len));
        if (spec.leaf_count < 1)
            throw std::invalid_argument("closed form needs at least one leaf, got " + std::to_string(spec.leaf_count));
    }

    Layout layout_for(CycleStarSpec spec)
    {
        const int n = spec.order();
        switch (spec.cycle_len) {
        case 3:
            return triangle(n);
        case 4:
            return square(n);
        case 5:
            return n == 6 ? pentagon_one_leaf() : pentagon(n);
        case 6:
            return n <= 8 ? hexagon_small(n) : hexagon(n);
        default:
            if (n == 8)
                return heptagon_one_leaf();
            return n <= 10 ? heptagon_small(n) : heptagon(n);
        }
    }

}  // namespace

int closed_form_es(CycleStarSpec spec)
{
    check_range(spec);
    const int n = spec.order();
    switch (spec.cycle_len) {
    case 3:
        return n - 1;
    case 4:
        return n - 2;
    case 5:
        return n == 6 ? n - 2 : n - 3;
    case 6:
        return n <= 8 ? n - 3 : n - 4;
    default:
        if (n == 8)
            return n - 3;
        return n <= 10 ? n - 4 : n - 5;
    }
}

ConstructionResult construct_labeling(CycleStarSpec spec)
{
    check_range(spec);
    auto layout = layout_for(spec);

    std::vector<int> labels;
    labels.reserve(spec.order());
    labels.push_back(layout.hub);
    labels.insert(labels.end(), layout.leaves.begin(), layout.leaves.end());
    labels.insert(labels.end(), layout.cycle.begin(), layout.cycle.end());

    if (static_cast<int>(layout.leaves.size()) != spec.leaf_count
        || static_cast<int>(layout.cycle.size()) != spec.cycle_len - 1)
        throw ConstructionError("construction " + layout.tag + " has the wrong shape for CS("
                                + std::to_string(spec.cycle_len) + ", " + std::to_string(spec.leaf_count) + ")");

    ConstructionResult result{spec, VertexLabeling(std::move(labels)), closed_form_es(spec), layout.tag,
                              std::move(layout.repairs)};

    auto verdict = is_edge_irregular(build_cycle_star(spec), result.labeling);
    if (!verdict.irregular)
        throw ConstructionError("construction " + result.case_tag + " repeats a weight on edges "
                                + std::to_string(verdict.first_collision->first) + " and "
                                + std::to_string(verdict.first_collision->second));
    if (result.labeling.span() != result.claimed_es)
        throw ConstructionError("construction " + result.case_tag + " has span "
                                + std::to_string(result.labeling.span()) + ", expected "
                                + std::to_string(result.claimed_es));
    return result;
}

}  // namespace eis
