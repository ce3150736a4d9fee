#pragma once

#include "eis/graph.hpp"
#include "eis/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eis {

// Conjectured es(CS(k, l)) for k >= 8, l >= 1:
// ceil((n+1)/2) for k+1 <= n <= 2k-4, n-k+2 for n >= 2k-3.
int conjectured_es(CycleStarSpec spec);

// closed_form_es for k <= 7, conjectured_es for k >= 8.
int formula_es(CycleStarSpec spec);

struct SweepRow {
    int k = 0;
    int l = 0;
    int n = 0;
    int lower_bound = 0;
    int es_formula = 0;
    std::optional<int> es_exact;
    std::optional<bool> agrees;
    std::optional<VertexLabeling> witness;
    Method method = Method::backtracking;
    std::uint64_t nodes = 0;
    std::int64_t elapsed_ms = 0;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct IntRange {
    int first = 0;
    int last = 0;  // inclusive
};

// Parses "A..B" (inclusive) or a single integer "A".
IntRange parse_range(std::string_view text);

struct SweepConfig {
    IntRange k_range;
    IntRange l_range;
    SearchBudget budget;     // per instance
    std::string cache_path;  // empty: no cache
    int jobs = 1;
    // Seed each k <= 7 search with the explicit construction as upper bound.
    bool seed_with_constructions = true;
};

struct SweepReport {
    std::vector<SweepRow> rows;  // ordered by (k, l)
    std::size_t cache_hits = 0;
    std::size_t solver_calls = 0;
    std::vector<std::string> warnings;  // malformed or unsound cache lines

    bool any_unknown() const;
    bool any_mismatch() const;
};

SweepRow solve_instance(CycleStarSpec spec, const SearchBudget& budget, bool seed_with_constructions = true);

SweepReport sweep(const SweepConfig& config);

std::string emit_csv(const std::vector<SweepRow>& rows);
std::string emit_json(const std::vector<SweepRow>& rows);

// One JSON Lines cache record (includes the witness).
std::string cache_line(const SweepRow& row);
// Parses and re-verifies a cache record; throws FormatError(line, ...) when it
// is malformed or its witness does not check out.
SweepRow parse_cache_line(std::string_view text, int line);

// Report rows parsed back from emit_json output.
std::vector<SweepRow> parse_report_json(std::string_view text);

}  // namespace eis
