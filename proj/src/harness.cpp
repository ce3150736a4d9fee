#include "eis/harness.hpp"

#include "eis/constructions.hpp"
#include "eis/error.hpp"
#include "eis/verifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace eis {

using ordered_json = nlohmann::ordered_json;

namespace {

    int parse_int(std::string_view text, std::string_view whole)
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
            throw std::invalid_argument("bad range '" + std::string(whole) + "', expected A..B");
        return value;
    }

    ordered_json row_json(const SweepRow& row, bool with_witness)
    {
        ordered_json j;
        j["k"] = row.k;
        j["l"] = row.l;
        j["n"] = row.n;
        j["lower_bound"] = row.lower_bound;
        j["es_formula"] = row.es_formula;
        j["es_exact"] = row.es_exact ? ordered_json(*row.es_exact) : ordered_json(nullptr);
        j["agrees"] = row.agrees ? ordered_json(*row.agrees) : ordered_json(nullptr);
        if (with_witness)
            j["witness"] = row.witness ? ordered_json(row.witness->labels()) : ordered_json(nullptr);
        j["method"] = std::string(to_string(row.method));
        j["nodes"] = row.nodes;
        j["elapsed_ms"] = row.elapsed_ms;
        return j;
    }

    SweepRow row_from_json(const ordered_json& j)
    {
        SweepRow row;
        row.k = j.at("k").get<int>();
        row.l = j.at("l").get<int>();
        row.n = j.at("n").get<int>();
        row.lower_bound = j.at("lower_bound").get<int>();
        row.es_formula = j.at("es_formula").get<int>();
        if (!j.at("es_exact").is_null())
            row.es_exact = j.at("es_exact").get<int>();
        if (!j.at("agrees").is_null())
            row.agrees = j.at("agrees").get<bool>();
        if (j.contains("witness") && !j.at("witness").is_null())
            row.witness = VertexLabeling(j.at("witness").get<std::vector<int>>());
        auto method = parse_method(j.at("method").get<std::string>());
        if (!method)
            throw std::invalid_argument("unknown method '" + j.at("method").get<std::string>() + "'");
        row.method = *method;
        row.nodes = j.at("nodes").get<std::uint64_t>();
        row.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
        return row;
    }

    // Cross-checks everything in a cached row that can be recomputed cheaply.
    void check_row(const SweepRow& row)
    {
        const CycleStarSpec spec{row.k, row.l};
        if (row.k < 3 || row.l < 1 || row.n != row.k + row.l)
            throw std::invalid_argument("inconsistent k, l, n");
        auto g = build_cycle_star(spec);
        if (row.lower_bound != lower_bound(g))
            throw std::invalid_argument("lower_bound does not match the graph");
        if (row.es_formula != formula_es(spec))
            throw std::invalid_argument("es_formula does not match the closed form");
        if (!row.es_exact) {
            if (row.agrees || row.witness)
                throw std::invalid_argument("unknown es_exact with agrees or witness set");
            return;
        }
        if (!row.witness)
            throw std::invalid_argument("es_exact without a witness");
        if (row.witness->size() != static_cast<std::size_t>(row.n))
            throw std::invalid_argument("witness length differs from n");
        if (!is_edge_irregular(g, *row.witness).irregular)
            throw std::invalid_argument("witness is not edge irregular");
        if (row.witness->span() != *row.es_exact)
            throw std::invalid_argument("witness span differs from es_exact");
        if (*row.es_exact < row.lower_bound)
            throw std::invalid_argument("es_exact is below the lower bound");
        if (row.agrees != (*row.es_exact == row.es_formula))
            throw std::invalid_argument("agrees flag is inconsistent");
    }

    std::map<std::pair<int, int>, SweepRow> load_cache(const std::string& path, std::vector<std::string>& warnings)
    {
        std::map<std::pair<int, int>, SweepRow> cached;
        std::ifstream in(path);
        if (!in)
            return cached;
        std::string text;
        int line = 0;
        while (std::getline(in, text)) {
            ++line;
            if (text.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            try {
                auto row = parse_cache_line(text, line);
                cached.insert_or_assign(std::pair{row.k, row.l}, std::move(row));
            } catch (const FormatError& e) {
                warnings.push_back(FormatError(e.line(), e.message(), path).what());
            }
        }
        return cached;
    }

    std::string csv_field(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }
    std::string csv_field(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }

}  // namespace

int conjectured_es(CycleStarSpec spec)
{
    const int k = spec.cycle_len;
    if (k < 8)
        throw std::invalid_argument("conjectured form covers cycle lengths >= 8, got " + std::to_string(k)
                                    + "; use closed_form_es");
    if (spec.leaf_count < 1)
        throw std::invalid_argument("conjectured form needs at least one leaf, got "
                                    + std::to_string(spec.leaf_count));
    const int n = spec.order();
    if (n <= 2 * k - 4)
        return (n + 2) / 2;
    return n - k + 2;
}

int formula_es(CycleStarSpec spec)
{
    return spec.cycle_len >= 8 ? conjectured_es(spec) : closed_form_es(spec);
}

IntRange parse_range(std::string_view text)
{
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        auto v = parse_int(text, text);
        return {v, v};
    }
    IntRange r{parse_int(text.substr(0, dots), text), parse_int(text.substr(dots + 2), text)};
    if (r.first > r.last)
        throw std::invalid_argument("empty range '" + std::string(text) + "'");
    return r;
}

bool SweepReport::any_unknown() const
{
    return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.es_exact; });
}

bool SweepReport::any_mismatch() const
{
    return std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.agrees == false; });
}

SweepRow solve_instance(CycleStarSpec spec, const SearchBudget& budget, bool seed_with_constructions)
{
    auto g = build_cycle_star(spec);
    SweepRow row;
    row.k = spec.cycle_len;
    row.l = spec.leaf_count;
    row.n = spec.order();
    row.lower_bound = lower_bound(g);
    row.es_formula = formula_es(spec);

    SolverOptions options;
    if (seed_with_constructions && spec.cycle_len <= 7)
        options.upper_witness = construct_labeling(spec).labeling;

    auto outcome = exact_es(g, budget, options);
    if (auto* result = std::get_if<EsResult>(&outcome)) {
        row.es_exact = result->es_value;
        row.agrees = result->es_value == row.es_formula;
        row.witness = result->witness;
        row.method = result->method;
        row.nodes = result->nodes_explored;
        row.elapsed_ms = result->elapsed.count();
    } else {
        const auto& unknown = std::get<EsUnknown>(outcome);
        row.method = Method::backtracking;
        row.nodes = unknown.nodes_explored;
        row.elapsed_ms = unknown.elapsed.count();
    }
    return row;
}

SweepReport sweep(const SweepConfig& config)
{
    const auto& [k_first, k_last] = config.k_range;
    const auto& [l_first, l_last] = config.l_range;
    if (k_first > k_last || l_first > l_last)
        throw std::invalid_argument("sweep ranges must be nonempty");
    if (k_first < 3)
        throw std::invalid_argument("cycle length must be at least 3");
    if (l_first < 1)
        throw std::invalid_argument("leaf count must be at least 1");

    SweepReport report;
    std::map<std::pair<int, int>, SweepRow> cached;
    std::ofstream cache_out;
    if (!config.cache_path.empty()) {
        cached = load_cache(config.cache_path, report.warnings);
        cache_out.open(config.cache_path, std::ios::app);
        if (!cache_out)
            throw std::runtime_error("cannot write cache '" + config.cache_path + "'");
    }

    std::vector<CycleStarSpec> specs;
    for (int k = k_first; k <= k_last; ++k)
        for (int l = l_first; l <= l_last; ++l)
            specs.push_back({k, l});

    report.rows.resize(specs.size());
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        auto hit = cached.find({specs[i].cycle_len, specs[i].leaf_count});
        if (hit != cached.end()) {
            report.rows[i] = hit->second;
            ++report.cache_hits;
        } else {
            todo.push_back(i);
        }
    }
    report.solver_calls = todo.size();

    std::atomic<std::size_t> next{0};
    std::mutex cache_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        for (;;) {
            auto t = next.fetch_add(1);
            if (t >= todo.size())
                return;
            auto i = todo[t];
            try {
                report.rows[i] = solve_instance(specs[i], config.budget, config.seed_with_constructions);
            } catch (...) {
                std::lock_guard lock(cache_mutex);
                if (!failure)
                    failure = std::current_exception();
                return;
            }
            // Unknown rows stay out of the cache so a bigger budget can retry them.
            if (cache_out.is_open() && report.rows[i].es_exact) {
                std::lock_guard lock(cache_mutex);
                cache_out << cache_line(report.rows[i]) << '\n' << std::flush;
            }
        }
    };

    const auto jobs = static_cast<std::size_t>(std::max(1, config.jobs));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < std::min(jobs, todo.size()); ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    if (cache_out.is_open() && !cache_out)
        throw std::runtime_error("failed writing cache '" + config.cache_path + "'");
    return report;
}

std::string emit_csv(const std::vector<SweepRow>& rows)
{
    std::string out = "k,l,n,lower_bound,es_formula,es_exact,agrees,method,nodes,elapsed_ms\n";
    for (const auto& r : rows) {
        out += std::to_string(r.k) + ',' + std::to_string(r.l) + ',' + std::to_string(r.n) + ','
            + std::to_string(r.lower_bound) + ',' + std::to_string(r.es_formula) + ',' + csv_field(r.es_exact) + ','
            + csv_field(r.agrees) + ',' + std::string(to_string(r.method)) + ',' + std::to_string(r.nodes) + ','
            + std::to_string(r.elapsed_ms) + '\n';
    }
    return out;
}

std::string emit_json(const std::vector<SweepRow>& rows)
{
    auto arr = ordered_json::array();
    for (const auto& r : rows)
        arr.push_back(row_json(r, false));
    return arr.dump(2) + "\n";
}

std::string cache_line(const SweepRow& row)
{
    return row_json(row, true).dump();
}

SweepRow parse_cache_line(std::string_view text, int line)
{
    SweepRow row;
    try {
        row = row_from_json(ordered_json::parse(text));
        check_row(row);
    } catch (const ordered_json::exception& e) {
        throw FormatError(line, std::string("malformed cache record: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(line, std::string("rejected cache record: ") + e.what());
    }
    return row;
}

std::vector<SweepRow> parse_report_json(std::string_view text)
{
    std::vector<SweepRow> rows;
    for (const auto& j : ordered_json::parse(text))
        rows.push_back(row_from_json(j));
    return rows;
}

}  // namespace eis
