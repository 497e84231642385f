#include "berge/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "assets.hpp"
#include "berge/bounds.hpp"
#include "berge/notation.hpp"

namespace berge {
namespace {

std::optional<SearchStatus> status_from_string(std::string_view s) {
    for (SearchStatus st : {SearchStatus::Solved, SearchStatus::UnsolvableWithinBounds,
                            SearchStatus::TriviallyUnsolvable, SearchStatus::BudgetExceeded}) {
        if (to_string(st) == s) return st;
    }
    return std::nullopt;
}

using Table = std::map<std::pair<int, int>, std::optional<int>>;

// Rows "n d2 d3 ... d14"; '-' marks cells without a value.
const Table& published_table() {
    static const Table table = [] {
        Table t;
        std::istringstream in{std::string(assets::published_deltas_text())};
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream row(line);
            int n = 0;
            row >> n;
            std::string cell;
            for (int k = 2; row >> cell; ++k) {
                t[{n, k}] = cell == "-" ? std::nullopt : std::optional<int>(std::stoi(cell));
            }
        }
        return t;
    }();
    return table;
}

}  // namespace

std::string to_json_line(const TableEntry& e) {
    nlohmann::json j;
    j["n"] = e.n;
    j["k"] = e.k;
    j["h"] = e.h ? nlohmann::json(*e.h) : nlohmann::json();
    j["status"] = std::string(to_string(e.status));
    j["solution"] = e.solution;
    j["spanUsed"] = e.span_used;
    j["nodes"] = e.nodes;
    j["elapsedMillis"] = e.elapsed_ms;
    return j.dump();
}

std::optional<TableEntry> from_json_line(const std::string& line) {
    try {
        const nlohmann::json j = nlohmann::json::parse(line);
        TableEntry e;
        e.n = j.at("n").get<int>();
        e.k = j.at("k").get<int>();
        if (!j.at("h").is_null()) {
            e.h = j["h"].get<int>();
            e.delta = *e.h - ceil_half(e.n);
        }
        auto st = status_from_string(j.at("status").get<std::string>());
        if (!st) return std::nullopt;
        e.status = *st;
        e.solution = j.value("solution", "");
        e.span_used = j.value("spanUsed", 0);
        e.nodes = j.value("nodes", std::uint64_t{0});
        e.elapsed_ms = j.value("elapsedMillis", std::int64_t{0});
        e.method = "cache";
        return e;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

ResultsCache::ResultsCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
        if (auto e = from_json_line(line)) {
            records_[{e->n, e->k}] = *e;
        }
    }
}

std::filesystem::path ResultsCache::default_path() {
    if (const char* env = std::getenv("BERGE_CACHE"); env && *env) {
        return env;
    }
    return "berge-cache.jsonl";
}

std::optional<TableEntry> ResultsCache::find(int n, int k, int min_span) const {
    std::shared_lock lock(mu_);
    auto it = records_.find({n, k});
    if (it == records_.end()) return std::nullopt;
    const TableEntry& e = it->second;
    if (e.status == SearchStatus::BudgetExceeded) return std::nullopt;
    if (e.status != SearchStatus::TriviallyUnsolvable && e.span_used < min_span) {
        return std::nullopt;
    }
    return e;
}

void ResultsCache::store(const TableEntry& e) {
    std::unique_lock lock(mu_);
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        throw std::runtime_error("cannot open results cache " + path_.string());
    }
    out << to_json_line(e) << '\n';
    out.flush();
    if (!out) {
        throw std::runtime_error("cannot write results cache " + path_.string());
    }
    TableEntry stored = e;
    stored.method = "cache";
    records_[{e.n, e.k}] = std::move(stored);
}

std::size_t ResultsCache::size() const {
    std::shared_lock lock(mu_);
    return records_.size();
}

TableEntry entry_from_outcome(int n, int k, const SearchOutcome& o) {
    TableEntry e;
    e.n = n;
    e.k = k;
    e.h = o.h;
    if (o.h) e.delta = *o.h - ceil_half(n);
    e.status = o.status;
    e.method = "exact";
    e.solution = o.solved() ? format_solution(o.witness) : "";
    e.span_used = o.span_used;
    e.nodes = o.nodes_expanded;
    e.elapsed_ms = o.elapsed.count();
    return e;
}

TableEntry compute_cell(const SearchConfig& tmpl, int n, int k, ResultsCache* cache) {
    SearchConfig c = tmpl;
    c.n = n;
    c.k = k;
    if (cache) {
        if (auto hit = cache->find(n, k, c.effective_span())) {
            return *hit;
        }
    }
    TableEntry e = entry_from_outcome(n, k, exact_h(c));
    if (cache && e.status != SearchStatus::BudgetExceeded) {
        cache->store(e);
    }
    return e;
}

std::vector<TableEntry> run_table(const SearchConfig& tmpl, int n_max, int k_max,
                                  ResultsCache* cache, unsigned workers) {
    std::vector<std::pair<int, int>> cells;
    for (int n = 4; n <= n_max; ++n) {
        for (int k = 2; k <= k_max && k + 2 <= n; ++k) {
            cells.emplace_back(n, k);
        }
    }
    std::vector<TableEntry> out(cells.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<std::size_t>(1, cells.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
            try {
                out[i] = compute_cell(tmpl, cells[i].first, cells[i].second, cache);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::string to_csv(const std::vector<TableEntry>& entries) {
    std::string s = "n,k,h,delta,status\n";
    for (const TableEntry& e : entries) {
        s += std::to_string(e.n) + ',' + std::to_string(e.k) + ',';
        s += (e.h ? std::to_string(*e.h) : "") + ',';
        s += (e.delta ? std::to_string(*e.delta) : "") + ',';
        s += std::string(to_string(e.status)) + '\n';
    }
    return s;
}

std::string to_jsonl(const std::vector<TableEntry>& entries) {
    std::string s;
    for (const TableEntry& e : entries) {
        s += to_json_line(e) + '\n';
    }
    return s;
}

std::optional<int> published_delta(int n, int k) {
    const Table& t = published_table();
    auto it = t.find({n, k});
    return it == t.end() ? std::nullopt : it->second;
}

std::vector<Mismatch> check_published(const std::vector<TableEntry>& entries,
                                     std::size_t* compared) {
    std::vector<Mismatch> out;
    std::size_t count = 0;
    for (const TableEntry& e : entries) {
        const auto expected = published_delta(e.n, e.k);
        if (!expected) continue;
        ++count;
        if (e.delta != expected) {
            out.push_back({e.n, e.k, expected, e.delta});
        }
    }
    if (compared) *compared = count;
    return out;
}

}  // namespace berge
