#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "berge/search.hpp"

namespace berge {

struct TableEntry {
    int n = 0;
    int k = 0;
    std::optional<int> h;
    std::optional<int> delta;  // h - ceil(n/2), present iff h is
    SearchStatus status = SearchStatus::UnsolvableWithinBounds;
    std::string method = "exact";  // exact | cache | constructive
    std::string solution;          // notation, "" when unsolved
    int span_used = 0;
    std::uint64_t nodes = 0;
    std::int64_t elapsed_ms = 0;
};

/// One JSON object per line: n, k, h, status, solution, spanUsed, nodes,
/// elapsedMillis. Later records for the same (n, k) override earlier ones.
std::string to_json_line(const TableEntry& e);
std::optional<TableEntry> from_json_line(const std::string& line);

/// Append-only JSON-lines store. Lookups may run concurrently; appends are
/// serialised.
class ResultsCache {
public:
    explicit ResultsCache(std::filesystem::path path);

    /// BERGE_CACHE, or ./berge-cache.jsonl.
    static std::filesystem::path default_path();

    /// A solved or unsolvable record whose span is at least `min_span`.
    std::optional<TableEntry> find(int n, int k, int min_span) const;
    /// Throws std::runtime_error when the file cannot be written.
    void store(const TableEntry& e);

    const std::filesystem::path& path() const { return path_; }
    std::size_t size() const;

private:
    std::filesystem::path path_;
    mutable std::shared_mutex mu_;
    std::map<std::pair<int, int>, TableEntry> records_;
};

TableEntry entry_from_outcome(int n, int k, const SearchOutcome& o);

/// Exact value for one cell, consulting and filling the cache when given.
TableEntry compute_cell(const SearchConfig& tmpl, int n, int k, ResultsCache* cache);

/// All cells with 2 <= k <= k_max and k+2 <= n <= n_max, ordered by (n, k).
/// Cells run on up to `workers` threads (0 = hardware concurrency).
std::vector<TableEntry> run_table(const SearchConfig& tmpl, int n_max, int k_max,
                                  ResultsCache* cache, unsigned workers = 0);

std::string to_csv(const std::vector<TableEntry>& entries);  // header n,k,h,delta,status
std::string to_jsonl(const std::vector<TableEntry>& entries);

/// Published h(n,k) - ceil(n/2) for 5 <= n <= 50, 2 <= k <= 14; nullopt for
/// cells outside that range or marked as unsolvable.
std::optional<int> published_delta(int n, int k);

struct Mismatch {
    int n = 0;
    int k = 0;
    std::optional<int> expected;
    std::optional<int> actual;
};

/// Entries with a published value whose computed delta differs (or is missing).
std::vector<Mismatch> check_published(const std::vector<TableEntry>& entries,
                                     std::size_t* compared = nullptr);

}  // namespace berge
