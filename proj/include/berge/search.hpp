#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "berge/board.hpp"

namespace berge {

enum class SearchStatus { Solved, UnsolvableWithinBounds, TriviallyUnsolvable, BudgetExceeded };

std::string_view to_string(SearchStatus s);

/// Largest occupied extent a packed search state can hold.
inline constexpr int kMaxSearchSpan = 64;

struct SearchConfig {
    int n = 0;
    int k = 1;
    int max_span = 0;  // occupied extent limit in cells; 0 selects n + 2k (at most 64)
    int max_depth = 64;
    bool widen = true;
    int widen_stability_rounds = 2;
    int max_widen_rounds = 8;  // extra spans tried while still unsolved
    // Widening cannot improve on a value that meets lower_bound(n, k).
    bool stop_at_lower_bound = true;
    std::size_t max_states = 50'000'000;
    std::chrono::milliseconds time_limit{300'000};

    static SearchConfig defaults(int n, int k);
    int effective_span() const {
        return max_span > 0 ? max_span : std::min(n + 2 * k, kMaxSearchSpan);
    }
};

enum class ColorOrder { WhiteFirst, BlackFirst };

/// Absolute-position restrictions. Any move touching a cell below floor_pos
/// (or above ceiling_pos) is pruned; the start string occupies 1..n.
struct SearchConstraints {
    int floor_pos = 1;
    std::optional<int> ceiling_pos;
    std::optional<std::pair<int, int>> target_window;  // inclusive
    std::optional<ColorOrder> target_order;
    std::optional<int> exact_length;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::UnsolvableWithinBounds;
    std::optional<int> h;
    Solution witness;
    std::uint64_t nodes_expanded = 0;
    std::uint64_t states_stored = 0;
    int span_used = 0;
    // The value is minimal over solutions whose occupied extent stays within
    // span_used; the unbounded board may in principle admit shorter ones.
    bool window_optimal = true;
    int widen_rounds = 0;
    std::chrono::milliseconds elapsed{0};

    bool solved() const { return status == SearchStatus::Solved; }
};

/// n >= 3 and k >= 3 with n <= k+1: a k-block stays an alternating run forever.
bool trivially_unsolvable(int n, int k);

/// Breadth-first search over translation-normalised states. Successors are
/// generated in (src ascending, dest ascending) order and the first goal
/// generated wins, so witnesses are reproducible.
SearchOutcome exact_h(const SearchConfig& config);

/// As exact_h, but over absolute positions so that floor/ceiling, target
/// window/order and exact-length requirements can be expressed.
SearchOutcome search_with_constraints(const SearchConfig& config,
                                      const SearchConstraints& constraints);

/// Exactly `moves` k-moves taking `from` to a sorted board, with every
/// touched cell inside [floor_pos, ceiling_pos] (at most 64 cells). Meets in
/// the middle: forward from `from`, backward from the two sorted shapes.
std::optional<std::vector<Move>> find_completion(const Board& from, int k, int moves,
                                                 int floor_pos, int ceiling_pos);

}  // namespace berge
