#include "berge/search.hpp"

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <string>
#include <vector>

#include "berge/bounds.hpp"
#include "packed_state.hpp"

namespace berge {

using detail::Packed;

std::string_view to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Solved: return "solved";
        case SearchStatus::UnsolvableWithinBounds: return "unsolvable-within-bounds";
        case SearchStatus::TriviallyUnsolvable: return "trivially-unsolvable";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

SearchConfig SearchConfig::defaults(int n, int k) {
    SearchConfig c;
    c.n = n;
    c.k = k;
    c.max_span = c.effective_span();
    return c;
}

bool trivially_unsolvable(int n, int k) { return n >= 3 && k >= 3 && n <= k + 1; }

namespace {

using Clock = std::chrono::steady_clock;

struct Frame {
    int k = 1;
    int span = 0;
    bool canonical = true;
    int top_cell = 63;  // absolute frames: highest usable cell index
};

// Calls emit(next, src, dest) for every legal k-move from `p` whose result
// fits the frame, in (src ascending, dest ascending) order. Cell indices are
// relative to p's own frame. Returns false if emit asked to stop.
template <typename Emit>
bool for_each_successor(const Packed& p, const Frame& f, Emit&& emit) {
    const int k = f.k;
    const std::uint64_t km = detail::low_mask(k);
    const int top = detail::highest(p.occ);
    for (int s = detail::lowest(p.occ); s + k - 1 <= top; ++s) {
        if (((p.occ >> s) & km) != km) {
            continue;
        }
        const std::uint64_t lifted = p.occ & ~(km << s);
        if (lifted == 0) {
            continue;
        }
        const std::uint64_t lifted_black = p.black & ~(km << s);
        const std::uint64_t block = (p.black >> s) & km;
        const int lo = detail::lowest(lifted);
        const int hi = detail::highest(lifted);
        int dmin = hi - f.span + 1;
        int dmax = lo + f.span - k;
        if (!f.canonical) {
            dmin = std::max(dmin, 0);
            dmax = std::min(dmax, f.top_cell - k + 1);
        }
        for (int d = dmin; d <= dmax; ++d) {
            const std::uint64_t hit =
                d >= 0 ? (detail::shr(p.occ, d) & km)
                       : (d + k > 0 ? (p.occ & detail::low_mask(d + k)) : 0);
            if (hit != 0) {
                continue;
            }
            Packed next;
            if (!f.canonical) {
                next.occ = lifted | (km << d);
                next.black = lifted_black | (block << d);
            } else if (d < 0) {
                next.occ = (lifted << -d) | km;
                next.black = (lifted_black << -d) | block;
            } else {
                const int sh = std::min(lo, d);
                next.occ = (lifted >> sh) | (km << (d - sh));
                next.black = (lifted_black >> sh) | (block << (d - sh));
            }
            if (!emit(next, s, d)) {
                return false;
            }
        }
    }
    return true;
}

struct Node {
    Packed state;
    std::uint32_t parent;
    std::int16_t src;
    std::int16_t dest;
};

struct Budget {
    std::size_t max_states;
    Clock::time_point deadline;
};

template <typename Goal>
class Bfs {
public:
    Bfs(const Frame& frame, Goal goal, Budget budget)
        : frame_(frame), goal_(std::move(goal)), budget_(budget) {}

    // Plain BFS with a global visited set, or, when exact_length is set,
    // layered search that only deduplicates within a layer.
    SearchStatus run(const Packed& start, int max_depth, std::optional<int> exact_length) {
        nodes_.push_back(Node{start, 0, 0, 0});
        const bool layered = exact_length.has_value();
        const int depth_cap = layered ? *exact_length : max_depth;
        if (goal_(start) && (!layered || *exact_length == 0)) {
            goal_index_ = 0;
            return SearchStatus::Solved;
        }
        absl::flat_hash_set<Packed> seen;
        seen.insert(start);
        std::size_t layer_begin = 0;
        for (int depth = 0; depth < depth_cap; ++depth) {
            const std::size_t layer_end = nodes_.size();
            if (layer_begin == layer_end) {
                break;
            }
            if (layered) {
                seen.clear();
            }
            const bool goal_layer = !layered || depth + 1 == *exact_length;
            for (std::size_t idx = layer_begin; idx < layer_end; ++idx) {
                ++expanded_;
                if ((expanded_ & 0xFFF) == 0 && Clock::now() > budget_.deadline) {
                    return SearchStatus::BudgetExceeded;
                }
                const Packed current = nodes_[idx].state;
                bool found = false;
                for_each_successor(current, frame_, [&](const Packed& next, int s, int d) {
                    if (!seen.insert(next).second) {
                        return true;
                    }
                    nodes_.push_back(Node{next, static_cast<std::uint32_t>(idx),
                                          static_cast<std::int16_t>(s),
                                          static_cast<std::int16_t>(d)});
                    if (goal_layer && goal_(next)) {
                        found = true;
                        return false;
                    }
                    return true;
                });
                if (found) {
                    goal_index_ = nodes_.size() - 1;
                    return SearchStatus::Solved;
                }
                if (nodes_.size() > budget_.max_states) {
                    return SearchStatus::BudgetExceeded;
                }
            }
            layer_begin = layer_end;
        }
        return SearchStatus::UnsolvableWithinBounds;
    }

    // (src, dest) per step, in frame-relative cells, start to goal.
    std::vector<std::pair<int, int>> path() const {
        std::vector<std::pair<int, int>> steps;
        for (std::size_t idx = *goal_index_; idx != 0; idx = nodes_[idx].parent) {
            steps.emplace_back(nodes_[idx].src, nodes_[idx].dest);
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
    }

    std::uint64_t expanded() const { return expanded_; }
    std::uint64_t stored() const { return nodes_.size(); }

private:
    Frame frame_;
    Goal goal_;
    Budget budget_;
    std::vector<Node> nodes_;
    std::optional<std::size_t> goal_index_;
    std::uint64_t expanded_ = 0;
};

// Turns frame-relative steps into absolute moves by replaying them. In a
// canonical frame cell 0 is the leftmost peg of the current board.
Solution rebuild(int n, int k, const std::vector<std::pair<int, int>>& steps,
                 std::optional<int> absolute_base) {
    Solution sol{k, n, {}};
    Board board = standard_start(n);
    for (auto [src, dest] : steps) {
        const int base = absolute_base ? *absolute_base : board.min_pos();
        const Move m{base + dest, base + src};
        board = apply_move(board, m, k);
        sol.moves.push_back(m);
    }
    return sol;
}

SearchOutcome trivial_outcome(const SearchConfig& config) {
    SearchOutcome out;
    if (config.n <= 2) {
        // Already sorted.
        out.status = SearchStatus::Solved;
        out.h = 0;
        out.witness = Solution{config.k, config.n, {}};
        out.window_optimal = false;
    } else {
        out.status = SearchStatus::TriviallyUnsolvable;
    }
    out.span_used = config.effective_span();
    return out;
}

void validate(const SearchConfig& config) {
    if (config.n < 1 || config.k < 1) {
        throw InvalidArgument("search: need n >= 1 and k >= 1");
    }
    if (config.effective_span() < config.n || config.effective_span() > kMaxSearchSpan) {
        throw InvalidArgument("search: max_span must lie in [n, " +
                              std::to_string(kMaxSearchSpan) + "], got " +
                              std::to_string(config.effective_span()));
    }
    if (config.max_depth < 0) {
        throw InvalidArgument("search: max_depth must be >= 0");
    }
}

// Runs `once(span)` at the configured span and, if widening is enabled, at
// successively larger spans until the value has been stable long enough.
template <typename Once>
SearchOutcome widen(const SearchConfig& config, Once once) {
    const auto t0 = Clock::now();
    int span = config.effective_span();
    SearchOutcome best = once(span);
    std::uint64_t expanded = best.nodes_expanded;
    std::uint64_t stored = best.states_stored;
    int rounds = 0;
    int stable = 0;
    int unsolved_rounds = 0;
    auto at_floor = [&config](const SearchOutcome& o) {
        return config.stop_at_lower_bound && o.solved() && config.n >= 3 &&
               *o.h == lower_bound(config.n, config.k);
    };
    while (config.widen && best.status != SearchStatus::BudgetExceeded) {
        if (best.solved() && (stable >= config.widen_stability_rounds || at_floor(best))) {
            break;
        }
        if (!best.solved() && unsolved_rounds >= config.max_widen_rounds) {
            break;
        }
        if (span + 1 > kMaxSearchSpan) {
            break;
        }
        ++span;
        ++rounds;
        SearchOutcome next = once(span);
        expanded += next.nodes_expanded;
        stored = std::max(stored, next.states_stored);
        if (next.status == SearchStatus::BudgetExceeded) {
            best = std::move(next);
            break;
        }
        if (!next.solved()) {
            ++unsolved_rounds;
            best.span_used = span;
            continue;
        }
        if (best.solved() && next.h == best.h) {
            ++stable;
            best.span_used = span;
        } else {
            stable = 0;
            best = std::move(next);
        }
    }
    best.nodes_expanded = expanded;
    best.states_stored = stored;
    best.widen_rounds = rounds;
    best.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    if (best.solved() && config.n >= 3 && *best.h == lower_bound(config.n, config.k)) {
        best.window_optimal = false;
    }
    return best;
}

Budget make_budget(const SearchConfig& config, Clock::time_point t0) {
    return Budget{config.max_states, t0 + config.time_limit};
}

}  // namespace

SearchOutcome exact_h(const SearchConfig& config) {
    validate(config);
    if (config.n <= 2 || trivially_unsolvable(config.n, config.k)) {
        return trivial_outcome(config);
    }
    const auto t0 = Clock::now();
    const Packed start = detail::pack(standard_start(config.n), 1);
    return widen(config, [&](int span) {
        Frame frame{config.k, span, true, 63};
        Bfs bfs(frame, [](const Packed& p) { return detail::is_sorted(p); },
                make_budget(config, t0));
        SearchOutcome out;
        out.status = bfs.run(start, config.max_depth, std::nullopt);
        out.nodes_expanded = bfs.expanded();
        out.states_stored = bfs.stored();
        out.span_used = span;
        if (out.solved()) {
            out.witness = rebuild(config.n, config.k, bfs.path(), std::nullopt);
            out.h = static_cast<int>(out.witness.size());
        }
        return out;
    });
}

SearchOutcome search_with_constraints(const SearchConfig& config,
                                      const SearchConstraints& constraints) {
    validate(config);
    if (config.n <= 2 || trivially_unsolvable(config.n, config.k)) {
        return trivial_outcome(config);
    }
    const int base = constraints.floor_pos;
    if (base > 1) {
        throw InvalidArgument("search_with_constraints: floor_pos must be <= 1");
    }
    int top_cell = kMaxSearchSpan - 1;
    if (constraints.ceiling_pos) {
        if (*constraints.ceiling_pos < config.n) {
            throw InvalidArgument("search_with_constraints: ceiling_pos must be >= n");
        }
        top_cell = std::min(top_cell, *constraints.ceiling_pos - base);
    }
    if (config.n - base > top_cell) {
        throw InvalidArgument("search_with_constraints: start string does not fit the frame");
    }

    std::uint64_t window_mask = 0;
    if (constraints.target_window) {
        const auto [lo, hi] = *constraints.target_window;
        if (hi - lo + 1 != config.n || lo < base || hi - base > top_cell) {
            throw InvalidArgument("search_with_constraints: target window must hold n cells "
                                  "inside the frame");
        }
        window_mask = detail::low_mask(config.n) << (lo - base);
    }
    const std::optional<ColorOrder> order = constraints.target_order;
    auto goal = [window_mask, order](const Packed& p) {
        if (!detail::is_sorted(p)) {
            return false;
        }
        if (window_mask != 0 && p.occ != window_mask) {
            return false;
        }
        if (order && p.black != 0 && p.black != p.occ) {
            const bool white_first = (p.black & (p.occ & (~p.occ + 1))) == 0;
            return white_first == (*order == ColorOrder::WhiteFirst);
        }
        return true;
    };

    const auto t0 = Clock::now();
    const Packed start = detail::pack(standard_start(config.n), base);
    return widen(config, [&](int span) {
        Frame frame{config.k, span, false, top_cell};
        Bfs bfs(frame, goal, make_budget(config, t0));
        SearchOutcome out;
        out.status = bfs.run(start, config.max_depth, constraints.exact_length);
        out.nodes_expanded = bfs.expanded();
        out.states_stored = bfs.stored();
        out.span_used = span;
        if (out.solved()) {
            out.witness = rebuild(config.n, config.k, bfs.path(), base);
            out.h = static_cast<int>(out.witness.size());
        }
        return out;
    });
}

namespace {

struct LayerNode {
    Packed state;
    std::uint32_t parent;
};

// States reachable in exactly `depth` moves, deduplicated within each layer.
// Returns all nodes; the last layer starts at *last_layer.
std::vector<LayerNode> expand_layers(std::vector<Packed> roots, const Frame& frame, int depth,
                                     std::size_t* last_layer) {
    std::vector<LayerNode> nodes;
    for (const Packed& r : roots) {
        nodes.push_back(LayerNode{r, static_cast<std::uint32_t>(nodes.size())});
    }
    std::size_t begin = 0;
    for (int d = 0; d < depth; ++d) {
        const std::size_t end = nodes.size();
        absl::flat_hash_set<Packed> seen;
        for (std::size_t idx = begin; idx < end; ++idx) {
            const Packed current = nodes[idx].state;
            for_each_successor(current, frame, [&](const Packed& next, int, int) {
                if (seen.insert(next).second) {
                    nodes.push_back(LayerNode{next, static_cast<std::uint32_t>(idx)});
                }
                return true;
            });
        }
        begin = end;
    }
    *last_layer = begin;
    return nodes;
}

Packed normalized(const Packed& p) {
    const int lo = detail::lowest(p.occ);
    return Packed{p.occ >> lo, p.black >> lo};
}

}  // namespace

std::optional<std::vector<Move>> find_completion(const Board& from, int k, int moves,
                                                 int floor_pos, int ceiling_pos) {
    if (k < 1 || moves < 0) {
        throw InvalidArgument("find_completion: need k >= 1 and moves >= 0");
    }
    if (from.empty() || from.min_pos() < floor_pos || from.max_pos() > ceiling_pos ||
        ceiling_pos - floor_pos + 1 > kMaxSearchSpan) {
        throw InvalidArgument("find_completion: board must lie inside a frame of at most 64 cells");
    }
    const int span = ceiling_pos - floor_pos + 1;
    const Frame absolute{k, span, false, span - 1};
    const Frame canonical{k, span, true, 63};

    std::size_t fwd_last = 0;
    const auto fwd = expand_layers({detail::pack(from, floor_pos)}, absolute, (moves + 1) / 2,
                                   &fwd_last);

    const int whites = from.white_count();
    const int blacks = from.black_count();
    std::vector<Packed> goals;
    const std::uint64_t all = detail::low_mask(whites + blacks);
    goals.push_back(Packed{all, all & ~detail::low_mask(whites)});
    if (whites > 0 && blacks > 0) {
        goals.push_back(Packed{all, detail::low_mask(blacks)});
    }
    std::size_t bwd_last = 0;
    const auto bwd = expand_layers(goals, canonical, moves / 2, &bwd_last);
    absl::flat_hash_map<Packed, std::uint32_t> meet;
    for (std::size_t i = bwd_last; i < bwd.size(); ++i) {
        meet.emplace(bwd[i].state, static_cast<std::uint32_t>(i));
    }

    auto move_between = [&](const Packed& a, const Packed& b, auto&& accept) {
        // First absolute move from a whose result satisfies accept(b-candidate).
        std::optional<std::pair<Move, Packed>> found;
        for_each_successor(a, absolute, [&](const Packed& next, int s, int d) {
            if (accept(next, b)) {
                found.emplace(Move{floor_pos + d, floor_pos + s}, next);
                return false;
            }
            return true;
        });
        return found;
    };
    auto same_absolute = [](const Packed& x, const Packed& y) { return x == y; };
    auto same_shape = [](const Packed& x, const Packed& y) { return normalized(x) == y; };

    for (std::size_t i = fwd_last; i < fwd.size(); ++i) {
        auto hit = meet.find(normalized(fwd[i].state));
        if (hit == meet.end()) {
            continue;
        }
        std::vector<std::uint32_t> chain;
        for (std::uint32_t idx = static_cast<std::uint32_t>(i); fwd[idx].parent != idx;
             idx = fwd[idx].parent) {
            chain.push_back(idx);
        }
        std::vector<Move> result;
        Packed cur = detail::pack(from, floor_pos);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            auto step = move_between(cur, fwd[*it].state, same_absolute);
            result.push_back(step->first);
            cur = step->second;
        }
        bool ok = true;
        for (std::uint32_t idx = hit->second; bwd[idx].parent != idx; idx = bwd[idx].parent) {
            auto step = move_between(cur, bwd[bwd[idx].parent].state, same_shape);
            if (!step) {
                ok = false;
                break;
            }
            result.push_back(step->first);
            cur = step->second;
        }
        if (ok && detail::is_sorted(cur)) {
            return result;
        }
    }
    return std::nullopt;
}

}  // namespace berge
