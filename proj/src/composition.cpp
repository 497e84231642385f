#include "berge/composition.hpp"

#include <algorithm>
#include <json.hpp>

#include "berge/bounds.hpp"
#include "berge/constructive.hpp"
#include "berge/notation.hpp"

namespace berge {
namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void fail(ConditionResult& r, std::string message) {
    r.passed = false;
    r.diagnostics.push_back(std::move(message));
}

// Index of the first move touching a cell below `floor_pos`.
std::optional<std::size_t> first_below(const Solution& s, int floor_pos) {
    for (std::size_t i = 0; i < s.moves.size(); ++i) {
        if (std::min(s.moves[i].dest, s.moves[i].src) < floor_pos) {
            return i;
        }
    }
    return std::nullopt;
}


// Long monochrome runs and gaps are shortened to `cap` cells, keeping `cap/2`
// cells at each end, so that a short join can be searched in a 64-cell frame.
// Positions are translated back; the caller verifies the result.
class RunCompression {
public:
    RunCompression(const Board& board, int cap) : half_(cap / 2) {
        std::vector<Cell> cells;
        const auto& src = board.cells();
        for (std::size_t i = 0; i < src.size();) {
            std::size_t j = i;
            while (j < src.size() && src[j] == src[i]) ++j;
            const int len = static_cast<int>(j - i);
            const int kept = len > 2 * half_ ? 2 * half_ : len;
            runs_.push_back({board.min_pos() + static_cast<int>(cells.size()),
                             board.min_pos() + static_cast<int>(i), len, kept});
            cells.insert(cells.end(), kept, src[i]);
            i = j;
        }
        compressed_ = Board(board.min_pos(), std::move(cells));
        shift_ = board.max_pos() - compressed_.max_pos();
    }

    const Board& board() const { return compressed_; }

    int expand(int pos) const {
        if (pos < compressed_.min_pos()) return pos;
        if (pos > compressed_.max_pos()) return pos + shift_;
        for (const Run& r : runs_) {
            const int o = pos - r.comp_start;
            if (o >= 0 && o < r.kept) {
                return o < half_ || r.kept == r.len ? r.orig_start + o
                                                    : r.orig_start + r.len - (r.kept - o);
            }
        }
        return pos;
    }

private:
    struct Run {
        int comp_start, orig_start, len, kept;
    };
    int half_;
    int shift_ = 0;
    std::vector<Run> runs_;
    Board compressed_;
};

// Exactly `moves` k-moves sorting `mid`, touching cells >= floor_pos only.
std::optional<std::vector<Move>> join(const Board& mid, int k, int moves, int floor_pos) {
    const int margin = 2 * k;
    if (mid.max_pos() + margin - floor_pos < kMaxSearchSpan) {
        return find_completion(mid, k, moves, floor_pos, mid.max_pos() + margin);
    }
    const RunCompression rc(mid, 2 * (2 * k + 1));
    const Board& small = rc.board();
    if (small.max_pos() + margin - floor_pos >= kMaxSearchSpan) return std::nullopt;
    auto found = find_completion(small, k, moves, floor_pos, small.max_pos() + margin);
    if (!found) return std::nullopt;
    for (Move& m : *found) {
        m = Move{rc.expand(m.dest), rc.expand(m.src)};
    }
    return found;
}

}  // namespace

int composition_bound(int n, int k, int nk) {
    return ceil_half(n) + ceil_div(n, k) - ceil_div(nk, k);
}

ConditionReport check_conditions(const CompositionBasis& basis) {
    ConditionReport r;
    r.block_length.passed = r.block_shift.passed = true;
    r.base_lengths.passed = r.base_floor.passed = true;
    const int k = basis.k;

    if (!basis.block_solution) {
        fail(r.block_length, "missing block solution");
        fail(r.block_shift, "missing block solution");
    } else {
        Solution block = *basis.block_solution;
        const VerificationReport v = verify_solution(4 * k, block);
        if (!v.ok()) {
            const std::string why = v.legal ? "block solution does not sort"
                                            : "block solution illegal: " + v.failure;
            fail(r.block_length, why);
            fail(r.block_shift, why);
            r.block_length.offending_move = r.block_shift.offending_move = v.failed_move;
        } else {
            if (static_cast<int>(block.size()) != 2 * k) {
                fail(r.block_length, "block solution has " + std::to_string(block.size()) +
                                         " moves, need " + std::to_string(2 * k));
            }
            if (v.min_occupied != k + 1 || v.max_occupied != 5 * k) {
                fail(r.block_shift, "block ends on " + std::to_string(v.min_occupied) + ".." +
                                        std::to_string(v.max_occupied) + ", need " +
                                        std::to_string(k + 1) + ".." + std::to_string(5 * k));
            }
            if (auto i = first_below(block, 1)) {
                fail(r.block_shift, "block solution touches a cell below 1");
                r.block_shift.offending_move = i;
            }
        }
    }

    if (basis.k < 1 || basis.nk < 1) {
        fail(r.base_lengths, "missing k or nk");
        fail(r.base_floor, "missing k or nk");
        return r;
    }
    for (int n = basis.nk; n < basis.nk + 4 * k; ++n) {
        auto it = basis.base_solutions.find(n);
        if (it == basis.base_solutions.end()) {
            const std::string why = "missing base solution for n=" + std::to_string(n);
            fail(r.base_lengths, why);
            fail(r.base_floor, why);
            r.base_lengths.offending_n = r.base_floor.offending_n = n;
            continue;
        }
        const Solution& s = it->second;
        const VerificationReport v = verify_solution(n, s);
        if (!v.ok()) {
            fail(r.base_lengths, "base solution for n=" + std::to_string(n) + " does not verify");
            r.base_lengths.offending_n = n;
            r.base_lengths.offending_move = v.failed_move;
            continue;
        }
        if (static_cast<int>(s.size()) != ceil_half(n)) {
            fail(r.base_lengths, "base solution for n=" + std::to_string(n) + " has " +
                                     std::to_string(s.size()) + " moves, need " +
                                     std::to_string(ceil_half(n)));
            r.base_lengths.offending_n = n;
        }
        if (auto i = first_below(s, 1 - k)) {
            fail(r.base_floor, "base solution for n=" + std::to_string(n) +
                                   " touches a cell below " + std::to_string(1 - k));
            r.base_floor.offending_n = n;
            r.base_floor.offending_move = i;
        }
    }
    return r;
}

Solution mirror_block(const Solution& block) {
    const int k = block.k;
    Solution out{k, block.n, {}};
    for (const Move& m : block.moves) {
        out.moves.push_back(Move{3 * k + 2 - m.dest, 3 * k + 2 - m.src});
    }
    return out;
}

Solution compose(const CompositionBasis& basis, int n) {
    const int k = basis.k;
    if (!check_conditions(basis).all_passed()) {
        throw CompositionError(CompositionError::Kind::PreconditionViolated,
                               "composition basis does not satisfy its conditions");
    }
    if (n < basis.nk) {
        throw CompositionError(CompositionError::Kind::PreconditionViolated,
                               "n=" + std::to_string(n) + " is below nk=" +
                                   std::to_string(basis.nk));
    }
    const int step = 4 * k;
    int m = basis.nk + (n - basis.nk) % step;
    Solution sol = basis.base_solutions.at(m);
    const Solution head = mirror_block(*basis.block_solution);
    const int floor_pos = 1 - k;

    for (m += step; m <= n; m += step) {
        Solution next{k, m, head.moves};
        const Solution tail = shift_solution(sol, step);
        next.moves.insert(next.moves.end(), tail.moves.begin(), tail.moves.end());
        const VerificationReport v = verify_solution(next);
        if (!v.legal) {
            throw CompositionError(CompositionError::Kind::CompositionFailed,
                                   "n=" + std::to_string(m) + ": sub-solutions collide: " +
                                       v.failure);
        }
        const Board& mid = v.final_board();
        if (mid.min_pos() < floor_pos) {
            throw CompositionError(CompositionError::Kind::CompositionFailed,
                                   "n=" + std::to_string(m) + ": intermediate board leaves the frame",
                                   mid);
        }
        auto joined = join(mid, k, 4, floor_pos);
        if (!joined) {
            throw CompositionError(CompositionError::Kind::CompositionFailed,
                                   "n=" + std::to_string(m) + ": no 4-move join found", mid);
        }
        next.moves.insert(next.moves.end(), joined->begin(), joined->end());
        if (!verify_solution(next).ok()) {
            throw CompositionError(CompositionError::Kind::CompositionFailed,
                                   "n=" + std::to_string(m) + ": composed solution does not verify",
                                   mid);
        }
        sol = std::move(next);
    }
    return sol;
}

CompositionBasis derive_basis(int k, int nk, const SearchConfig& tmpl) {
    CompositionBasis basis;
    basis.k = k;
    basis.nk = nk;

    auto configure = [&](int n) {
        SearchConfig c = tmpl;
        c.n = n;
        c.k = k;
        c.max_span = 0;
        c.widen = false;
        return c;
    };

    SearchConstraints block;
    block.floor_pos = 1;
    block.ceiling_pos = 5 * k;
    block.target_window = std::pair{k + 1, 5 * k};
    block.exact_length = 2 * k;
    SearchOutcome b = search_with_constraints(configure(4 * k), block);
    if (b.solved()) {
        basis.block_solution = b.witness;
    }

    for (int n = nk; n < nk + 4 * k; ++n) {
        SearchConstraints base;
        base.floor_pos = 1 - k;
        base.exact_length = ceil_half(n);
        SearchOutcome o = search_with_constraints(configure(n), base);
        if (o.solved()) {
            basis.base_solutions.emplace(n, o.witness);
        }
    }
    basis.condition_report = check_conditions(basis);
    return basis;
}

namespace {

nlohmann::json to_json(const ConditionResult& r) {
    nlohmann::json j{{"passed", r.passed}, {"diagnostics", r.diagnostics}};
    j["offendingN"] = r.offending_n ? nlohmann::json(*r.offending_n) : nlohmann::json();
    j["offendingMove"] =
        r.offending_move ? nlohmann::json(*r.offending_move) : nlohmann::json();
    return j;
}

}  // namespace

std::string basis_to_json(const CompositionBasis& basis) {
    nlohmann::json j;
    j["k"] = basis.k;
    j["nk"] = basis.nk;
    j["blockSolution"] =
        basis.block_solution ? nlohmann::json(format_solution(*basis.block_solution))
                             : nlohmann::json();
    j["baseSolutions"] = nlohmann::json::array();
    for (const auto& [n, s] : basis.base_solutions) {
        j["baseSolutions"].push_back({{"n", n}, {"solution", format_solution(s)}});
    }
    const ConditionReport report = basis.condition_report.value_or(check_conditions(basis));
    j["conditionReport"] = {{"i", to_json(report.block_length)},
                            {"ii", to_json(report.block_shift)},
                            {"iii", to_json(report.base_lengths)},
                            {"iv", to_json(report.base_floor)}};
    return j.dump(2) + "\n";
}

CompositionBasis basis_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("basis file: ") + e.what());
    }
    try {
        CompositionBasis basis;
        basis.k = j.at("k").get<int>();
        basis.nk = j.at("nk").get<int>();
        if (j.contains("blockSolution") && !j["blockSolution"].is_null()) {
            basis.block_solution =
                parse_solution(j["blockSolution"].get<std::string>(), basis.k, 4 * basis.k);
        }
        for (const auto& entry : j.value("baseSolutions", nlohmann::json::array())) {
            const int n = entry.at("n").get<int>();
            basis.base_solutions.emplace(
                n, parse_solution(entry.at("solution").get<std::string>(), basis.k, n));
        }
        // The stored report is informational; it is always recomputed.
        basis.condition_report = check_conditions(basis);
        return basis;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("basis file: ") + e.what());
    }
}

}  // namespace berge
