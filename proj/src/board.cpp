#include "berge/board.hpp"

#include <algorithm>
#include <sstream>

namespace berge {

Board::Board(int origin, std::vector<Cell> cells) {
    auto first = std::find_if(cells.begin(), cells.end(), is_peg);
    if (first == cells.end()) {
        return;
    }
    auto last = std::find_if(cells.rbegin(), cells.rend(), is_peg).base();
    origin_ = origin + static_cast<int>(first - cells.begin());
    cells_.assign(first, last);
    for (Cell c : cells_) {
        whites_ += c == Cell::White;
        blacks_ += c == Cell::Black;
    }
}

Cell Board::at(int pos) const {
    if (cells_.empty() || pos < min_pos() || pos > max_pos()) {
        return Cell::Empty;
    }
    return cells_[static_cast<std::size_t>(pos - origin_)];
}

std::string Board::render() const {
    std::string out = std::to_string(origin_) + ": ";
    for (Cell c : cells_) {
        out += c == Cell::White ? 'o' : c == Cell::Black ? 'x' : '-';
    }
    return out;
}

Board standard_start(int n, Cell first) {
    if (n < 1) {
        throw InvalidArgument("standard_start: n must be >= 1, got " + std::to_string(n));
    }
    if (!is_peg(first)) {
        throw InvalidArgument("standard_start: first colour must be a peg");
    }
    std::vector<Cell> cells(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cells[static_cast<std::size_t>(i)] = i % 2 == 0 ? first : opposite(first);
    }
    return Board(1, std::move(cells));
}

std::optional<MoveError> check_move(const Board& board, const Move& move, int k) {
    if (k < 1) {
        throw InvalidArgument("block size k must be >= 1");
    }
    if (move.dest == move.src) {
        throw InvalidArgument("move destination equals its source (" +
                              std::to_string(move.src) + ")");
    }
    for (int t = 0; t < k; ++t) {
        if (!is_peg(board.at(move.src + t))) {
            return MoveError::SourceNotFull;
        }
    }
    for (int t = 0; t < k; ++t) {
        if (is_peg(board.at(move.dest + t))) {
            return MoveError::DestinationNotVacant;
        }
    }
    return std::nullopt;
}

Board apply_move(const Board& board, const Move& move, int k) {
    if (auto err = check_move(board, move, k)) {
        std::ostringstream msg;
        msg << "illegal move {" << move.dest << " " << move.src << "}: "
            << (*err == MoveError::SourceNotFull ? "source not full" : "destination not vacant");
        throw IllegalMove(*err, msg.str());
    }
    const int lo = std::min(board.min_pos(), move.dest);
    const int hi = std::max(board.max_pos(), move.dest + k - 1);
    std::vector<Cell> cells(static_cast<std::size_t>(hi - lo + 1), Cell::Empty);
    for (int p = board.min_pos(); p <= board.max_pos(); ++p) {
        cells[static_cast<std::size_t>(p - lo)] = board.at(p);
    }
    for (int t = 0; t < k; ++t) {
        cells[static_cast<std::size_t>(move.src + t - lo)] = Cell::Empty;
    }
    for (int t = 0; t < k; ++t) {
        cells[static_cast<std::size_t>(move.dest + t - lo)] = board.at(move.src + t);
    }
    return Board(lo, std::move(cells));
}

bool is_sorted(const Board& board) {
    const auto& cells = board.cells();
    int runs = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!is_peg(cells[i])) {
            return false;
        }
        if (i == 0 || cells[i] != cells[i - 1]) {
            ++runs;
        }
    }
    return runs <= 2;
}

Board canonicalize(const Board& board) { return Board(0, board.cells()); }

VerificationReport verify_solution(const Solution& solution, Cell first) {
    VerificationReport report;
    Board board = standard_start(solution.n, first);
    report.min_touched = board.min_pos();
    report.max_touched = board.max_pos();
    report.trace.push_back(board);
    const int k = solution.k;
    for (std::size_t i = 0; i < solution.moves.size(); ++i) {
        const Move& m = solution.moves[i];
        try {
            board = apply_move(board, m, k);
        } catch (const std::exception& e) {
            report.legal = false;
            report.failed_move = i;
            report.failure = e.what();
            break;
        }
        report.min_touched = std::min({report.min_touched, m.dest, m.src});
        report.max_touched = std::max({report.max_touched, m.dest + k - 1, m.src + k - 1});
        report.trace.push_back(board);
    }
    report.move_count = solution.moves.size();
    report.sorted = report.legal && is_sorted(board);
    report.min_occupied = board.min_pos();
    report.max_occupied = board.max_pos();
    return report;
}

VerificationReport verify_solution(int n, const Solution& solution, Cell first) {
    if (solution.n != n) {
        Solution copy = solution;
        copy.n = n;
        return verify_solution(copy, first);
    }
    return verify_solution(solution, first);
}

}  // namespace berge
