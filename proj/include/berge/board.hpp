#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "berge/errors.hpp"

namespace berge {

enum class Cell : unsigned char { Empty, White, Black };

inline bool is_peg(Cell c) { return c != Cell::Empty; }
inline Cell opposite(Cell c) {
    return c == Cell::White ? Cell::Black : c == Cell::Black ? Cell::White : Cell::Empty;
}

/// One Berge move: the pegs at src..src+k-1 go to the holes dest..dest+k-1.
/// The block size k is carried by the enclosing Solution.
struct Move {
    int dest = 0;
    int src = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

struct Solution {
    int k = 1;
    int n = 1;
    std::vector<Move> moves;

    std::size_t size() const { return moves.size(); }
    friend bool operator==(const Solution&, const Solution&) = default;
};

/// A finite window of cells over the unbounded integer line. Everything
/// outside [min_pos(), max_pos()] is empty. The window is always trimmed so
/// that its first and last cells hold pegs (an empty board has no cells).
class Board {
public:
    Board() = default;
    Board(int origin, std::vector<Cell> cells);

    Cell at(int pos) const;
    bool empty() const { return cells_.empty(); }

    int min_pos() const { return origin_; }
    int max_pos() const { return origin_ + static_cast<int>(cells_.size()) - 1; }
    int extent() const { return static_cast<int>(cells_.size()); }

    int white_count() const { return whites_; }
    int black_count() const { return blacks_; }
    int peg_count() const { return whites_ + blacks_; }

    const std::vector<Cell>& cells() const { return cells_; }

    /// `1: oxoxo` style: origin, then one char per cell (o white, x black, - hole).
    std::string render() const;

    friend bool operator==(const Board&, const Board&) = default;

private:
    int origin_ = 0;
    std::vector<Cell> cells_;
    int whites_ = 0;
    int blacks_ = 0;
};

/// Alternating string at positions 1..n, `first` at position 1.
Board standard_start(int n, Cell first = Cell::White);

/// Throws InvalidArgument for k < 1 or dest == src, IllegalMove otherwise.
Board apply_move(const Board& board, const Move& move, int k);

/// Legality check without building the result.
std::optional<MoveError> check_move(const Board& board, const Move& move, int k);

/// No holes, and at most one run of each colour.
bool is_sorted(const Board& board);

/// The same cells translated so that the first peg sits at position 0.
Board canonicalize(const Board& board);

struct VerificationReport {
    bool legal = true;
    bool sorted = false;
    std::size_t move_count = 0;
    std::optional<std::size_t> failed_move;  // index of the first illegal move
    std::string failure;
    int min_occupied = 0;  // final window
    int max_occupied = 0;
    int min_touched = 0;  // over every cell read or written by a move, and the start
    int max_touched = 0;
    std::vector<Board> trace;  // start board then one board per applied move

    bool ok() const { return legal && sorted; }
    const Board& final_board() const { return trace.back(); }
};

/// Replays the solution from standard_start(n, first). Illegal moves are
/// reported, not thrown.
VerificationReport verify_solution(const Solution& solution, Cell first = Cell::White);
VerificationReport verify_solution(int n, const Solution& solution, Cell first = Cell::White);

}  // namespace berge
