#pragma once

#include <string_view>
#include <vector>

#include "berge/board.hpp"

namespace berge {

/// Number of pegs whose immediate right cell is not a peg of the same colour.
int disorder(const Board& board);

/// floor(n/2) for k = 1 or n < 5, ceil(n/2) for k >= 2 and n >= 5.
int lower_bound(int n, int k);

inline int ceil_half(int n) { return (n + 1) / 2; }

/// Classification by the disorder decrease D(before) - D(after).
enum class MoveClass { Optimal, Suboptimal, Neutral, Worsening };

MoveClass classify(int before, int after);
std::string_view to_string(MoveClass c);

struct DisorderTrace {
    std::vector<int> values;       // D(0..m)
    std::vector<MoveClass> classes;  // one per move
    std::vector<std::size_t> jump_violations;  // moves with |dD| > 2; expected empty
    bool first_move_optimal = false;

    int initial() const { return values.front(); }
    int final() const { return values.back(); }
};

/// Throws InvalidArgument when the solution does not replay legally.
DisorderTrace audit_trace(int n, const Solution& solution);
DisorderTrace audit_trace(const std::vector<Board>& boards);

}  // namespace berge
