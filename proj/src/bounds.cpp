#include "berge/bounds.hpp"

#include <cstdlib>

namespace berge {

int disorder(const Board& board) {
    int count = 0;
    for (int p = board.min_pos(); p <= board.max_pos(); ++p) {
        const Cell c = board.at(p);
        if (is_peg(c) && board.at(p + 1) != c) {
            ++count;
        }
    }
    return count;
}

int lower_bound(int n, int k) {
    if (n < 3) {
        throw InvalidArgument("lower_bound: n must be >= 3");
    }
    if (k < 1) {
        throw InvalidArgument("lower_bound: k must be >= 1");
    }
    return (k == 1 || n < 5) ? n / 2 : ceil_half(n);
}

MoveClass classify(int before, int after) {
    switch (before - after) {
        case 2: return MoveClass::Optimal;
        case 1: return MoveClass::Suboptimal;
        case 0: return MoveClass::Neutral;
        default: return MoveClass::Worsening;
    }
}

std::string_view to_string(MoveClass c) {
    switch (c) {
        case MoveClass::Optimal: return "optimal";
        case MoveClass::Suboptimal: return "suboptimal";
        case MoveClass::Neutral: return "neutral";
        case MoveClass::Worsening: return "worsening";
    }
    return "?";
}

DisorderTrace audit_trace(const std::vector<Board>& boards) {
    DisorderTrace trace;
    for (const Board& b : boards) {
        trace.values.push_back(disorder(b));
    }
    for (std::size_t t = 0; t + 1 < trace.values.size(); ++t) {
        const int before = trace.values[t];
        const int after = trace.values[t + 1];
        trace.classes.push_back(classify(before, after));
        if (std::abs(before - after) > 2) {
            trace.jump_violations.push_back(t);
        }
    }
    trace.first_move_optimal =
        !trace.classes.empty() && trace.classes.front() == MoveClass::Optimal;
    return trace;
}

DisorderTrace audit_trace(int n, const Solution& solution) {
    const VerificationReport report = verify_solution(n, solution);
    if (!report.legal) {
        throw InvalidArgument("audit_trace: illegal solution: " + report.failure);
    }
    return audit_trace(report.trace);
}

}  // namespace berge
