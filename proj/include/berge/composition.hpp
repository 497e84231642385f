#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge/board.hpp"
#include "berge/search.hpp"

namespace berge {

struct ConditionResult {
    bool passed = false;
    std::vector<std::string> diagnostics;
    std::optional<int> offending_n;          // base solution at fault, if any
    std::optional<std::size_t> offending_move;
};

/// Checks for extending solutions by blocks of 4k pegs:
///  (i)   the 4k-peg block solution has exactly 2k moves;
///  (ii)  it ends shifted k cells right (window k+1..5k) and touches only cells >= 1;
///  (iii) each base solution for nk <= n < nk+4k has ceil(n/2) moves;
///  (iv)  each base solution touches only cells >= 1-k.
struct ConditionReport {
    ConditionResult block_length;     // (i)
    ConditionResult block_shift;      // (ii)
    ConditionResult base_lengths;     // (iii)
    ConditionResult base_floor;       // (iv)

    bool all_passed() const {
        return block_length.passed && block_shift.passed && base_lengths.passed &&
               base_floor.passed;
    }
};

struct CompositionBasis {
    int k = 0;
    int nk = 0;
    std::optional<Solution> block_solution;   // sorts 4k pegs
    std::map<int, Solution> base_solutions;   // keyed by n
    std::optional<ConditionReport> condition_report;
};

class CompositionError : public std::runtime_error {
public:
    enum class Kind { PreconditionViolated, CompositionFailed };

    CompositionError(Kind kind, const std::string& what, std::optional<Board> board = {})
        : std::runtime_error(what), kind_(kind), board_(std::move(board)) {}

    Kind kind() const noexcept { return kind_; }
    const std::optional<Board>& intermediate() const noexcept { return board_; }

private:
    Kind kind_;
    std::optional<Board> board_;
};

ConditionReport check_conditions(const CompositionBasis& basis);

/// ceil(n/2) + ceil(n/k) - ceil(nk/k).
int composition_bound(int n, int k, int nk);

/// The block solution reflected about cells 1..4k: it sorts the leftmost 4k
/// pegs into cells 1-k..3k and never touches a cell right of 4k.
Solution mirror_block(const Solution& block);

/// For nk <= n < nk+4k returns the base solution. Above that, the mirrored
/// block solution sorts the first 4k pegs, the solution for n-4k pegs runs
/// shifted 4k cells right, and four k-moves found by find_completion join
/// the two sorted strings.
Solution compose(const CompositionBasis& basis, int n);

/// Searches a basis: the block solution with a target window of k+1..5k,
/// cells 1..5k and exactly 2k moves; base solutions with cells >= 1-k and
/// exactly ceil(n/2) moves. Missing pieces stay empty.
CompositionBasis derive_basis(int k, int nk, const SearchConfig& tmpl = {});

std::string basis_to_json(const CompositionBasis& basis);
/// Throws InvalidArgument on malformed input, ParseError on bad notation.
CompositionBasis basis_from_json(const std::string& text);

}  // namespace berge
