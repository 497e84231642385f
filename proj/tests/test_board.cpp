#include <doctest.h>

#include <random>

#include "berge/board.hpp"
#include "berge/errors.hpp"
#include "berge/notation.hpp"

using namespace berge;

namespace {

constexpr Cell W = Cell::White;
constexpr Cell B = Cell::Black;
constexpr Cell E = Cell::Empty;

}  // namespace

TEST_CASE("standard start alternates from position 1") {
    const Board b = standard_start(5);
    CHECK(b.min_pos() == 1);
    CHECK(b.cells() == std::vector<Cell>{W, B, W, B, W});

    const Board one = standard_start(1, Cell::Black);
    CHECK(one.cells() == std::vector<Cell>{B});
    CHECK(one.min_pos() == 1);

    const Board six = standard_start(6);
    CHECK(six.white_count() == 3);
    CHECK(six.black_count() == 3);
    CHECK(six.render() == "1: oxoxox");

    CHECK_THROWS_AS(standard_start(0), InvalidArgument);
}

TEST_CASE("board trims to its pegs and reads empty outside") {
    const Board b(-3, {E, E, W, E, B, E});
    CHECK(b.min_pos() == -1);
    CHECK(b.max_pos() == 1);
    CHECK(b.at(-1) == W);
    CHECK(b.at(0) == E);
    CHECK(b.at(100) == E);
    CHECK(b.at(-100) == E);
    CHECK(Board(4, {E, E}).empty());
}

TEST_CASE("a 2-move opens a hole and extends the window") {
    const Board after = apply_move(standard_start(5), Move{6, 2}, 2);
    CHECK(after.min_pos() == 1);
    CHECK(after.cells() == std::vector<Cell>{W, E, E, B, W, B, W});
    CHECK(after.white_count() == 3);
    CHECK(after.black_count() == 2);
}

TEST_CASE("a 3-move to negative positions") {
    const Board after = apply_move(standard_start(7), Move{-2, 4}, 3);
    CHECK(after.min_pos() == -2);
    CHECK(after.max_pos() == 7);
    CHECK(after.render() == "-2: xoxoxo---o");
}

TEST_CASE("illegal moves") {
    const Board start = standard_start(5);
    CHECK_THROWS_AS(apply_move(start, Move{3, 3}, 2), InvalidArgument);
    CHECK_THROWS_AS(apply_move(start, Move{8, 2}, 0), InvalidArgument);

    SUBCASE("source block must be full") {
        CHECK(check_move(start, Move{10, 5}, 2) == MoveError::SourceNotFull);
        try {
            apply_move(start, Move{10, 5}, 2);
            FAIL("expected IllegalMove");
        } catch (const IllegalMove& e) {
            CHECK(e.kind() == MoveError::SourceNotFull);
        }
    }
    SUBCASE("destination must be vacant before the move") {
        CHECK(check_move(start, Move{5, 1}, 2) == MoveError::DestinationNotVacant);
        // Overlapping shift by one cell is not a k-move.
        CHECK(check_move(start, Move{2, 1}, 2) == MoveError::DestinationNotVacant);
    }
    CHECK_FALSE(check_move(start, Move{6, 2}, 2).has_value());
}

TEST_CASE("sortedness") {
    CHECK(is_sorted(Board(7, {W, W, W, B, B})));
    CHECK(is_sorted(Board(-4, {B, B, W, W, W})));
    CHECK_FALSE(is_sorted(Board(1, {W, W, B, W, B})));
    CHECK_FALSE(is_sorted(Board(1, {W, W, E, B, B})));
    CHECK(is_sorted(Board(1, {W, W, W})));
    CHECK(is_sorted(Board()));
    CHECK_FALSE(is_sorted(standard_start(3)));
    CHECK(is_sorted(standard_start(2)));
}

TEST_CASE("canonical form forgets the origin") {
    const Board a(5, {W, E, B});
    const Board b(-9, {E, W, E, B, E});
    CHECK(canonicalize(a) == canonicalize(b));
    CHECK(canonicalize(a).min_pos() == 0);
    CHECK_FALSE(canonicalize(a) == canonicalize(Board(0, {B, E, W})));
}

TEST_CASE("verify published solutions") {
    const VerificationReport r52 = verify_solution(parse_solution("{ 6 2 5 1 }", 2, 5));
    CHECK(r52.legal);
    CHECK(r52.sorted);
    CHECK(r52.move_count == 3);
    CHECK(r52.trace.size() == 4);

    const VerificationReport r93 = verify_solution(parse_solution("{ 10 4 9 3 8 1 }", 3, 9));
    CHECK(r93.ok());
    CHECK(r93.move_count == 5);

    Solution prefix = parse_solution("{ 6 2 5 1 }", 2, 5);
    prefix.moves.pop_back();
    const VerificationReport partial = verify_solution(prefix);
    CHECK(partial.legal);
    CHECK_FALSE(partial.sorted);
    CHECK(partial.move_count == 2);
}

TEST_CASE("verification reports the first illegal move") {
    const Solution bad = parse_solution("{ 8 2 5 8 1 }", 2, 7);
    const VerificationReport r = verify_solution(9, bad);
    CHECK_FALSE(r.legal);
    REQUIRE(r.failed_move.has_value());
    CHECK(*r.failed_move == 0);
    CHECK_FALSE(r.failure.empty());
    CHECK_FALSE(r.ok());
}

TEST_CASE("touched extent includes the k-blocks") {
    const VerificationReport r = verify_solution(parse_solution("{ -2 4 -1 3 -2 }", 3, 7));
    CHECK(r.ok());
    CHECK(r.min_touched == -2);
    CHECK(r.max_touched >= 7);
}

TEST_CASE("random legal sequences conserve pegs and are reversible") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution(3, 14)(rng);
        const int k = std::uniform_int_distribution(1, 4)(rng);
        Board b = standard_start(n);
        for (int step = 0; step < 12; ++step) {
            const int src = std::uniform_int_distribution(b.min_pos(), b.max_pos())(rng);
            const int dest = std::uniform_int_distribution(b.min_pos() - k - 2, b.max_pos() + 3)(rng);
            const Move m{dest, src};
            if (dest == src || check_move(b, m, k)) continue;
            const Board next = apply_move(b, m, k);
            CHECK(next.white_count() == b.white_count());
            CHECK(next.black_count() == b.black_count());
            CHECK(apply_move(next, Move{src, dest}, k) == b);
            b = next;
        }
    }
}
