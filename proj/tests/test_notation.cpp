#include <doctest.h>

#include <random>

#include "berge/board.hpp"
#include "berge/errors.hpp"
#include "berge/notation.hpp"
#include "fixtures.hpp"

using namespace berge;

TEST_CASE("chained groups expand to moves") {
    const Solution s = parse_solution("{ 7 4 1 } U { 9 3 }", 2, 6);
    CHECK(s.k == 2);
    CHECK(s.n == 6);
    CHECK(s.moves == std::vector<Move>{{7, 4}, {4, 1}, {9, 3}});

    const Solution neg = parse_solution("{ -2 4 -1 3 -2 }", 3, 7);
    CHECK(neg.moves == std::vector<Move>{{-2, 4}, {4, -1}, {-1, 3}, {3, -2}});
}

TEST_CASE("union separators") {
    const std::vector<Move> expected{{7, 4}, {4, 1}, {9, 3}};
    CHECK(parse_solution("{7 4 1}u{9 3}", 2, 6).moves == expected);
    CHECK(parse_solution("{ 7 4 1 } \xE2\x88\xAA { 9 3 }", 2, 6).moves == expected);
    CHECK(parse_solution("  {\t7 4 1 }\nU { 9 3 }  ", 2, 6).moves == expected);
}

TEST_CASE("empty solution sentinel") {
    CHECK(parse_solution("{}", 2, 2).moves.empty());
    CHECK(parse_solution("{ }", 2, 2).moves.empty());
    CHECK(format_solution(Solution{2, 2, {}}) == "{}");
}

TEST_CASE("malformed notation") {
    CHECK_THROWS_AS(parse_solution("{ 5 }", 2, 5), ParseError);
    CHECK_THROWS_AS(parse_solution("", 2, 5), ParseError);
    CHECK_THROWS_AS(parse_solution("{ 6 2 5 1", 2, 5), ParseError);
    CHECK_THROWS_AS(parse_solution("{ 6 2 } { 5 1 }", 2, 5), ParseError);
    CHECK_THROWS_AS(parse_solution("{ 6 6 }", 2, 5), ParseError);
    CHECK_THROWS_AS(parse_solution("{ 6 x }", 2, 5), ParseError);
    CHECK_THROWS_AS(parse_solution("{ 6 2 } U", 2, 5), ParseError);
    CHECK_THROWS_AS(parse_solution("{ 99999999999999 1 }", 2, 5), ParseError);

    try {
        parse_solution("{ 6 2 } U { 7 }", 2, 5);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 10);
    }
}

TEST_CASE("formatting chains greedily") {
    CHECK(format_solution(Solution{2, 5, {{6, 2}, {2, 5}, {5, 1}}}) == "{ 6 2 5 1 }");
    CHECK(format_solution(Solution{2, 6, {{7, 4}, {4, 1}, {9, 3}}}) == "{ 7 4 1 } U { 9 3 }");
}

TEST_CASE("published solutions round-trip") {
    for (const auto& f : fixtures::published()) {
        CAPTURE(f.name);
        const Solution s = parse_solution(f.text, f.k, f.n);
        CHECK(format_solution(s) == f.text);
        CHECK(parse_solution(format_solution(s), f.k, f.n) == s);
    }
}

TEST_CASE("random move lists round-trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        Solution s{2, 9, {}};
        const int m = std::uniform_int_distribution(1, 12)(rng);
        for (int i = 0; i < m; ++i) {
            // Chain continuation about half the time.
            const int dest = !s.moves.empty() && rng() % 2 ? s.moves.back().src
                                                          : std::uniform_int_distribution(-20, 20)(rng);
            int src = std::uniform_int_distribution(-20, 20)(rng);
            if (src == dest) ++src;
            s.moves.push_back({dest, src});
        }
        CHECK(parse_solution(format_solution(s), s.k, s.n) == s);
    }
}
