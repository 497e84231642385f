#pragma once

#include <string_view>
#include <vector>

namespace berge::fixtures {

struct Published {
    std::string_view name;
    int n;
    int k;
    std::string_view text;
    int length;
};

// Every published solution, with the move count its table states.
inline const std::vector<Published>& published() {
    static const std::vector<Published> all = {
        // 2-moves
        {"S5,2", 5, 2, "{ 6 2 5 1 }", 3},
        {"S6,2", 6, 2, "{ 7 4 1 } U { 9 3 }", 3},
        {"S7,2", 7, 2, "{ 8 2 5 8 1 }", 4},
        // 1-moves, n = 3 (mod 4)
        {"S3,1", 3, 1, "{ 4 1 }", 1},
        {"S7,1", 7, 1, "{ 8 3 6 1 }", 3},
        {"S11,1", 11, 1, "{ 12 3 10 5 8 1 }", 5},
        {"S15,1", 15, 1, "{ 16 3 14 5 12 7 10 1 }", 7},
        // 3-moves, n = 1 (mod 4)
        {"S5,3", 5, 3, "{ 6 2 5 1 }", 3},
        {"S9,3", 9, 3, "{ 10 4 9 3 8 1 }", 5},
        {"S13,3", 13, 3, "{ 14 6 13 5 12 3 10 1 }", 7},
        {"S17,3", 17, 3, "{ 18 8 17 7 16 5 14 3 12 1 }", 9},
        // n = 2 (mod 4)
        {"S6,3", 6, 3, "{ 7 2 6 1 }", 3},
        {"S10,3", 10, 3, "{ 11 4 10 3 8 1 }", 5},
        {"S14,3", 14, 3, "{ 15 6 14 5 12 3 10 1 }", 7},
        {"S18,3", 18, 3, "{ 19 8 18 7 16 5 14 3 12 1 }", 9},
        // n = 3 (mod 4)
        {"S7,3", 7, 3, "{ -2 4 -1 3 -2 }", 4},
        {"S11,3", 11, 3, "{ -2 8 1 7 0 5 -2 }", 6},
        {"S15,3", 15, 3, "{ -2 12 3 11 2 9 0 7 -2 }", 8},
        {"S19,3", 19, 3, "{ -2 16 5 15 4 13 2 11 0 9 -2 }", 10},
        // n = 0 (mod 4), one move above ceil(n/2)
        {"barS16,3", 16, 3, "{ 17 2 13 8 12 7 16 6 10 1 }", 9},
        {"barS20,3", 20, 3, "{ 21 2 17 10 16 9 14 7 20 6 12 1 }", 11},
        {"barS24,3", 24, 3, "{ 25 2 21 12 20 11 18 9 16 7 24 6 14 1 }", 13},
        {"S12,3", 12, 3, "{ 13 2 5 11 3 12 6 1 }", 7},
        // n = 0 (mod 4) in ceil(n/2)
        {"S8,3", 8, 3, "{ 9 2 7 3 9 }", 4},
        {"S20,3", 20, 3, "{ 21 2 7 12 17 } U { 24 13 22 6 1 } U { 17 8 24 }", 10},
        {"S24,3", 24, 3, "{ 25 6 13 18 } U { -2 4 8 24 14 22 } U { 18 3 12 -1 25 }", 12},
        {"S28,3", 28, 3, "{ 29 2 7 16 23 12 } U { 32 17 30 25 21 6 1 } U { 12 23 8 32 }", 14},
        {"S32,3", 32, 3, "{ 33 2 7 12 17 24 } U { 36 6 31 13 29 19 1 } U { 24 11 35 18 28 4 }", 16},
    };
    return all;
}

}  // namespace berge::fixtures
