#pragma once

#include <map>
#include <optional>
#include <string_view>

#include "berge/board.hpp"

namespace berge {

enum class ConstructionMethod { K1Pattern, K3Mod1, K3Mod2, K3Mod3, K3Mod0Bar, LookupTable };

std::string_view to_string(ConstructionMethod m);

struct ConstructionPlan {
    int n = 0;
    int k = 0;
    ConstructionMethod method = ConstructionMethod::K1Pattern;
    int claimed_length = 0;
};

/// Families exist for k = 1 (n >= 3) and k = 3 (n >= 5).
bool has_construction(int n, int k);
ConstructionPlan plan_construction(int n, int k);

/// Interleaving chain { n+1 a n-1 a+2 ... }. For n = 4i+3 this is the
/// floor(n/2)-move chain { 4i+4 3 4i+2 5 ... 2i+4 1 }; the other residues
/// use ceil(n/2) moves.
Solution construct_k1(int n);

/// Entry-wise shift used by the n = 4i+1 and n = 4i+2 recursions: entries in
/// [1, 2i-2] gain 2, entries >= 2i+1 gain 4. Anything else means the ignored
/// pegs would be disturbed, and raises InvariantViolation.
Solution remap_k3_indices(const Solution& inner, int i);

Solution construct_k3(int n);

/// The n = 4i >= 16 construction in ceil(n/2)+1 moves:
/// { 4i+1 2 4i-3 }, S(4i-10) shifted by 6, then { 7 4i 6 2i+2 1 }.
Solution construct_k3_bar(int n);

/// Embedded k = 3 solutions for n in {8, 12, 16, 20, 24, 28, 32}.
const std::map<int, Solution>& k3_lookup_table();
std::optional<Solution> lookup_k3(int n);

/// Dispatches to construct_k1 / construct_k3.
Solution construct(int n, int k);

Solution shift_solution(const Solution& s, int delta);

struct ShiftReport {
    bool legal_and_sorted = false;
    int min_occupied = 0;
    int max_occupied = 0;
    bool window_ok = false;    // final window is exactly 4..n+3
    bool whites_left = false;  // the ceil(n/2) whites form the left block
};

/// Replays construct_k3(n) for n = 2 (mod 4), n >= 6.
ShiftReport k3_shift_check(int n);

}  // namespace berge
