#include "berge/constructive.hpp"

#include <sstream>
#include <string>

#include "assets.hpp"
#include "berge/bounds.hpp"
#include "berge/notation.hpp"

namespace berge {
namespace {

bool k3_lookup_is_optimal(int n) {
    return n == 8 || n == 20 || n == 24 || n == 28 || n == 32;
}

Solution from_chain(int n, int k, const std::vector<int>& entries) {
    Solution s{k, n, {}};
    for (std::size_t t = 0; t + 1 < entries.size(); ++t) {
        s.moves.push_back(Move{entries[t], entries[t + 1]});
    }
    return s;
}

// n = 4i+1 and n = 4i+2 share the recursion; `base` is S(5) or S(6).
Solution k3_lift(Solution s, int n) {
    for (int m = s.n + 4; m <= n; m += 4) {
        const int i = m / 4;
        s = remap_k3_indices(s, i);
        s.moves.push_back(Move{3, 2 * i + 4});
        s.moves.push_back(Move{2 * i + 4, 1});
    }
    return s;
}

}  // namespace

std::string_view to_string(ConstructionMethod m) {
    switch (m) {
        case ConstructionMethod::K1Pattern: return "k1-pattern";
        case ConstructionMethod::K3Mod1: return "k3-mod1";
        case ConstructionMethod::K3Mod2: return "k3-mod2";
        case ConstructionMethod::K3Mod3: return "k3-mod3";
        case ConstructionMethod::K3Mod0Bar: return "k3-mod0-bar";
        case ConstructionMethod::LookupTable: return "lookup";
    }
    return "?";
}

bool has_construction(int n, int k) { return (k == 1 && n >= 3) || (k == 3 && n >= 5); }

ConstructionPlan plan_construction(int n, int k) {
    if (!has_construction(n, k)) {
        throw InvalidArgument("no construction for n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
    }
    ConstructionPlan plan{n, k, ConstructionMethod::K1Pattern, ceil_half(n)};
    if (k == 1) {
        if (n % 4 == 3) {
            plan.claimed_length = n / 2;
        }
        return plan;
    }
    switch (n % 4) {
        case 1: plan.method = ConstructionMethod::K3Mod1; break;
        case 2: plan.method = ConstructionMethod::K3Mod2; break;
        case 3: plan.method = ConstructionMethod::K3Mod3; break;
        default:
            plan.method = k3_lookup_table().contains(n) ? ConstructionMethod::LookupTable
                                                        : ConstructionMethod::K3Mod0Bar;
            if (!k3_lookup_is_optimal(n)) {
                plan.claimed_length += 1;
            }
    }
    return plan;
}

Solution construct_k1(int n) {
    if (n < 3) {
        throw InvalidArgument("construct_k1: n must be >= 3");
    }
    // Entries alternate between a falling even-offset sequence from n+1 and a
    // rising sequence from `low`; the final entry fills the last hole.
    int low = 0;
    int last = 1;
    int length = ceil_half(n);
    switch (n % 4) {
        case 3: low = 3; length = n / 2; break;
        case 1: low = 3; break;
        case 0: low = 2; break;
        case 2: low = 2; last = n + 1; break;
    }
    std::vector<int> entries;
    int high = n + 1;
    while (static_cast<int>(entries.size()) < length) {
        entries.push_back(high);
        high -= 2;
        if (static_cast<int>(entries.size()) == length) {
            break;
        }
        entries.push_back(low);
        low += 2;
    }
    entries.push_back(last);
    return from_chain(n, 1, entries);
}

Solution remap_k3_indices(const Solution& inner, int i) {
    auto remap = [i](int e) {
        if (e >= 1 && e <= 2 * i - 2) {
            return e + 2;
        }
        if (e >= 2 * i + 1) {
            return e + 4;
        }
        throw InvariantViolation("remap_k3_indices: entry " + std::to_string(e) +
                                 " outside [1, " + std::to_string(2 * i - 2) + "] U [" +
                                 std::to_string(2 * i + 1) + ", inf) for i=" + std::to_string(i));
    };
    Solution out{inner.k, inner.n + 4, {}};
    out.moves.reserve(inner.moves.size());
    for (const Move& m : inner.moves) {
        out.moves.push_back(Move{remap(m.dest), remap(m.src)});
    }
    return out;
}

Solution shift_solution(const Solution& s, int delta) {
    Solution out = s;
    for (Move& m : out.moves) {
        m.dest += delta;
        m.src += delta;
    }
    return out;
}

Solution construct_k3(int n) {
    if (n < 5) {
        throw InvalidArgument("construct_k3: n must be >= 5");
    }
    switch (n % 4) {
        case 1: return k3_lift(from_chain(5, 3, {6, 2, 5, 1}), n);
        case 2: return k3_lift(from_chain(6, 3, {7, 2, 6, 1}), n);
        case 3: {
            if (n == 7) {
                return from_chain(7, 3, {-2, 4, -1, 3, -2});
            }
            Solution inner = shift_solution(construct_k3(n - 1), -3);
            Solution s{3, n, {Move{-2, n - 3}}};
            s.moves.insert(s.moves.end(), inner.moves.begin(), inner.moves.end());
            return s;
        }
        default:
            if (auto s = lookup_k3(n)) {
                return *s;
            }
            return construct_k3_bar(n);
    }
}

Solution construct_k3_bar(int n) {
    if (n < 16 || n % 4 != 0) {
        throw InvalidArgument("construct_k3_bar: n must be a multiple of 4, >= 16");
    }
    const int i = n / 4;
    Solution s{3, n, {Move{4 * i + 1, 2}, Move{2, 4 * i - 3}}};
    const Solution inner = shift_solution(construct_k3(n - 10), 6);
    s.moves.insert(s.moves.end(), inner.moves.begin(), inner.moves.end());
    for (Move m : {Move{7, 4 * i}, Move{4 * i, 6}, Move{6, 2 * i + 2}, Move{2 * i + 2, 1}}) {
        s.moves.push_back(m);
    }
    return s;
}

const std::map<int, Solution>& k3_lookup_table() {
    static const std::map<int, Solution> table = [] {
        std::map<int, Solution> t;
        std::istringstream in{std::string(assets::lookup_k3_text())};
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') {
                continue;
            }
            std::istringstream fields(line);
            int n = 0;
            int k = 0;
            fields >> n >> k;
            std::string rest;
            std::getline(fields, rest);
            t.emplace(n, parse_solution(rest, k, n));
        }
        return t;
    }();
    return table;
}

std::optional<Solution> lookup_k3(int n) {
    const auto& t = k3_lookup_table();
    if (auto it = t.find(n); it != t.end()) {
        return it->second;
    }
    return std::nullopt;
}

Solution construct(int n, int k) {
    if (k == 1) {
        return construct_k1(n);
    }
    if (k == 3) {
        return construct_k3(n);
    }
    throw InvalidArgument("no construction for k=" + std::to_string(k));
}

ShiftReport k3_shift_check(int n) {
    if (n < 6 || n % 4 != 2) {
        throw InvalidArgument("k3_shift_check: n must be 2 mod 4 and >= 6");
    }
    ShiftReport r;
    const VerificationReport v = verify_solution(construct_k3(n));
    r.legal_and_sorted = v.ok();
    r.min_occupied = v.min_occupied;
    r.max_occupied = v.max_occupied;
    r.window_ok = v.min_occupied == 4 && v.max_occupied == n + 3;
    const Board& b = v.final_board();
    r.whites_left = r.legal_and_sorted && b.at(b.min_pos()) == Cell::White &&
                    b.white_count() == ceil_half(n);
    return r;
}

}  // namespace berge
