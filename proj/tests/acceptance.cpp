// End-to-end acceptance checks; prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "berge/bounds.hpp"
#include "berge/composition.hpp"
#include "berge/constructive.hpp"
#include "berge/harness.hpp"
#include "berge/notation.hpp"
#include "berge/search.hpp"
#include "fixtures.hpp"

using namespace berge;

namespace {

// Collects the first few failures of a criterion.
struct Check {
    std::ostringstream why;
    int failures = 0;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ < 3) why << (failures > 1 ? "; " : "") << what;
    }
};

std::map<std::pair<int, int>, int> g_exact;  // exact h from criterion 4

std::string cell(int n, int k) {
    return "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

// Random walk of legal k-moves from the alternating start.
Solution random_legal(std::mt19937& rng) {
    const int n = std::uniform_int_distribution(3, 16)(rng);
    const int k = std::uniform_int_distribution(1, 4)(rng);
    const int want = std::uniform_int_distribution(1, 10)(rng);
    Solution s{k, n, {}};
    Board b = standard_start(n);
    for (int tries = 0; static_cast<int>(s.size()) < want && tries < 400; ++tries) {
        const int src = std::uniform_int_distribution(b.min_pos(), b.max_pos())(rng);
        int dest = std::uniform_int_distribution(b.min_pos() - k - 1, b.max_pos() + 2)(rng);
        if (!s.moves.empty() && rng() % 2) dest = s.moves.back().src;
        const Move m{dest, src};
        if (dest == src || check_move(b, m, k)) continue;
        b = apply_move(b, m, k);
        s.moves.push_back(m);
    }
    return s;
}

void fixture_replay(Check& c) {
    for (const auto& f : fixtures::published()) {
        const Solution s = parse_solution(f.text, f.k, f.n);
        const VerificationReport v = verify_solution(s);
        c.expect(v.legal, std::string(f.name) + " illegal");
        c.expect(v.sorted, std::string(f.name) + " not sorted");
        c.expect(static_cast<int>(s.size()) == f.length, std::string(f.name) + " length");
    }
}

void constructive_coverage(Check& c) {
    for (int n = 5; n <= 200; ++n) {
        const Solution s = construct_k3(n);
        c.expect(verify_solution(s).ok(), "k=3 n=" + std::to_string(n) + " does not verify");
        const bool tight = n % 4 != 0 || n == 8 || n == 20 || n == 24 || n == 28 || n == 32;
        c.expect(static_cast<int>(s.size()) == ceil_half(n) + (tight ? 0 : 1),
                 "k=3 n=" + std::to_string(n) + " length " + std::to_string(s.size()));
    }
    for (const auto& f : fixtures::published()) {
        if (f.k == 3 && f.n % 4 != 0 && f.n <= 19) {
            c.expect(format_solution(construct_k3(f.n)) == f.text,
                     std::string(f.name) + " differs from the table");
        }
    }
}

void k1_family(Check& c) {
    for (int n = 3; n <= 199; ++n) {
        const Solution s = construct_k1(n);
        const std::string tag = "k=1 n=" + std::to_string(n);
        c.expect(verify_solution(s).ok(), tag + " does not verify");
        if (n % 4 == 3) {
            const int i = (n - 3) / 4;
            std::vector<int> pattern;
            for (int j = 0; j <= i; ++j) {
                pattern.push_back(4 * i + 4 - 2 * j);
                if (j < i) pattern.push_back(3 + 2 * j);
            }
            pattern.push_back(1);
            std::vector<int> got{s.moves.front().dest};
            for (const Move& m : s.moves) got.push_back(m.src);
            c.expect(got == pattern, tag + " differs from the pattern");
            c.expect(static_cast<int>(s.size()) == n / 2, tag + " length");
        } else {
            c.expect(static_cast<int>(s.size()) == ceil_half(n), tag + " length");
        }
    }
}

void exact_values(Check& c) {
    for (auto [n, h] : {std::pair{5, 3}, {6, 3}, {7, 4}}) {
        const SearchOutcome o = exact_h(SearchConfig::defaults(n, 2));
        c.expect(o.h == h, "h" + cell(n, 2) + " != " + std::to_string(h));
    }
    const auto entries = run_table(SearchConfig{}, 13, 5, nullptr);
    std::size_t compared = 0;
    for (const Mismatch& m : check_published(entries, &compared)) {
        c.expect(false, "delta" + cell(m.n, m.k) + " = " +
                            (m.actual ? std::to_string(*m.actual) : "none") + ", published " +
                            std::to_string(*m.expected));
    }
    c.expect(compared == 33, std::to_string(compared) + " cells compared, expected 33");
    for (const TableEntry& e : entries) {
        if (e.h) g_exact[{e.n, e.k}] = *e.h;
    }
    // Family cells used by the cross-checks below.
    for (int n = 3; n <= 13; ++n) {
        if (const SearchOutcome o = exact_h(SearchConfig::defaults(n, 1)); o.h) {
            g_exact[{n, 1}] = *o.h;
        }
    }
}

void lower_bounds(Check& c) {
    c.expect(!g_exact.empty(), "no exact values available");
    for (const auto& [nk, h] : g_exact) {
        if (nk.first >= 3) {
            c.expect(h >= lower_bound(nk.first, nk.second), "h" + cell(nk.first, nk.second));
        }
    }
    auto audit = [&](const Solution& s, const std::string& tag) {
        const DisorderTrace t = audit_trace(s.n, s);
        c.expect(t.initial() == s.n, tag + " D(0)");
        c.expect(t.final() == 2, tag + " D(end)");
        c.expect(t.jump_violations.empty(), tag + " |dD| > 2");
        c.expect(!t.first_move_optimal, tag + " optimal first move");
    };
    for (const auto& f : fixtures::published()) {
        audit(parse_solution(f.text, f.k, f.n), std::string(f.name));
    }
    for (int n = 5; n <= 200; ++n) {
        audit(construct_k1(n), "k=1 n=" + std::to_string(n));
        audit(construct_k3(n), "k=3 n=" + std::to_string(n));
    }
    std::mt19937 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const Solution s = random_legal(rng);
        const DisorderTrace t = audit_trace(s.n, s);
        c.expect(t.initial() == s.n, "random D(0)");
        c.expect(t.jump_violations.empty(), "random |dD| > 2");
        c.expect(s.moves.empty() || !t.first_move_optimal, "random optimal first move");
    }
}

void optimality_cross_check(Check& c) {
    int checked = 0;
    for (const auto& [nk, h] : g_exact) {
        const auto [n, k] = nk;
        if (!has_construction(n, k)) continue;
        const int built = static_cast<int>(construct(n, k).size());
        c.expect(built >= h, "construction beats h" + cell(n, k));
        if (k == 3 && n % 4 != 0) {
            c.expect(built == h, "construction not optimal at" + cell(n, k));
        }
        ++checked;
    }
    c.expect(checked > 0, "no cells with a construction");
}

void composition(Check& c) {
    const CompositionBasis basis = derive_basis(2, 5);
    c.expect(basis.condition_report && basis.condition_report->all_passed(),
             "k=2 basis fails its conditions");
    std::map<int, std::size_t> len;
    for (int n = 5; n <= 29; ++n) {
        try {
            const Solution s = compose(basis, n);
            len[n] = s.size();
            c.expect(s.n == n && verify_solution(s).ok(), "n=" + std::to_string(n) + " invalid");
            c.expect(static_cast<int>(s.size()) <= composition_bound(n, 2, 5),
                     "n=" + std::to_string(n) + " exceeds the bound");
            if (n >= 13) {
                c.expect(len[n] == len[n - 8] + 8, "n=" + std::to_string(n) + " increment");
            }
        } catch (const std::exception& e) {
            c.expect(false, "n=" + std::to_string(n) + ": " + e.what());
        }
    }
    CompositionBasis k3;
    k3.k = 3;
    k3.nk = 5;
    k3.block_solution = construct_k3(12);
    c.expect(!check_conditions(k3).block_length.passed, "k=3 block passes condition (i)");
}

void round_trip(Check& c) {
    for (const auto& f : fixtures::published()) {
        const Solution s = parse_solution(f.text, f.k, f.n);
        c.expect(parse_solution(format_solution(s), f.k, f.n) == s, std::string(f.name));
        c.expect(format_solution(s) == f.text, std::string(f.name) + " text");
    }
    std::mt19937 rng(99);
    for (int i = 0; i < 1000; ++i) {
        const Solution s = random_legal(rng);
        c.expect(parse_solution(format_solution(s), s.k, s.n) == s, format_solution(s));
    }
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = untimed
    std::function<void(Check&)> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "fixture replay", 1, fixture_replay},
        {2, "constructive coverage", 5, constructive_coverage},
        {3, "k=1 family", 5, k1_family},
        {4, "exact values", 120, exact_values},
        {5, "lower-bound consistency", 0, lower_bounds},
        {6, "optimality cross-check", 0, optimality_cross_check},
        {7, "composition", 0, composition},
        {8, "notation round-trip", 0, round_trip},
    };
    int failed = 0;
    for (const Criterion& cr : criteria) {
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.limit_s > 0 && secs >= cr.limit_s) {
            c.expect(false, "took " + std::to_string(secs) + " s, limit " +
                                std::to_string(cr.limit_s) + " s");
        }
        const bool ok = c.failures == 0;
        failed += !ok;
        std::printf("%s criterion %d (%s) %.2fs%s%s\n", ok ? "PASS" : "FAIL", cr.id, cr.name,
                    secs, ok ? "" : ": ", c.why.str().c_str());
    }
    std::printf("%d/8 criteria passed\n", 8 - failed);
    return failed == 0 ? 0 : 1;
}
