#include "berge/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "berge/bounds.hpp"
#include "berge/composition.hpp"
#include "berge/constructive.hpp"
#include "berge/errors.hpp"
#include "berge/harness.hpp"
#include "berge/notation.hpp"
#include "berge/search.hpp"

namespace berge {
namespace {

struct SolveOptions {
    int n = 0;
    int k = 0;
    std::string method = "auto";
    std::string format = "notation";
    int max_span = 0;
};

struct VerifyOptions {
    int n = 0;
    int k = 0;
    std::string solution;
    bool trace = false;
};

struct TableOptions {
    int n_max = 0;
    int k_max = 0;
    std::string out;
    std::string format = "csv";
    bool check_published = false;
    int max_span = 0;
    unsigned workers = 0;
    std::string cache;
    bool no_cache = false;
    std::size_t max_states = SearchConfig{}.max_states;
    long time_limit_s = 300;
};

struct BasisOptions {
    int k = 0;
    int nk = 0;
    std::string out;
};

struct ComposeOptions {
    std::string basis;
    int n = 0;
    std::string format = "notation";
};

void print_trace(std::ostream& out, const VerificationReport& v) {
    const DisorderTrace t = audit_trace(v.trace);
    for (std::size_t i = 0; i < v.trace.size(); ++i) {
        out << i << ' ' << t.values[i] << ' '
            << (i == 0 ? std::string_view("start") : to_string(t.classes[i - 1])) << ' '
            << v.trace[i].render() << '\n';
    }
}

int emit_solution(std::ostream& out, std::ostream& err, const Solution& sol,
                  const std::string& format, const std::string& method,
                  const SearchOutcome* outcome) {
    const VerificationReport v = verify_solution(sol);
    if (!v.ok()) {
        err << "internal error: produced solution does not verify\n";
        return kExitVerificationFailed;
    }
    if (format == "json") {
        nlohmann::json j{{"n", sol.n},
                         {"k", sol.k},
                         {"method", method},
                         {"moves", sol.size()},
                         {"solution", format_solution(sol)}};
        if (outcome) {
            j["h"] = *outcome->h;
            j["spanUsed"] = outcome->span_used;
            j["windowOptimal"] = outcome->window_optimal;
            j["nodes"] = outcome->nodes_expanded;
        } else {
            j["claimedLength"] = plan_construction(sol.n, sol.k).claimed_length;
            j["construction"] = std::string(to_string(plan_construction(sol.n, sol.k).method));
        }
        out << j.dump() << '\n';
    } else if (format == "trace") {
        print_trace(out, v);
    } else {
        out << format_solution(sol) << '\n';
    }
    return kExitOk;
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
    if (o.n < 1 || o.k < 1) {
        err << "error: need n >= 1 and k >= 1\n";
        return kExitInvalidInput;
    }
    if (trivially_unsolvable(o.n, o.k)) {
        err << "unsolvable: n <= k+1\n";
        return kExitUnsolvable;
    }
    std::string method = o.method;
    if (method == "auto") {
        method = has_construction(o.n, o.k) ? "constructive" : "exact";
    }
    if (method == "constructive") {
        if (!has_construction(o.n, o.k)) {
            err << "error: no construction for n=" << o.n << ", k=" << o.k
                << " (families exist for k=1 and k=3)\n";
            return kExitInvalidInput;
        }
        return emit_solution(out, err, construct(o.n, o.k), o.format, method, nullptr);
    }

    SearchConfig c = SearchConfig::defaults(o.n, o.k);
    if (o.max_span > 0) c.max_span = o.max_span;
    const SearchOutcome r = exact_h(c);
    if (!r.solved()) {
        err << "unsolvable: " << to_string(r.status) << " (span " << r.span_used << ")\n";
        return kExitUnsolvable;
    }
    // A value meeting the lower bound is optimal outright; otherwise say so.
    if (r.window_optimal && o.format == "notation") {
        err << "note: optimal within span " << r.span_used << '\n';
    }
    return emit_solution(out, err, r.witness, o.format, method, &r);
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    if (o.n < 1 || o.k < 1) {
        err << "error: need n >= 1 and k >= 1\n";
        return kExitInvalidInput;
    }
    const Solution sol = parse_solution(o.solution, o.k, o.n);
    const VerificationReport v = verify_solution(sol);
    if (o.trace) print_trace(out, v);
    if (!v.legal) {
        out << "FAIL: move " << (*v.failed_move + 1) << " is illegal: " << v.failure << '\n';
        return kExitVerificationFailed;
    }
    if (!v.sorted) {
        out << "FAIL: not sorted after " << v.move_count << " moves: "
            << v.final_board().render() << '\n';
        return kExitVerificationFailed;
    }
    out << "OK, " << v.move_count << " moves\n";
    return kExitOk;
}

int cmd_table(const TableOptions& o, std::ostream& out, std::ostream& err) {
    if (o.k_max < 2 || o.n_max < 4) {
        err << "error: need --k-max >= 2 and --n-max >= 4\n";
        return kExitInvalidInput;
    }
    SearchConfig tmpl;
    tmpl.max_span = o.max_span;
    tmpl.max_states = o.max_states;
    tmpl.time_limit = std::chrono::seconds(o.time_limit_s);

    std::optional<ResultsCache> cache;
    if (!o.no_cache) {
        cache.emplace(o.cache.empty() ? ResultsCache::default_path() : std::filesystem::path(o.cache));
    }
    std::vector<TableEntry> entries;
    try {
        entries = run_table(tmpl, o.n_max, o.k_max, cache ? &*cache : nullptr, o.workers);
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    const std::string body = o.format == "jsonl" ? to_jsonl(entries) : to_csv(entries);
    if (o.out.empty()) {
        out << body;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        file << body;
        if (!file) {
            err << "error: cannot write " << o.out << '\n';
            return kExitInvalidInput;
        }
    }

    if (o.check_published) {
        std::size_t compared = 0;
        const auto mismatches = check_published(entries, &compared);
        for (const Mismatch& m : mismatches) {
            err << "mismatch n=" << m.n << " k=" << m.k << ": published delta "
                << *m.expected << ", computed "
                << (m.actual ? std::to_string(*m.actual) : std::string("none")) << '\n';
        }
        err << "paper-check: " << compared << " cells compared, " << mismatches.size()
            << " mismatches\n";
        if (!mismatches.empty()) return kExitVerificationFailed;
    }
    return kExitOk;
}

void print_conditions(std::ostream& err, const ConditionReport& r) {
    const std::pair<const char*, const ConditionResult*> rows[] = {
        {"i", &r.block_length}, {"ii", &r.block_shift},
        {"iii", &r.base_lengths}, {"iv", &r.base_floor}};
    for (const auto& [name, c] : rows) {
        err << "condition (" << name << "): " << (c->passed ? "pass" : "FAIL");
        for (const std::string& d : c->diagnostics) err << "; " << d;
        err << '\n';
    }
}

int cmd_basis(const BasisOptions& o, std::ostream& out, std::ostream& err) {
    if (o.k < 1 || o.nk < 1 || 4 * o.k > kMaxSearchSpan / 2) {
        err << "error: need k >= 1, nk >= 1 and 4k small enough to search\n";
        return kExitInvalidInput;
    }
    const CompositionBasis basis = derive_basis(o.k, o.nk);
    const std::string text = basis_to_json(basis);
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        file << text;
        if (!file) {
            err << "error: cannot write " << o.out << '\n';
            return kExitInvalidInput;
        }
    }
    print_conditions(err, *basis.condition_report);
    return basis.condition_report->all_passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_compose(const ComposeOptions& o, std::ostream& out, std::ostream& err) {
    std::ifstream file(o.basis, std::ios::binary);
    if (!file) {
        err << "error: cannot read " << o.basis << '\n';
        return kExitInvalidInput;
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    const CompositionBasis basis = basis_from_json(buffer.str());
    if (o.n < basis.nk) {
        err << "error: n must be at least nk=" << basis.nk << '\n';
        return kExitInvalidInput;
    }
    try {
        const Solution sol = compose(basis, o.n);
        if (o.format == "json") {
            nlohmann::json j{{"n", o.n},
                             {"k", basis.k},
                             {"moves", sol.size()},
                             {"bound", composition_bound(o.n, basis.k, basis.nk)},
                             {"solution", format_solution(sol)}};
            out << j.dump() << '\n';
        } else {
            out << format_solution(sol) << '\n';
        }
        return kExitOk;
    } catch (const CompositionError& e) {
        if (e.kind() == CompositionError::Kind::PreconditionViolated) {
            print_conditions(err, *basis.condition_report);
        }
        err << "error: " << e.what() << '\n';
        if (e.intermediate()) err << "intermediate: " << e.intermediate()->render() << '\n';
        return kExitVerificationFailed;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Berge k-move peg sorting: solutions, verification and optimal tables", "berge"};
    app.require_subcommand(1);

    SolveOptions solve;
    auto* s = app.add_subcommand("solve", "Sort the alternating n-string with k-moves");
    s->add_option("--n", solve.n, "Number of pegs")->required();
    s->add_option("--k", solve.k, "Block size")->required();
    s->add_option("--method", solve.method)
        ->check(CLI::IsMember({"auto", "constructive", "exact"}));
    s->add_option("--format", solve.format)->check(CLI::IsMember({"notation", "json", "trace"}));
    s->add_option("--max-span", solve.max_span, "Search span in cells (exact)");

    VerifyOptions verify;
    auto* v = app.add_subcommand("verify", "Replay a solution from the alternating start");
    v->add_option("--n", verify.n)->required();
    v->add_option("--k", verify.k)->required();
    v->add_option("--solution", verify.solution, "Chained notation")->required();
    v->add_flag("--trace", verify.trace, "Print the disorder trace");

    TableOptions table;
    auto* t = app.add_subcommand("table", "Exact h(n,k) for 2 <= k <= k-max, k+2 <= n <= n-max");
    t->add_option("--n-max", table.n_max)->required();
    t->add_option("--k-max", table.k_max)->required();
    t->add_option("--out", table.out, "Output file (default stdout)");
    t->add_option("--format", table.format)->check(CLI::IsMember({"csv", "jsonl"}));
    t->add_flag("--paper-check", table.check_published, "Compare deltas with the published table");
    t->add_option("--max-span", table.max_span, "Search span in cells (default n+2k)");
    t->add_option("--workers", table.workers, "Concurrent cells (default: CPU count)");
    t->add_option("--cache", table.cache, "Results cache (default $BERGE_CACHE)");
    t->add_flag("--no-cache", table.no_cache);
    t->add_option("--max-states", table.max_states, "Stored-state budget per cell");
    t->add_option("--time-limit", table.time_limit_s, "Seconds per cell");

    BasisOptions basis;
    auto* b = app.add_subcommand("basis", "Search a composition basis");
    b->add_option("--k", basis.k)->required();
    b->add_option("--nk", basis.nk)->required();
    b->add_option("--out", basis.out, "Output file (default stdout)");

    ComposeOptions comp;
    auto* c = app.add_subcommand("compose", "Extend a basis to n pegs");
    c->add_option("--basis", comp.basis, "Basis JSON file")->required();
    c->add_option("--n", comp.n)->required();
    c->add_option("--format", comp.format)->check(CLI::IsMember({"notation", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }

    try {
        if (s->parsed()) return cmd_solve(solve, out, err);
        if (v->parsed()) return cmd_verify(verify, out, err);
        if (t->parsed()) return cmd_table(table, out, err);
        if (b->parsed()) return cmd_basis(basis, out, err);
        return cmd_compose(comp, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

}  // namespace berge
