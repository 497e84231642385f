#include "berge/notation.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace berge {
namespace {

constexpr std::string_view kUnionSign = "\xE2\x88\xAA";

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<Move> run() {
        std::vector<Move> moves;
        skip_space();
        if (at_end()) {
            throw ParseError(pos_, "empty solution text");
        }
        if (try_empty_sentinel()) {
            return moves;
        }
        while (true) {
            read_group(moves);
            skip_space();
            if (at_end()) {
                break;
            }
            expect_union();
            skip_space();
        }
        return moves;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool try_empty_sentinel() {
        std::size_t save = pos_;
        if (text_[pos_] != '{') {
            return false;
        }
        ++pos_;
        skip_space();
        if (!at_end() && text_[pos_] == '}') {
            ++pos_;
            skip_space();
            if (at_end()) {
                return true;
            }
        }
        pos_ = save;
        return false;
    }

    void expect_union() {
        if (text_[pos_] == 'U' || text_[pos_] == 'u') {
            ++pos_;
            return;
        }
        if (text_.substr(pos_, kUnionSign.size()) == kUnionSign) {
            pos_ += kUnionSign.size();
            return;
        }
        throw ParseError(pos_, "expected union separator between groups");
    }

    void read_group(std::vector<Move>& moves) {
        const std::size_t group_start = pos_;
        if (at_end() || text_[pos_] != '{') {
            throw ParseError(pos_, "expected '{'");
        }
        ++pos_;
        std::vector<int> entries;
        std::vector<std::size_t> offsets;
        while (true) {
            skip_space();
            if (at_end()) {
                throw ParseError(pos_, "unterminated group, missing '}'");
            }
            if (text_[pos_] == '}') {
                ++pos_;
                break;
            }
            if (text_[pos_] == '{') {
                throw ParseError(pos_, "nested '{'");
            }
            offsets.push_back(pos_);
            entries.push_back(read_int());
        }
        if (entries.size() < 2) {
            throw ParseError(group_start, "a group needs at least 2 entries");
        }
        for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
            if (entries[i] == entries[i + 1]) {
                throw ParseError(offsets[i + 1], "equal consecutive entries");
            }
            moves.push_back(Move{entries[i], entries[i + 1]});
        }
    }

    int read_int() {
        const std::size_t begin = pos_;
        std::size_t end = pos_;
        while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) &&
               text_[end] != '}' && text_[end] != '{') {
            ++end;
        }
        int value = 0;
        const char* first = text_.data() + begin;
        const char* last = text_.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last || begin == end) {
            throw ParseError(begin, "not an integer: '" + std::string(first, last) + "'");
        }
        pos_ = end;
        return value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Solution parse_solution(std::string_view text, int k, int n) {
    return Solution{k, n, Parser(text).run()};
}

std::string format_solution(const Solution& solution) {
    const auto& moves = solution.moves;
    if (moves.empty()) {
        return "{}";
    }
    std::string out = "{ " + std::to_string(moves[0].dest) + " " + std::to_string(moves[0].src);
    for (std::size_t i = 1; i < moves.size(); ++i) {
        if (moves[i].dest == moves[i - 1].src) {
            out += " " + std::to_string(moves[i].src);
        } else {
            out += " } U { " + std::to_string(moves[i].dest) + " " + std::to_string(moves[i].src);
        }
    }
    return out + " }";
}

}  // namespace berge
