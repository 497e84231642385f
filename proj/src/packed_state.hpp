#pragma once

#include <bit>
#include <cstdint>
#include <utility>

#include "berge/board.hpp"

namespace berge::detail {

// Up to 64 cells: bit i of `occ` marks a peg in cell i, bit i of `black`
// marks that peg as black.
struct Packed {
    std::uint64_t occ = 0;
    std::uint64_t black = 0;

    friend bool operator==(const Packed&, const Packed&) = default;

    template <typename H>
    friend H AbslHashValue(H h, const Packed& p) {
        return H::combine(std::move(h), p.occ, p.black);
    }
};

inline std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

inline std::uint64_t shr(std::uint64_t v, int s) { return s >= 64 ? 0 : v >> s; }
inline std::uint64_t shl(std::uint64_t v, int s) { return s >= 64 ? 0 : v << s; }

inline int lowest(std::uint64_t v) { return std::countr_zero(v); }
inline int highest(std::uint64_t v) { return 63 - std::countl_zero(v); }

inline bool is_sorted(const Packed& p) {
    const int lo = lowest(p.occ);
    const int width = highest(p.occ) - lo + 1;
    const std::uint64_t occ = p.occ >> lo;
    if (occ != low_mask(width)) {
        return false;
    }
    const std::uint64_t b = p.black >> lo;
    const int blacks = std::popcount(b);
    return b == low_mask(blacks) || b == (low_mask(blacks) << (width - blacks));
}

// Cell 0 of the packing corresponds to line position `base`.
inline Packed pack(const Board& board, int base) {
    Packed p;
    for (int pos = board.min_pos(); pos <= board.max_pos(); ++pos) {
        const Cell c = board.at(pos);
        if (is_peg(c)) {
            p.occ |= std::uint64_t{1} << (pos - base);
            if (c == Cell::Black) {
                p.black |= std::uint64_t{1} << (pos - base);
            }
        }
    }
    return p;
}

inline Board unpack(const Packed& p, int base) {
    if (p.occ == 0) {
        return Board{};
    }
    const int hi = highest(p.occ);
    std::vector<Cell> cells(static_cast<std::size_t>(hi + 1), Cell::Empty);
    for (int i = 0; i <= hi; ++i) {
        if ((p.occ >> i) & 1U) {
            cells[static_cast<std::size_t>(i)] = ((p.black >> i) & 1U) ? Cell::Black : Cell::White;
        }
    }
    return Board(base, std::move(cells));
}

}  // namespace berge::detail
