#pragma once

// Tchoukaillon solitaire: holes 0, 1, 2, ...; a move empties hole h and sows
// one stone into each of holes h-1, h-2, ...; play continues only if the last
// stone lands in hole 0.

#include "seqlab/bignum.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seqlab {

/// stones[h] for h = 0..H.
struct Board {
    std::vector<std::uint64_t> stones;

    std::uint64_t in_play() const;  // stones outside hole 0
    bool cleared() const { return in_play() == 0; }
    bool operator==(const Board&) const = default;
};

/// The board after sowing hole h, or nullopt if the last stone misses hole 0.
/// Throws InvalidArgument for an empty hole.
std::optional<Board> play_move(const Board& b, std::size_t h);

/// True if some sequence of moves clears the board.
bool is_winning(const Board& b);

struct WinningPosition {
    std::uint64_t n = 0;
    /// holes[h - 1] is the count in hole h; hole 0 is excluded.
    std::vector<std::uint64_t> holes;

    /// Contents of holes m..1, e.g. "4201"; "0" for the empty board.
    std::string digits() const;
    Board board() const;
};

/// Positions for n = 0..max_n, each obtained from the last by the
/// first-empty-hole rule.
std::vector<WinningPosition> winning_positions(std::size_t max_n);

/// The positions as decimal numbers 0, 1, 20, 21, 310, ... Throws
/// ConstructionFailure once a hole holds 10 or more stones.
std::vector<BigInt> winning_position_numbers(std::size_t count);

/// The hole index chosen at each step of the rule: 1, 2, 1, 3, 1, 4, ...
std::vector<std::uint64_t> i_sequence(std::size_t count);

/// t(k) for k = 1..max_k as the first step at which k is chosen.
std::vector<std::uint64_t> t_by_first_occurrence(std::size_t max_k);

/// Start from n and round up to multiples of n-1, n-2, ..., 1.
std::vector<std::uint64_t> rounding_chain(std::uint64_t n);
std::uint64_t t_by_rounding(std::uint64_t n);

/// Column k keeps the entries of column k-1 after crossing off the first and
/// every k-th; t(k) is the top of column k.
std::vector<std::uint64_t> t_by_sieve(std::size_t max_k);

/// t(n) pi / n^2.
double pi_asymptotic_check(std::uint64_t n);

/// Boards with n stones in holes 1..n that can be cleared, by exhaustive search.
std::vector<std::vector<std::uint64_t>> all_winning_boards(unsigned n);

}  // namespace seqlab
