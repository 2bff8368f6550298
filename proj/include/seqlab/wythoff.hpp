#pragma once

// Zeckendorf expansions, the Fibonacci successor, the Wythoff array and the
// para-Fibonacci sequences.
//
// Post-line columns are k = 0, 1, 2, ...; the two pre-line columns hold the row
// index n and the lower Wythoff number floor((n+1) tau).

#include "seqlab/bignum.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace seqlab {

/// F_0 = 0, F_1 = 1.
BigInt fibonacci(unsigned k);

/// Fibonacci indices (F_2 = 1, F_3 = 2, ...) of the greedy expansion, strictly
/// decreasing with gaps >= 2. Requires n >= 1.
std::vector<unsigned> zeckendorf(const BigInt& n);

/// Replaces each F_i in the expansion of n by F_{i+1}; S(0) = 0.
BigInt fib_successor(const BigInt& n);
/// Replaces each F_i by F_{i-1}; requires every index > 2.
BigInt fib_predecessor(const BigInt& n);

/// floor(x tau) for x >= 0, computed exactly as floor((x + isqrt(5x^2)) / 2).
BigInt floor_times_phi(const BigInt& x);

/// floor((n+1) tau) F_{k+2} + F_{k+1} n
BigInt wythoff_entry(const BigInt& n, unsigned k);

struct WythoffWindow {
    std::vector<BigInt> index_column;  // n
    std::vector<BigInt> lower_column;  // floor((n+1) tau) = 1 + S n
    std::vector<std::vector<BigInt>> rows;  // rows[n][k], k = 0..K
    friend bool operator==(const WythoffWindow&, const WythoffWindow&) = default;
};

/// Rows 0..R and columns 0..K by construction 1 (Fibonacci rule from the
/// pre-line columns), 2 (m, Sm, SSm, ... with m = n + 1 + Sn), 3 (column 0 is
/// the complement of the successor values, then S repeatedly) or 4 (closed form).
WythoffWindow wythoff_window(std::size_t R, std::size_t K, int construction);

/// floor((n+1) tau) for n = 0..count-1.
std::vector<BigInt> lower_wythoff(std::size_t count);
/// S1, S2, ...
std::vector<BigInt> fib_successors(std::size_t count);
/// Positive integers that are not a successor: 1, 4, 6, 9, 12, ...
std::vector<BigInt> non_successors(std::size_t count);

/// (row, column) of n >= 1 in the post-line array.
std::pair<std::uint64_t, unsigned> wythoff_position(std::uint64_t n);

/// Row containing n, for n = 1..count.
std::vector<BigInt> para_fibonacci_vertical(std::size_t count);
/// 1-based column containing n, for n = 1..count.
std::vector<BigInt> para_fibonacci_horizontal(std::size_t count);

/// The sequence with the first occurrence of every value removed.
std::vector<BigInt> delete_first_occurrences(const std::vector<BigInt>& a);

/// The vertical sequence cut before each 0: block b starts at the (b+1)-th 0.
std::vector<std::vector<std::uint64_t>> para_fibonacci_blocks(std::size_t count_blocks);

/// True if sorting the union of a and b alternates membership between them,
/// starting from the largest element of the earlier row below b's first entry.
bool rows_alternate(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

struct FibonacciTypeMatch {
    std::uint64_t row = 0;
    unsigned column = 0;  // column holding the term at `step`
    std::size_t step = 0;  // terms skipped before the sequence joins the row
};

/// Locates the row of the array containing the tail of the positive
/// Fibonacci-type sequence starting (a, b); searches at most max_steps terms.
std::optional<FibonacciTypeMatch> locate_fibonacci_type(std::uint64_t a, std::uint64_t b,
                                                        std::size_t max_steps = 60);

}  // namespace seqlab
