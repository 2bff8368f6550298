#pragma once

// Self-referential and recursively defined sequences.

#include "seqlab/bignum.hpp"
#include "seqlab/primes.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace seqlab {

/// Sum of node heights over all rooted labeled trees on n nodes, divided by n:
/// W_n = (n-1)! sum_{k=0}^{n-2} n^k / k!.
BigInt tree_height_sum_W(unsigned n);

/// (W_n / n^n) * sqrt(n / (2 pi)); tends to 1 if W_n/n^n ~ sqrt(2 pi / n).
double tree_height_asymptotic_ratio(unsigned n);

struct ComplementPair {
    std::vector<BigInt> seq;    // 1, 3, 7, 12, 18, ...
    std::vector<BigInt> diffs;  // 2, 4, 5, 6, 8, ... (seq.size() - 1 terms)
};

/// The sequence whose differences are exactly the positive integers it misses.
ComplementPair hofstadter_complement(std::size_t count);

/// a(n) = number of times n occurs; 1-indexed.
std::vector<BigInt> golomb(std::size_t count);

/// 1, 2, 3, 5, 11, ...: each term is the previous-term-th prime. Throws
/// CapacityExceeded when the sieve cannot reach term max_terms.
std::vector<BigInt> wilson_primeth(std::size_t max_terms, PrimeSieve& sieve = default_sieve());

/// a_1 = 1; a_n = a_{n-1} - n if positive and new, else a_{n-1} + n.
std::vector<BigInt> recaman_subtract_first(std::size_t count);

/// a_1 = 1; a_{n+1} = a_n / n if n | a_n, else n a_n.
std::vector<BigInt> recaman_divide(std::size_t count);

struct RecamanGrowth {
    std::uint64_t terms = 0;
    std::uint64_t max_term = 0;
    /// Fraction of 1..max_term hit by the first `terms` terms.
    double coverage = 0;
    /// Smallest positive integer not yet hit.
    std::uint64_t first_missing = 0;
};

RecamanGrowth recaman_growth_report(std::uint64_t terms);

/// a(1) = a(2) = 1, a(n+1) = a(a(n)) + a(n+1-a(n)).
std::vector<BigInt> conway_10000(std::size_t count);

/// Largest n <= bound with |a(n)/n - 1/2| > 1/20, or 0 if there is none.
std::uint64_t conway_threshold(std::uint64_t bound);

/// a(1) = a(2) = 1, a(n) = a(a(n-2)) + a(n-a(n-2)).
std::vector<BigInt> conway_variant_A5229(std::size_t count);

/// Strokes of the Prague clock grouped by hour, each group written as its digits.
std::vector<BigInt> prague_clock(std::size_t count_groups);

}  // namespace seqlab
