#pragma once

// Brute-force enumerators for small terms of hard sequences.

#include "seqlab/bignum.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace seqlab {

/// Largest n each enumerator accepts unless the caller raises the budget.
struct HardEnumBudget {
    unsigned pancake = 10;
    unsigned latin = 6;
    unsigned dedekind = 6;
    unsigned hadamard = 5;
    unsigned meander = 16;
    unsigned stamp = 14;

    static HardEnumBudget mandatory() { return {9, 6, 4, 5, 11, 10}; }
    static HardEnumBudget extended() { return {10, 7, 6, 7, 16, 14}; }
};

/// Maximum number of prefix reversals needed to sort n pancakes (BFS over n!).
unsigned pancake_f(unsigned n, unsigned max_n = HardEnumBudget{}.pancake);

/// Latin squares of order n with first row and column in natural order.
BigInt latin_squares_reduced(unsigned n, unsigned max_n = HardEnumBudget{}.latin);

/// Monotone Boolean functions of n variables, constants included (2, 3, 6, 20, 168, ...).
BigInt monotone_boolean_functions(unsigned n, unsigned max_n = HardEnumBudget{}.dedekind);
/// The same count minus the two constant functions (1, 4, 18, 166, 7579, ...).
BigInt dedekind_variant(unsigned n, unsigned max_n = HardEnumBudget{}.dedekind);

/// Maximal determinant of an n x n {0,1} matrix, by branch and bound on the
/// equivalent +-1 matrix of order n + 1.
BigInt hadamard_maxdet01(unsigned n, unsigned max_n = HardEnumBudget{}.hadamard);

/// (n+1)^{(n+1)/2} / 2^n for n = 3 (mod 4).
BigInt hadamard_bound(unsigned n);

/// Open meanders: ways a river from the south-west crosses an east-west road n times.
BigInt meander_count(unsigned n, unsigned max_n = HardEnumBudget{}.meander);

/// Closed meanders of order k: closed curves crossing a line 2k times.
BigInt closed_meander_count(unsigned k, unsigned max_k = HardEnumBudget{}.meander / 2);

/// Foldings of a strip of n labeled stamps (stack orders with noncrossing creases).
BigInt labeled_stamp_foldings(unsigned n, unsigned max_n = HardEnumBudget{}.stamp);

/// Foldings of a strip of n blank stamps: labeled foldings up to turning the
/// stack over and reversing the strip.
BigInt stamp_foldings(unsigned n, unsigned max_n = HardEnumBudget{}.stamp);

/// Stack orders (bottom to top) of every labeled folding of n stamps.
std::vector<std::vector<std::uint8_t>> stamp_folding_stacks(unsigned n, unsigned max_n = HardEnumBudget{}.stamp);

BigInt catalan(unsigned n);

struct MeanderGrowthRow {
    unsigned n = 0;         // index of M_{2n}
    BigInt m2n;             // M_{2n}
    double root = 0;        // M_{2n}^{1/n}
    bool catalan_bracket = false;  // C_n <= M_{2n} <= C_n^2
};

struct MeanderPairCheck {
    unsigned a = 0, b = 0;
    bool submultiplicative = false;    // M_{2(a+b)} <= M_{2a} M_{2b}
    bool supermultiplicative = false;  // M_{2(a+b)} >= M_{2a} M_{2b}
};

struct MeanderGrowthReport {
    std::vector<MeanderGrowthRow> rows;
    std::vector<MeanderPairCheck> pairs;
    bool all_bracketed() const;
};

/// Growth data for the even-indexed open meanders M_2, ..., M_{2n} with 2n <= max_n.
MeanderGrowthReport meander_growth_check(unsigned max_n);

}  // namespace seqlab
