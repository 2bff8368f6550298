#pragma once

// Extremal weight enumerators of doubly-even self-dual codes and extremal theta
// series of even unimodular lattices, both as combinations of f^a g^b.

#include "seqlab/bignum.hpp"
#include "seqlab/series.hpp"

#include <optional>
#include <vector>

namespace seqlab {

/// Largest m = n/24 accepted by default (n = 192).
inline constexpr unsigned kExtremalDefaultMaxM = 8;
/// Enough for the negativity scan through n = 3696.
inline constexpr unsigned kExtremalExtendedMaxM = 160;

/// Extremal enumerator of length n (n % 8 == 0, n >= 8), all coefficients
/// integral. Throws BudgetExceeded when n/24 > max_m.
BivariatePoly<BigInt> extremal_weight_enumerator(unsigned n, unsigned max_m = kExtremalDefaultMaxM);

/// Coefficients of y^0, y^4, ..., y^{4*terms} of the extremal enumerator of
/// length n, computed on series truncated to that order. Uses the basis
/// f^{a-3i} D^i with D = x^4 y^4 (x^4 - y^4)^4, where the system is unit
/// lower triangular.
std::vector<BigRational> extremal_enumerator_prefix(unsigned n, unsigned terms,
                                                    unsigned max_m = kExtremalDefaultMaxM);

/// The same prefix from the basis f^{a-3i} g^i (f Hamming, g Golay), a dense
/// system solved by fraction-free elimination.
std::vector<BigRational> extremal_enumerator_prefix_dense(unsigned n, unsigned terms,
                                                          unsigned max_m = kExtremalDefaultMaxM);

struct LeadingCoeffs {
    BigInt lead;  // codewords of weight 4m + 4
    BigInt next;  // codewords of weight 4m + 8
};

/// Length n = 24m.
LeadingCoeffs extremal_leading_coeffs(unsigned m, unsigned max_m = kExtremalDefaultMaxM);

/// C(24m,5) C(5m-2,m-1) / C(4m+4,5)
BigInt leading_coeff_closed_form(unsigned m);

/// First length 24m over the given m (in order) whose next-to-minimal
/// coefficient is negative.
std::optional<unsigned> find_negative_next_coeff(const std::vector<unsigned>& ms,
                                                 unsigned max_m = kExtremalExtendedMaxM);

/// Extremal theta series of dimension n (n % 8 == 0) through q^{2*order}.
/// Requires order >= n/24 + 1.
QSeries extremal_theta(unsigned n, std::size_t order);

}  // namespace seqlab
