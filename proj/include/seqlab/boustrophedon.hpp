#pragma once

// The boustrophedon (ox-plowing) triangle and transform.
//
// Row n has n + 1 entries and starts from a_n. Rows with odd n are filled left
// to right, rows with even n right to left; each later entry is the previous
// entry of the row plus the adjacent entry of the row above. b_n is the last
// entry filled in row n.

#include "seqlab/bignum.hpp"

#include <cstddef>
#include <vector>

namespace seqlab {

struct BoustroTriangle {
    /// Entries in fill order: fill[n][0] = a_n, fill[n][n] = b_n.
    std::vector<std::vector<BigInt>> fill;
    /// Row n as printed, left to right.
    std::vector<BigInt> displayed(std::size_t n) const;
};

BoustroTriangle boustrophedon_triangle(const std::vector<BigInt>& a);

/// b_n from the triangle.
std::vector<BigInt> boustrophedon_transform(const std::vector<BigInt>& a);
/// b_n = sum_k C(n,k) a_k E_{n-k}.
std::vector<BigInt> boustrophedon_transform_convolution(const std::vector<BigInt>& a);

/// E_0..E_{count-1} from 2 E_{n+1} = sum_k C(n,k) E_k E_{n-k} (n >= 1), E_0 = E_1 = 1.
std::vector<BigInt> entringer_numbers(std::size_t count);

struct SecantTangent {
    std::vector<BigInt> sec;  // 1, 1, 5, 61, ...
    std::vector<BigInt> tan;  // 1, 2, 16, 272, ...
};

/// Read off the ends of the triangle seeded with 1, 0, 0, ...
SecantTangent secant_tangent_numbers(std::size_t count);

/// The default free prefix: {1} for shift 1, {1, 0} for shift 2 (the smallest
/// choice with a nonzero leading term).
std::vector<BigInt> default_free_prefix(unsigned shift);

/// The sequence a with T(a)_n = a_{n+shift}, extending free_prefix (which must
/// have exactly `shift` terms; empty means default_free_prefix(shift)).
std::vector<BigInt> eigen_shift_solver(unsigned shift, std::size_t count, std::vector<BigInt> free_prefix = {});

/// 1-indexed: a_{n+1} = sum_{d | n} a_d for every n with n + 1 <= a.size().
bool moebius_eigen_check(const std::vector<BigInt>& a);

/// a_1 = 1, a_{n+1} = sum_{d | n} a_d: shifts left under the inverse Moebius transform.
std::vector<BigInt> moebius_shift_sequence(std::size_t count);

}  // namespace seqlab
