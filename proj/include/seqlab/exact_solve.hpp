#pragma once

#include "seqlab/bignum.hpp"

#include <vector>

namespace seqlab {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Solves A x = b exactly for square integer A by fraction-free (Bareiss)
/// elimination followed by rational back-substitution.
/// Throws ConstructionFailure when A is singular.
std::vector<BigRational> solve_exact(IntMatrix a, std::vector<BigInt> b);

/// Determinant by Bareiss elimination.
BigInt determinant(IntMatrix a);

}  // namespace seqlab
