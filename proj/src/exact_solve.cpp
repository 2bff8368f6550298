#include "seqlab/exact_solve.hpp"

#include "seqlab/error.hpp"

#include <utility>

namespace seqlab {

namespace {

// In-place Bareiss forward elimination on an n x m matrix (m >= n).
// Returns false if a zero pivot column is met. sign tracks row swaps.
bool bareiss(IntMatrix& a, std::size_t n, int& sign) {
    BigInt prev = 1;
    sign = 1;
    const std::size_t m = a.empty() ? 0 : a[0].size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return false;
        if (p != k) {
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return true;
}

void check_square(const IntMatrix& a) {
    for (const auto& row : a) {
        if (row.size() != a.size()) throw InvalidArgument("matrix is not square");
    }
}

}  // namespace

std::vector<BigRational> solve_exact(IntMatrix a, std::vector<BigInt> b) {
    check_square(a);
    const std::size_t n = a.size();
    if (b.size() != n) throw InvalidArgument("right-hand side has the wrong length");
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(std::move(b[i]));
    int sign = 1;
    if (!bareiss(a, n, sign)) throw ConstructionFailure("linear system is singular");
    std::vector<BigRational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        BigRational acc(a[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) acc -= BigRational(a[ii][j]) * x[j];
        acc /= BigRational(a[ii][ii]);
        x[ii] = acc;
    }
    return x;
}

BigInt determinant(IntMatrix a) {
    check_square(a);
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    if (!bareiss(a, n, sign)) return 0;
    return sign * a[n - 1][n - 1];
}

}  // namespace seqlab
