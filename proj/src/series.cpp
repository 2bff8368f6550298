#include "seqlab/series.hpp"

#include "seqlab/primes.hpp"

namespace seqlab {

BivariatePoly<BigInt> hamming_enumerator() {
    BivariatePoly<BigInt> f(8);
    f[0] = 1;
    f[4] = 14;
    f[8] = 1;
    return f;
}

BivariatePoly<BigInt> golay_enumerator() {
    BivariatePoly<BigInt> g(24);
    g[0] = 1;
    g[8] = 759;
    g[12] = 2576;
    g[16] = 759;
    g[24] = 1;
    return g;
}

BivariatePoly<BigRational> to_rational(const BivariatePoly<BigInt>& p) {
    BivariatePoly<BigRational> r(p.degree());
    for (std::size_t j = 0; j <= p.degree(); ++j) r[j] = BigRational(p[j]);
    return r;
}

BivariatePoly<BigRational> macwilliams(const BivariatePoly<BigRational>& w) {
    const std::size_t n = w.degree();
    if (n % 2 != 0) throw InvalidArgument("macwilliams: degree must be even");
    const BivariatePoly<BigRational> sum(std::vector<BigRational>{1, 1});
    const BivariatePoly<BigRational> diff(std::vector<BigRational>{1, -1});
    BivariatePoly<BigRational> out(n);
    for (std::size_t j = 0; j <= n; ++j) {
        if (w[j] == 0) continue;
        out = out + w[j] * (sum.pow(n - j) * diff.pow(j));
    }
    BigRational scale(1, 1);
    scale /= BigRational(pow(BigInt(2), n / 2));
    return scale * out;
}

QSeries eta24(std::size_t order) {
    QSeries prod = QSeries::constant(1, order);
    for (std::size_t m = 1; m <= order; ++m) {
        // multiply by (1 - t^m) in place, high to low
        for (std::size_t k = order; k >= m; --k) {
            prod[k] -= prod[k - m];
            if (k == m) break;
        }
    }
    return prod.pow(24);
}

QSeries e8_theta(std::size_t order) {
    QSeries f(order);
    f[0] = 1;
    for (std::size_t m = 1; m <= order; ++m) f[m] = 240 * arith_functions(m).sigma3;
    return f;
}

QSeries leech_theta(std::size_t order) {
    QSeries f = e8_theta(order);
    return f.pow(3) - BigInt(720) * eta24(order).shifted(1);
}

std::vector<BigInt> ramanujan_tau(std::size_t count) {
    std::vector<BigInt> out;
    if (count == 0) return out;
    QSeries e = eta24(count - 1);
    out.assign(e.coeffs().begin(), e.coeffs().end());
    return out;
}

}  // namespace seqlab
