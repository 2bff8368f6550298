#include "seqlab/extremal.hpp"

#include "seqlab/error.hpp"
#include "seqlab/exact_solve.hpp"

#include <string>

namespace seqlab {

namespace {

template <class Scalar>
using Series = TruncatedSeries<Scalar>;

void check_length(unsigned n, unsigned max_m) {
    if (n < 8 || n % 8 != 0) throw InvalidArgument("length must be a positive multiple of 8");
    if (n / 24 > max_m) {
        throw BudgetExceeded("length " + std::to_string(n) + " exceeds the configured budget (n/24 <= " +
                             std::to_string(max_m) + ")");
    }
}

// Unique combination sum c_i f^{a-3i} D^i (i = 0..n/24, a = n/8) with constant
// term 1 and coefficients 1..n/24 zero, returned through the given order.
// D = (f^3 - g) / (f^3 - g)[1] starts at z^1 with coefficient 1, so the system
// is unit lower triangular and forward substitution is exact over the integers.
Series<BigRational> extremal_combination(const Series<BigInt>& f, const Series<BigInt>& g, unsigned n,
                                         std::size_t order) {
    const unsigned r = n / 24;
    const unsigned a = n / 8;
    if (order < r) throw InvalidArgument("truncation order too small");
    auto pad = [order](const Series<BigInt>& s) {
        Series<BigInt> out(order);
        for (std::size_t m = 0; m <= std::min(order, s.order()); ++m) out[m] = s[m];
        return out;
    };
    const Series<BigInt> fp = pad(f), gp = pad(g);
    if (fp[0] != 1 || gp[0] != 1) throw ConstructionFailure("basis series must have constant term 1");
    const Series<BigInt> f3 = fp.pow(3);

    Series<BigInt> d(order);
    for (std::size_t m = 0; m <= order; ++m) d[m] = f3[m] - gp[m];
    if (order >= 1) {
        const BigInt lead = d[1];
        if (lead == 0) throw ConstructionFailure("basis series are dependent");
        for (std::size_t m = 0; m <= order; ++m) {
            if (d[m] % lead != 0) throw ConstructionFailure("discriminant series is not integral");
            d[m] /= lead;
        }
    }

    std::vector<Series<BigInt>> cols(r + 1);
    {
        Series<BigInt> fpow = fp.pow(a - 3 * r);
        std::vector<Series<BigInt>> fpows(r + 1);
        fpows[0] = fpow;
        for (unsigned j = 1; j <= r; ++j) fpows[j] = fpows[j - 1] * f3;
        Series<BigInt> dpow = Series<BigInt>::constant(1, order);
        for (unsigned i = 0; i <= r; ++i) {
            cols[i] = fpows[r - i] * dpow;
            if (i < r) dpow = dpow * d;
        }
    }

    std::vector<BigInt> coef(r + 1, 0);
    coef[0] = 1;
    for (unsigned k = 1; k <= r; ++k) {
        BigInt s = 0;
        for (unsigned i = 0; i < k; ++i) s += coef[i] * cols[i][k];
        coef[k] = -s;  // cols[k][k] == 1
    }

    Series<BigRational> out(order);
    for (std::size_t m = 0; m <= order; ++m) {
        BigInt s = 0;
        for (unsigned i = 0; i <= r; ++i) s += coef[i] * cols[i][m];
        out[m] = BigRational(s);
    }
    return out;
}

// Same combination in the basis f^{a-3i} g^i, a dense system solved by Bareiss
// elimination.
Series<BigRational> extremal_combination_dense(const Series<BigInt>& f, const Series<BigInt>& g, unsigned n,
                                               std::size_t order) {
    const unsigned r = n / 24;
    const unsigned a = n / 8;
    if (order < r) throw InvalidArgument("truncation order too small");
    auto pad = [order](const Series<BigInt>& s) {
        Series<BigInt> out(order);
        for (std::size_t m = 0; m <= std::min(order, s.order()); ++m) out[m] = s[m];
        return out;
    };
    const Series<BigInt> fp = pad(f), gp = pad(g);
    const Series<BigInt> f3 = fp.pow(3);
    std::vector<Series<BigInt>> fpow(r + 1), gpow(r + 1);
    fpow[0] = fp.pow(a - 3 * r);
    gpow[0] = Series<BigInt>::constant(1, order);
    for (unsigned j = 1; j <= r; ++j) {
        fpow[j] = fpow[j - 1] * f3;
        gpow[j] = gpow[j - 1] * gp;
    }
    std::vector<Series<BigInt>> cols(r + 1);
    for (unsigned i = 0; i <= r; ++i) cols[i] = fpow[r - i] * gpow[i];

    IntMatrix mat(r + 1, std::vector<BigInt>(r + 1));
    std::vector<BigInt> rhs(r + 1, 0);
    rhs[0] = 1;
    for (unsigned k = 0; k <= r; ++k) {
        for (unsigned i = 0; i <= r; ++i) mat[k][i] = cols[i][k];
    }
    const std::vector<BigRational> coef = solve_exact(std::move(mat), std::move(rhs));

    Series<BigRational> out(order);
    for (unsigned i = 0; i <= r; ++i) {
        for (std::size_t m = 0; m <= order; ++m) {
            if (cols[i][m] != 0) out[m] += coef[i] * BigRational(cols[i][m]);
        }
    }
    return out;
}

// W(1, y) with z = y^4
Series<BigInt> hamming_in_z() { return Series<BigInt>(std::vector<BigInt>{1, 14, 1}); }
Series<BigInt> golay_in_z() { return Series<BigInt>(std::vector<BigInt>{1, 0, 759, 2576, 759, 0, 1}); }

}  // namespace

std::vector<BigRational> extremal_enumerator_prefix(unsigned n, unsigned terms, unsigned max_m) {
    check_length(n, max_m);
    const std::size_t order = std::max<std::size_t>(terms, n / 24);
    Series<BigRational> s = extremal_combination(hamming_in_z(), golay_in_z(), n, order);
    return std::vector<BigRational>(s.coeffs().begin(), s.coeffs().begin() + terms + 1);
}

std::vector<BigRational> extremal_enumerator_prefix_dense(unsigned n, unsigned terms, unsigned max_m) {
    check_length(n, max_m);
    const std::size_t order = std::max<std::size_t>(terms, n / 24);
    Series<BigRational> s = extremal_combination_dense(hamming_in_z(), golay_in_z(), n, order);
    return std::vector<BigRational>(s.coeffs().begin(), s.coeffs().begin() + terms + 1);
}

BivariatePoly<BigInt> extremal_weight_enumerator(unsigned n, unsigned max_m) {
    check_length(n, max_m);
    const std::vector<BigRational> z = extremal_enumerator_prefix(n, n / 4, max_m);
    BivariatePoly<BigInt> w(n);
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (z[k].get_den() != 1) {
            throw ConstructionFailure("extremal enumerator of length " + std::to_string(n) +
                                      " has a non-integral coefficient");
        }
        w[4 * k] = z[k].get_num();
    }
    return w;
}

LeadingCoeffs extremal_leading_coeffs(unsigned m, unsigned max_m) {
    if (m == 0) throw InvalidArgument("m must be positive");
    const std::vector<BigRational> z = extremal_enumerator_prefix(24 * m, m + 2, max_m);
    return {to_integer(z[m + 1]), to_integer(z[m + 2])};
}

BigInt leading_coeff_closed_form(unsigned m) {
    if (m == 0) throw InvalidArgument("m must be positive");
    BigInt num = binomial(24 * m, 5) * binomial(5 * m - 2, m - 1);
    BigInt den = binomial(4 * m + 4, 5);
    if (num % den != 0) throw ConstructionFailure("closed form is not integral");
    return num / den;
}

std::optional<unsigned> find_negative_next_coeff(const std::vector<unsigned>& ms, unsigned max_m) {
    for (unsigned m : ms) {
        if (extremal_leading_coeffs(m, max_m).next < 0) return 24 * m;
    }
    return std::nullopt;
}

QSeries extremal_theta(unsigned n, std::size_t order) {
    if (n < 8 || n % 8 != 0) throw InvalidArgument("dimension must be a positive multiple of 8");
    if (order < n / 24 + 1) throw InvalidArgument("truncation order must be at least n/24 + 1");
    Series<BigRational> s = extremal_combination(e8_theta(order), leech_theta(order), n, order);
    QSeries out(order);
    for (std::size_t m = 0; m <= order; ++m) {
        if (s[m].get_den() != 1) throw ConstructionFailure("extremal theta series is not integral");
        out[m] = s[m].get_num();
    }
    return out;
}

}  // namespace seqlab
