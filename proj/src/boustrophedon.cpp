#include "seqlab/boustrophedon.hpp"

#include "seqlab/error.hpp"

#include <algorithm>

namespace seqlab {

std::vector<BigInt> BoustroTriangle::displayed(std::size_t n) const {
    std::vector<BigInt> row = fill.at(n);
    if (n % 2 == 0) std::reverse(row.begin(), row.end());
    return row;
}

BoustroTriangle boustrophedon_triangle(const std::vector<BigInt>& a) {
    BoustroTriangle t;
    for (std::size_t n = 0; n < a.size(); ++n) {
        std::vector<BigInt> cur(n + 1);
        cur[0] = a[n];
        for (std::size_t k = 1; k <= n; ++k) cur[k] = cur[k - 1] + t.fill[n - 1][n - k];
        t.fill.push_back(std::move(cur));
    }
    return t;
}

std::vector<BigInt> boustrophedon_transform(const std::vector<BigInt>& a) {
    std::vector<BigInt> b;
    b.reserve(a.size());
    std::vector<BigInt> prev, cur;
    for (std::size_t n = 0; n < a.size(); ++n) {
        cur.assign(n + 1, 0);
        cur[0] = a[n];
        for (std::size_t k = 1; k <= n; ++k) cur[k] = cur[k - 1] + prev[n - k];
        b.push_back(cur[n]);
        std::swap(prev, cur);
    }
    return b;
}

std::vector<BigInt> entringer_numbers(std::size_t count) {
    std::vector<BigInt> e;
    if (count >= 1) e.emplace_back(1);
    if (count >= 2) e.emplace_back(1);
    for (std::size_t n = 1; e.size() < count; ++n) {
        BigInt s = 0;
        for (std::size_t k = 0; k <= n; ++k) s += binomial(static_cast<long>(n), static_cast<long>(k)) * e[k] * e[n - k];
        e.push_back(s / 2);
    }
    return e;
}

std::vector<BigInt> boustrophedon_transform_convolution(const std::vector<BigInt>& a) {
    const std::vector<BigInt> e = entringer_numbers(a.size());
    std::vector<BigInt> b(a.size(), 0);
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            b[n] += binomial(static_cast<long>(n), static_cast<long>(k)) * a[k] * e[n - k];
        }
    }
    return b;
}

SecantTangent secant_tangent_numbers(std::size_t count) {
    std::vector<BigInt> seed(2 * count, 0);
    if (!seed.empty()) seed[0] = 1;
    BoustroTriangle t = boustrophedon_triangle(seed);
    SecantTangent st;
    for (std::size_t n = 0; n < seed.size(); ++n) {
        std::vector<BigInt> row = t.displayed(n);
        if (n % 2 == 0) {
            st.sec.push_back(row.front());
        } else {
            st.tan.push_back(row.back());
        }
    }
    return st;
}

std::vector<BigInt> default_free_prefix(unsigned shift) {
    if (shift == 1) return {1};
    if (shift == 2) return {1, 0};
    throw InvalidArgument("shift must be 1 or 2");
}

std::vector<BigInt> eigen_shift_solver(unsigned shift, std::size_t count, std::vector<BigInt> free_prefix) {
    if (shift != 1 && shift != 2) throw InvalidArgument("shift must be 1 or 2");
    if (free_prefix.empty()) free_prefix = default_free_prefix(shift);
    if (free_prefix.size() != shift) throw InvalidArgument("free prefix must have exactly `shift` terms");
    std::vector<BigInt> a = std::move(free_prefix);
    // b_n only depends on a_0..a_n, so a_{n+shift} = b_n is forced term by term.
    std::vector<BigInt> prev, cur;
    for (std::size_t n = 0; a.size() < count; ++n) {
        cur.assign(n + 1, 0);
        cur[0] = a[n];
        for (std::size_t k = 1; k <= n; ++k) cur[k] = cur[k - 1] + prev[n - k];
        a.push_back(cur[n]);
        std::swap(prev, cur);
    }
    a.resize(count);
    return a;
}

bool moebius_eigen_check(const std::vector<BigInt>& a) {
    for (std::size_t n = 1; n + 1 <= a.size(); ++n) {
        BigInt s = 0;
        for (std::size_t d = 1; d <= n; ++d) {
            if (n % d == 0) s += a[d - 1];
        }
        if (s != a[n]) return false;
    }
    return true;
}

std::vector<BigInt> moebius_shift_sequence(std::size_t count) {
    std::vector<BigInt> a;
    if (count >= 1) a.emplace_back(1);
    for (std::size_t n = 1; a.size() < count; ++n) {
        BigInt s = 0;
        for (std::size_t d = 1; d <= n; ++d) {
            if (n % d == 0) s += a[d - 1];
        }
        a.push_back(s);
    }
    return a;
}

}  // namespace seqlab
