#pragma once

// Truncated power series and homogeneous bivariate polynomials with exact
// coefficients, plus the fixed series used by the extremal module.

#include "seqlab/bignum.hpp"
#include "seqlab/error.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace seqlab {

/// Power series a[0] + a[1] t + ... + a[M] t^M known through order M.
/// Binary operations truncate to the smaller of the two orders.
template <class Scalar>
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1, Scalar(0)) {}
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, Scalar(0)) {}
    TruncatedSeries(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw InvalidArgument("series needs at least one coefficient");
    }

    static TruncatedSeries constant(const Scalar& v, std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }

    std::size_t order() const noexcept { return c_.size() - 1; }
    const Scalar& operator[](std::size_t m) const { return c_.at(m); }
    Scalar& operator[](std::size_t m) { return c_.at(m); }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }

    TruncatedSeries truncated(std::size_t order) const {
        if (order > this->order()) throw InvalidArgument("cannot extend a truncated series");
        return TruncatedSeries(std::vector<Scalar>(c_.begin(), c_.begin() + order + 1));
    }

    /// Multiplication by t^k (order is kept; high terms fall off).
    TruncatedSeries shifted(std::size_t k) const {
        TruncatedSeries s(order());
        for (std::size_t m = k; m <= order(); ++m) s.c_[m] = c_[m - k];
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.order(), b.order()));
        for (std::size_t m = 0; m <= s.order(); ++m) s.c_[m] = a.c_[m] + b.c_[m];
        return s;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.order(), b.order()));
        for (std::size_t m = 0; m <= s.order(); ++m) s.c_[m] = a.c_[m] - b.c_[m];
        return s;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.order(), b.order()));
        const std::size_t n = s.order();
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (b.c_[j] != 0) s.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return s;
    }

    friend TruncatedSeries operator*(const Scalar& k, const TruncatedSeries& a) {
        TruncatedSeries s(a.order());
        for (std::size_t m = 0; m <= s.order(); ++m) s.c_[m] = k * a.c_[m];
        return s;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    TruncatedSeries pow(unsigned long e) const {
        TruncatedSeries result = constant(Scalar(1), order());
        TruncatedSeries base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

private:
    std::vector<Scalar> c_;
};

/// Series in q^2: index m holds the coefficient of q^{2m}.
using QSeries = TruncatedSeries<BigInt>;

/// Homogeneous polynomial of degree n; c[j] is the coefficient of x^{n-j} y^j.
template <class Scalar>
class BivariatePoly {
public:
    explicit BivariatePoly(std::size_t degree = 0) : c_(degree + 1, Scalar(0)) {}
    BivariatePoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw InvalidArgument("polynomial needs at least one coefficient");
    }

    std::size_t degree() const noexcept { return c_.size() - 1; }
    const Scalar& operator[](std::size_t j) const { return c_.at(j); }
    Scalar& operator[](std::size_t j) { return c_.at(j); }
    const std::vector<Scalar>& coeffs() const noexcept { return c_; }

    friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
        if (a.degree() != b.degree()) throw InvalidArgument("adding polynomials of different degrees");
        BivariatePoly s(a.degree());
        for (std::size_t j = 0; j <= s.degree(); ++j) s.c_[j] = a.c_[j] + b.c_[j];
        return s;
    }

    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly s(a.degree() + b.degree());
        for (std::size_t i = 0; i <= a.degree(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j <= b.degree(); ++j) {
                if (b.c_[j] != 0) s.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return s;
    }

    friend BivariatePoly operator*(const Scalar& k, const BivariatePoly& a) {
        BivariatePoly s(a.degree());
        for (std::size_t j = 0; j <= s.degree(); ++j) s.c_[j] = k * a.c_[j];
        return s;
    }

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.c_ == b.c_; }

    BivariatePoly pow(unsigned long e) const {
        BivariatePoly result(std::vector<Scalar>{Scalar(1)});
        BivariatePoly base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    /// Coefficients of W(1, y) as a series in y, through degree().
    TruncatedSeries<Scalar> dehomogenize() const { return TruncatedSeries<Scalar>(c_); }

private:
    std::vector<Scalar> c_;
};

/// x^8 + 14x^4y^4 + y^8
BivariatePoly<BigInt> hamming_enumerator();
/// x^24 + 759x^16y^8 + 2576x^12y^12 + 759x^8y^16 + y^24
BivariatePoly<BigInt> golay_enumerator();

/// W(x+y, x-y) / 2^{n/2}, the MacWilliams transform for a self-dual code of even length n.
BivariatePoly<BigRational> macwilliams(const BivariatePoly<BigRational>& w);

BivariatePoly<BigRational> to_rational(const BivariatePoly<BigInt>& p);

/// prod_{m>=1} (1 - q^{2m})^24 through q^{2M}.
QSeries eta24(std::size_t order);
/// 1 + 240 sum sigma_3(m) q^{2m}
QSeries e8_theta(std::size_t order);
/// e8^3 - 720 q^2 eta24
QSeries leech_theta(std::size_t order);
/// tau(1), ..., tau(count): coefficients of q^2 prod (1 - q^{2m})^24.
std::vector<BigInt> ramanujan_tau(std::size_t count);

}  // namespace seqlab
