#include "seqlab/recursive.hpp"

#include "seqlab/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace seqlab {

BigInt tree_height_sum_W(unsigned n) {
    if (n == 0) throw InvalidArgument("W_n needs n >= 1");
    // (n-1)!/k! * n^k summed from k = n-2 down to 0
    BigInt sum = 0, ratio = n - 1, npow = pow(BigInt(n), n >= 2 ? n - 2 : 0);
    for (long k = static_cast<long>(n) - 2; k >= 0; --k) {
        sum += ratio * npow;
        if (k > 0) {
            ratio *= k;
            npow /= n;
        }
    }
    return sum;
}

double tree_height_asymptotic_ratio(unsigned n) {
    if (n < 2) throw InvalidArgument("asymptotic ratio needs n >= 2");
    const double lw = log(tree_height_sum_W(n));
    const double dn = n;
    return std::exp(lw - dn * std::log(dn) + 0.5 * std::log(dn / (2 * std::numbers::pi)));
}

ComplementPair hofstadter_complement(std::size_t count) {
    if (count == 0) throw InvalidArgument("count must be positive");
    ComplementPair out;
    std::vector<bool> in_seq{false, true};
    std::uint64_t a = 1, d = 1;
    out.seq.emplace_back(1);
    while (out.seq.size() < count) {
        do {
            ++d;
        } while (d < in_seq.size() && in_seq[d]);
        a += d;
        if (in_seq.size() <= a) in_seq.resize(a + 1, false);
        in_seq[a] = true;
        out.seq.push_back(from_u64(a));
        out.diffs.push_back(from_u64(d));
    }
    return out;
}

std::vector<BigInt> golomb(std::size_t count) {
    std::vector<std::uint64_t> a(count + 1, 0);
    if (count >= 1) a[1] = 1;
    for (std::size_t n = 1; n < count; ++n) a[n + 1] = 1 + a[n + 1 - a[a[n]]];
    return to_bigints(std::vector<std::uint64_t>(a.begin() + 1, a.end()));
}

std::vector<BigInt> wilson_primeth(std::size_t max_terms, PrimeSieve& sieve) {
    std::vector<BigInt> out;
    std::uint64_t a = 1;
    for (std::size_t i = 0; i < max_terms; ++i) {
        if (i > 0) a = sieve.nth_prime(a);
        out.push_back(from_u64(a));
    }
    return out;
}

std::vector<BigInt> recaman_subtract_first(std::size_t count) {
    std::vector<BigInt> out;
    if (count == 0) return out;
    std::vector<bool> seen(2 * count + 2, false);
    std::uint64_t a = 1;
    seen[1] = true;
    out.emplace_back(1);
    for (std::uint64_t n = 2; out.size() < count; ++n) {
        if (a > n && !seen[a - n]) {
            a -= n;
        } else {
            a += n;
        }
        if (a >= seen.size()) seen.resize(2 * a, false);
        seen[a] = true;
        out.push_back(from_u64(a));
    }
    return out;
}

std::vector<BigInt> recaman_divide(std::size_t count) {
    std::vector<BigInt> out;
    if (count == 0) return out;
    BigInt a = 1;
    out.push_back(a);
    for (unsigned long n = 1; out.size() < count; ++n) {
        if (a % n == 0) {
            a /= n;
        } else {
            a *= n;
        }
        out.push_back(a);
    }
    return out;
}

RecamanGrowth recaman_growth_report(std::uint64_t terms) {
    RecamanGrowth g;
    g.terms = terms;
    if (terms == 0) return g;
    std::vector<bool> seen(2 * terms + 2, false);
    std::uint64_t a = 1;
    seen[1] = true;
    g.max_term = 1;
    for (std::uint64_t n = 2; n <= terms; ++n) {
        if (a > n && !seen[a - n]) {
            a -= n;
        } else {
            a += n;
        }
        if (a >= seen.size()) seen.resize(2 * a, false);
        seen[a] = true;
        g.max_term = std::max(g.max_term, a);
    }
    g.coverage = static_cast<double>(terms) / static_cast<double>(g.max_term);
    g.first_missing = 1;
    while (g.first_missing < seen.size() && seen[g.first_missing]) ++g.first_missing;
    return g;
}

namespace {

std::vector<std::uint32_t> conway_raw(std::size_t count) {
    std::vector<std::uint32_t> a(std::max<std::size_t>(count, 2) + 1, 0);
    a[1] = a[2] = 1;
    for (std::size_t n = 2; n < count; ++n) a[n + 1] = a[a[n]] + a[n + 1 - a[n]];
    return a;
}

}  // namespace

std::vector<BigInt> conway_10000(std::size_t count) {
    std::vector<std::uint32_t> a = conway_raw(count);
    return to_bigints(std::vector<std::uint32_t>(a.begin() + 1, a.begin() + 1 + count));
}

std::uint64_t conway_threshold(std::uint64_t bound) {
    std::vector<std::uint32_t> a = conway_raw(bound);
    std::uint64_t last = 0;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        // |a/n - 1/2| > 1/20  <=>  |20a - 10n| > n
        std::int64_t dev = 20 * static_cast<std::int64_t>(a[n]) - 10 * static_cast<std::int64_t>(n);
        if (static_cast<std::uint64_t>(dev < 0 ? -dev : dev) > n) last = n;
    }
    return last;
}

std::vector<BigInt> conway_variant_A5229(std::size_t count) {
    std::vector<std::uint64_t> a(std::max<std::size_t>(count, 2) + 1, 0);
    a[1] = a[2] = 1;
    for (std::size_t n = 3; n <= count; ++n) a[n] = a[a[n - 2]] + a[n - a[n - 2]];
    return to_bigints(std::vector<std::uint64_t>(a.begin() + 1, a.begin() + 1 + count));
}

std::vector<BigInt> prague_clock(std::size_t count_groups) {
    static constexpr int kStrokes[] = {1, 2, 3, 4, 3, 2};
    std::vector<BigInt> out;
    std::size_t pos = 0;
    for (std::size_t g = 0; g < count_groups; ++g) {
        const int hour = static_cast<int>(g % 24) + 1;
        int sum = 0;
        std::string digits;
        while (sum < hour) {
            int s = kStrokes[pos++ % 6];
            sum += s;
            digits.push_back(static_cast<char>('0' + s));
        }
        if (sum != hour) {
            throw ConstructionFailure("prague clock: strokes overshoot hour " + std::to_string(hour));
        }
        out.emplace_back(digits);
    }
    return out;
}

}  // namespace seqlab
