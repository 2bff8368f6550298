#pragma once

// Exact integer and rational arithmetic. BigInt and BigRational are the GMP C++
// classes; mpq_class keeps every value canonical (lowest terms, positive
// denominator) as long as callers construct through these helpers.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <type_traits>
#include <string>
#include <string_view>
#include <vector>

namespace seqlab {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// C(n, k); zero when k < 0 or k > n. Requires n >= 0.
BigInt binomial(long n, long k);
BigInt factorial(unsigned long n);
BigInt pow(const BigInt& base, unsigned long exp);

/// Parses an optionally signed decimal integer; throws InvalidArgument on
/// anything else (including empty input and embedded spaces).
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& v);

/// Integral value of a rational, throwing InvalidArgument if it is not integral.
BigInt to_integer(BigRational q);

bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);
BigInt from_u64(std::uint64_t v);
BigInt from_u128(unsigned __int128 v);

/// Natural log of a positive BigInt, accurate for values far beyond double range.
double log(const BigInt& v);

std::vector<BigInt> to_bigints(std::initializer_list<long long> values);

template <class Int>
std::vector<BigInt> to_bigints(const std::vector<Int>& values) {
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        if constexpr (std::is_same_v<Int, BigInt>) {
            out.push_back(v);
        } else if constexpr (std::is_signed_v<Int>) {
            out.emplace_back(static_cast<long>(v));
        } else {
            out.push_back(from_u64(static_cast<std::uint64_t>(v)));
        }
    }
    return out;
}

/// Comma-separated decimal rendering, e.g. "1,2,3".
std::string join(const std::vector<BigInt>& terms, std::string_view sep = ",");

/// Parses "1,2,3" (spaces tolerated around terms; leading/trailing commas allowed).
std::vector<BigInt> parse_terms(std::string_view text);

}  // namespace seqlab
