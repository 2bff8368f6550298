#include "seqlab/bignum.hpp"

#include "seqlab/error.hpp"

#include <cctype>
#include <cmath>

namespace seqlab {

BigInt binomial(long n, long k) {
    if (n < 0) throw InvalidArgument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt parse_bigint(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty integer literal");
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') i = 1;
    if (i == text.size()) throw InvalidArgument("integer literal has no digits: '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw InvalidArgument("not an integer: '" + std::string(text) + "'");
        }
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return BigInt(digits, 10);
}

std::string to_string(const BigInt& v) { return v.get_str(10); }

BigInt to_integer(BigRational q) {
    q.canonicalize();
    if (q.get_den() != 1) throw InvalidArgument("value is not integral: " + q.get_str());
    return q.get_num();
}

bool fits_u64(const BigInt& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt& v) {
    if (!fits_u64(v)) throw InvalidArgument("value does not fit in 64 bits: " + v.get_str());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

BigInt from_u64(std::uint64_t v) {
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return r;
}

BigInt from_u128(unsigned __int128 v) {
    BigInt hi = from_u64(static_cast<std::uint64_t>(v >> 64));
    BigInt lo = from_u64(static_cast<std::uint64_t>(v));
    return (hi << 64) + lo;
}

double log(const BigInt& v) {
    if (sgn(v) <= 0) throw InvalidArgument("log of a nonpositive integer");
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::vector<BigInt> to_bigints(std::initializer_list<long long> values) {
    std::vector<BigInt> out;
    out.reserve(values.size());
    for (long long v : values) out.emplace_back(static_cast<long>(v));
    return out;
}

std::string join(const std::vector<BigInt>& terms, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += sep;
        out += terms[i].get_str();
    }
    return out;
}

std::vector<BigInt> parse_terms(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (!text.empty() && text.front() == ',') text.remove_prefix(1);
    if (!text.empty() && text.back() == ',') text.remove_suffix(1);
    std::vector<BigInt> out;
    if (trim(text).empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        out.push_back(parse_bigint(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace seqlab
