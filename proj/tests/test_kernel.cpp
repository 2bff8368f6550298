#include "oracles.hpp"
#include "seqlab/error.hpp"
#include "seqlab/primes.hpp"
#include "seqlab/sequence.hpp"

#include <doctest.h>

#include <random>
#include <thread>

using namespace seqlab;

TEST_SUITE("primes") {
    TEST_CASE("sieve agrees with a plain sieve") {
        PrimeSieve s(2'000'000);
        const auto ref = oracle::primes_below(2'000'001);
        CHECK(s.primes_up_to(2'000'000) == ref);
        CHECK(s.prime_count(2'000'000) == ref.size());
        for (std::size_t i = 0; i < ref.size(); i += 997) CHECK(s.nth_prime(i + 1) == ref[i]);
        CHECK(s.prime_count(1) == 0);
        CHECK(s.prime_count(2) == 1);
    }

    TEST_CASE("capacity is enforced") {
        PrimeSieve s(1000);
        CHECK(s.nth_prime(168) == 997);
        CHECK_THROWS_AS(s.nth_prime(169), CapacityExceeded);
        CHECK_THROWS_AS(s.extend_to(1001), CapacityExceeded);
    }

    TEST_CASE("concurrent readers see one sieve") {
        PrimeSieve s(3'000'000);
        std::vector<std::uint64_t> got(4);
        std::vector<std::thread> t;
        for (int i = 0; i < 4; ++i) t.emplace_back([&, i] { got[i] = s.nth_prime(100000 + i); });
        for (auto& th : t) th.join();
        const auto ref = oracle::primes_below(3'000'000);
        for (int i = 0; i < 4; ++i) CHECK(got[i] == ref[99999 + i]);
    }

    TEST_CASE("Miller-Rabin and factorization") {
        const auto ref = oracle::primes_below(100000);
        std::vector<bool> is(100000, false);
        for (auto p : ref) is[p] = true;
        for (std::uint64_t n = 0; n < 100000; ++n) CHECK(is_prime_u64(n) == is[n]);
        CHECK(is_prime_u64(18446744073709551557ull));
        CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to 2, 3, 5, 7
        std::mt19937_64 rng(3);
        for (int t = 0; t < 200; ++t) {
            const std::uint64_t n = 1 + rng() % 1'000'000'000'000ull;
            BigInt prod = 1;
            std::uint64_t last = 0;
            for (auto [p, e] : factorize(n)) {
                CHECK(is_prime_u64(p));
                CHECK(p > last);
                last = p;
                prod *= pow(from_u64(p), e);
            }
            CHECK(prod == from_u64(n));
        }
        CHECK(factorize(1).empty());
        CHECK_THROWS_AS(factorize(pow(BigInt(2), 64)), InvalidArgument);
    }

    TEST_CASE("arithmetic functions agree with divisor loops") {
        const ArithTable t = arith_table(2000);
        for (std::uint64_t n = 1; n <= 2000; ++n) {
            const auto d = oracle::divisor_sums(n);
            CHECK(t.sigma[n] == d.sigma);
            CHECK(t.tau[n] == d.tau);
            CHECK(t.phi[n] == d.phi);
            const ArithFunctions f = arith_functions(n);
            CHECK(f.sigma == from_u64(d.sigma));
            CHECK(f.tau == d.tau);
            CHECK(f.phi == from_u64(d.phi));
            CHECK(f.sigma3 == from_u64(d.sigma3));
        }
    }
}

TEST_SUITE("kernel") {
    TEST_CASE("stored sequences refuse to invent terms") {
        Sequence s = Sequence::stored("A1231", 2, to_bigints({1, 1, 1, 1, 0}));
        CHECK(s.terms(5) == to_bigints({1, 1, 1, 1, 0}));
        CHECK_THROWS_AS(s.terms(6), BudgetExceeded);
        CHECK(s.known_terms() == 5);
        CHECK(s.provenance() == Provenance::stored);
    }

    TEST_CASE("generated prefixes are stable") {
        int calls = 0;
        Sequence s("A27", 1, [&](std::size_t n) {
            ++calls;
            std::vector<BigInt> v;
            for (std::size_t i = 1; i <= n; ++i) v.push_back(from_u64(i));
            return v;
        });
        const auto a = s.terms(10);
        const auto b = s.terms(5);
        CHECK(std::equal(b.begin(), b.end(), a.begin()));
        Sequence copy = s;
        CHECK(copy.terms(10) == a);
    }

    TEST_CASE("hybrid sequences check generated against stored") {
        auto gen = [](std::size_t n) {
            std::vector<BigInt> v;
            for (std::size_t i = 0; i < n; ++i) v.push_back(from_u64(i * i));
            return v;
        };
        Sequence good = Sequence::hybrid("A290", 0, gen, 3, to_bigints({0, 1, 4, 9, 16}));
        CHECK(good.terms(5) == to_bigints({0, 1, 4, 9, 16}));
        CHECK_THROWS_AS(good.terms(6), BudgetExceeded);
        Sequence bad = Sequence::hybrid("A290", 0, gen, 3, to_bigints({0, 1, 5, 9}));
        CHECK_THROWS_AS(bad.terms(4), ConstructionFailure);
    }

    TEST_CASE("array readers") {
        CHECK(read_triangle_by_rows(pascal_triangle(), 15) == to_bigints({1, 1, 1, 1, 2, 1, 1, 3, 3, 1, 1, 4, 6, 4, 1}));
        for (std::size_t i = 0; i < 500; ++i) {
            auto [r, c] = antidiagonal_position(i);
            CHECK(antidiagonal_index(r, c) == i);
        }
        CHECK(antidiagonal_position(1) == std::pair<std::size_t, std::size_t>{1, 0});
    }

    TEST_CASE("Nim addition is the mex sum") {
        for (std::uint64_t a = 0; a < 16; ++a)
            for (std::uint64_t b = 0; b < 16; ++b) CHECK(nim_add(a, b) == oracle::nim_sum(a, b));
        CHECK(nim_add(1, 1) == 0);
        CHECK(nim_add(2, 3) == 1);
        const auto seq = read_square_by_antidiagonals(nim_square(), 15);
        CHECK(seq == to_bigints({0, 1, 1, 2, 0, 2, 3, 3, 3, 3, 4, 2, 0, 2, 4}));
    }

    TEST_CASE("Gilbreath leaders and array") {
        const auto p = oracle::primes_below(2000);
        std::vector<long> row(p.begin(), p.end());
        std::vector<long> lead;
        for (int r = 1; r <= 200; ++r) {
            for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = std::labs(row[i + 1] - row[i]);
            row.pop_back();
            lead.push_back(row[0]);
        }
        const auto got = gilbreath_row_leaders(200, p.size());
        for (std::size_t i = 0; i < lead.size(); ++i) CHECK(got[i] == lead[i]);
        CHECK(gilbreath_sequence(16) == to_bigints({2, 1, 3, 1, 2, 5, 1, 0, 2, 7, 1, 2, 2, 4, 11, 1}));
        CHECK_THROWS_AS(gilbreath_row_leaders(10, 10), InvalidArgument);
    }

    TEST_CASE("transforms invert each other") {
        std::mt19937_64 rng(17);
        for (int t = 0; t < 50; ++t) {
            std::vector<BigInt> a(12);
            for (auto& v : a) v = static_cast<long>(rng() % 201) - 100;
            CHECK(inverse_binomial_transform(binomial_transform(a)) == a);
            CHECK(moebius_transform(inverse_moebius_transform(a)) == a);
            const auto d = differences(partial_sums(a));
            CHECK(std::equal(d.begin(), d.end(), a.begin() + 1));
        }
        CHECK(inverse_moebius_transform(to_bigints({1, 1, 1, 1, 1, 1})) == to_bigints({1, 2, 2, 3, 2, 4}));
        CHECK(transform(to_bigints({1, 2, 4}), TransformKind::differences, 2) == to_bigints({1, 2}));
        CHECK_THROWS_AS(transform(to_bigints({1, 2}), TransformKind::differences, 2), InvalidArgument);
    }
}
