#include "oracles.hpp"
#include "seqlab/boustrophedon.hpp"
#include "seqlab/error.hpp"
#include "seqlab/sequence.hpp"

#include <doctest.h>

#include <random>

using namespace seqlab;

TEST_SUITE("boustrophedon") {
    TEST_CASE("Entringer numbers count alternating permutations") {
        const auto e = entringer_numbers(11);
        for (unsigned n = 0; n <= 10; ++n) CHECK(e[n] == from_u64(oracle::alternating_permutations(n)));
    }

    TEST_CASE("secant and tangent numbers from sin / cos") {
        const auto tan = oracle::tan_sec_numbers(30, true);
        const auto sec = oracle::tan_sec_numbers(30, false);
        const SecantTangent st = secant_tangent_numbers(15);
        for (std::size_t k = 0; k < 15; ++k) {
            CHECK(st.sec[k] == sec[2 * k]);
            CHECK(st.tan[k] == tan[2 * k + 1]);
        }
        const auto e = entringer_numbers(30);
        for (std::size_t n = 0; n < 30; ++n) CHECK(e[n] == (n % 2 ? tan[n] : sec[n]));
    }

    TEST_CASE("printed secant-tangent triangle") {
        std::vector<BigInt> seed(8, 0);
        seed[0] = 1;
        const BoustroTriangle t = boustrophedon_triangle(seed);
        const std::vector<std::vector<long long>> printed{
            {1}, {0, 1}, {1, 1, 0}, {0, 1, 2, 2}, {5, 5, 4, 2, 0}, {0, 5, 10, 14, 16, 16},
            {61, 61, 56, 46, 32, 16, 0}, {0, 61, 122, 178, 224, 256, 272, 272}};
        for (std::size_t n = 0; n < 8; ++n) {
            std::vector<BigInt> row;
            for (auto v : printed[n]) row.emplace_back(static_cast<long>(v));
            CHECK(t.displayed(n) == row);
        }
    }

    TEST_CASE("triangle and convolution agree on random input") {
        std::mt19937_64 rng(99);
        for (int t = 0; t < 200; ++t) {
            std::vector<BigInt> a(1 + rng() % 25);
            for (auto& v : a) v = static_cast<long>(rng() % 2001) - 1000;
            CHECK(boustrophedon_transform(a) == boustrophedon_transform_convolution(a));
        }
        CHECK(boustrophedon_transform({}).empty());
    }

    TEST_CASE("transform of all ones") {
        const auto b = boustrophedon_transform(std::vector<BigInt>(8, 1));
        CHECK(b == to_bigints({1, 2, 4, 9, 24, 77, 294, 1309}));
    }

    TEST_CASE("eigen-sequences shift under the transform") {
        const auto a = eigen_shift_solver(2, 25);
        CHECK(std::vector<BigInt>(a.begin(), a.begin() + 11) ==
              to_bigints({1, 0, 1, 1, 2, 6, 17, 62, 259, 1230, 6592}));
        const auto b = boustrophedon_transform(a);
        CHECK(std::equal(b.begin(), b.end() - 2, a.begin() + 2));
        const auto one = eigen_shift_solver(1, 20);
        const auto bo = boustrophedon_transform(one);
        CHECK(std::equal(bo.begin(), bo.end() - 1, one.begin() + 1));
        const auto e = entringer_numbers(21);
        CHECK(std::equal(one.begin(), one.end(), e.begin() + 1));
        std::mt19937_64 rng(1);
        for (int t = 0; t < 20; ++t) {
            std::vector<BigInt> prefix{static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 9) - 4};
            const auto c = eigen_shift_solver(2, 15, prefix);
            const auto bc = boustrophedon_transform(c);
            CHECK(std::equal(bc.begin(), bc.end() - 2, c.begin() + 2));
        }
        CHECK_THROWS_AS(eigen_shift_solver(2, 10, to_bigints({1})), InvalidArgument);
        CHECK_THROWS_AS(eigen_shift_solver(3, 10), InvalidArgument);
    }

    TEST_CASE("inverse Moebius eigen-sequence") {
        const auto a = moebius_shift_sequence(40);
        CHECK(std::vector<BigInt>(a.begin(), a.begin() + 11) == to_bigints({1, 1, 2, 3, 5, 6, 10, 11, 16, 19, 26}));
        CHECK(moebius_eigen_check(a));
        const auto b = inverse_moebius_transform(a);
        CHECK(std::equal(b.begin(), b.end() - 1, a.begin() + 1));
        auto broken = a;
        broken[10] += 1;
        CHECK_FALSE(moebius_eigen_check(broken));
    }
}
