#include "oracles.hpp"
#include "seqlab/error.hpp"
#include "seqlab/wythoff.hpp"

#include <doctest.h>

#include <set>

using namespace seqlab;

namespace {

std::vector<std::uint64_t> greedy_zeckendorf(std::uint64_t n) {
    std::vector<std::uint64_t> fib{1, 2};
    while (fib.back() <= n) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    std::vector<std::uint64_t> parts;
    for (std::size_t i = fib.size(); i-- > 0;) {
        if (fib[i] <= n) {
            parts.push_back(fib[i]);
            n -= fib[i];
        }
    }
    return parts;
}

}  // namespace

TEST_SUITE("wythoff") {
    TEST_CASE("Zeckendorf expansions are greedy and sparse") {
        for (std::uint64_t n = 1; n <= 3000; ++n) {
            const auto idx = zeckendorf(from_u64(n));
            const auto parts = greedy_zeckendorf(n);
            REQUIRE(idx.size() == parts.size());
            for (std::size_t i = 0; i < idx.size(); ++i) {
                CHECK(fibonacci(idx[i]) == from_u64(parts[i]));
                if (i) CHECK(idx[i - 1] >= idx[i] + 2);
            }
        }
        CHECK_THROWS_AS(zeckendorf(BigInt(0)), InvalidArgument);
    }

    TEST_CASE("successor, predecessor and floor times phi") {
        CHECK(fib_successor(BigInt(100)) == 144 + 13 + 5);
        CHECK(fib_successor(BigInt(0)) == 0);
        for (std::uint64_t n = 0; n <= 5000; ++n) {
            CHECK(floor_times_phi(from_u64(n)) == from_u64(static_cast<std::uint64_t>(
                                                       std::floor(static_cast<long double>(n) * (1 + std::sqrt(5.0L)) / 2))));
            if (n >= 1) CHECK(fib_predecessor(fib_successor(from_u64(n))) == from_u64(n));
        }
        for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(fib_successor(from_u64(n)) + 1 == floor_times_phi(from_u64(n + 1)));
    }

    TEST_CASE("the four constructions agree") {
        const WythoffWindow w = wythoff_window(50, 30, 1);
        for (int c = 2; c <= 4; ++c) CHECK(wythoff_window(50, 30, c) == w);
        CHECK_THROWS_AS(wythoff_window(3, 3, 5), InvalidArgument);
    }

    TEST_CASE("window against the closed form in floating point") {
        const WythoffWindow w = wythoff_window(7, 8, 1);
        const auto printed = to_bigints({1, 2, 3, 5, 8, 13, 21, 34, 55});
        CHECK(w.rows[0] == printed);
        CHECK(w.rows[7][3] == 81);
        for (std::uint64_t n = 0; n <= 7; ++n) {
            CHECK(w.index_column[n] == from_u64(n));
            CHECK(w.lower_column[n] == from_u64(oracle::lower_wythoff(n)));
            CHECK(w.rows[n][0] == from_u64(oracle::lower_wythoff(n) + n));
        }
    }

    TEST_CASE("every positive integer appears exactly once") {
        std::set<std::pair<std::uint64_t, unsigned>> cells;
        for (std::uint64_t n = 1; n <= 10000; ++n) {
            auto [r, k] = wythoff_position(n);
            CHECK(wythoff_entry(from_u64(r), k) == from_u64(n));
            CHECK(cells.insert({r, k}).second);
        }
    }

    TEST_CASE("complementary Beatty sequences") {
        const auto lower = lower_wythoff(2000);
        const auto succ = fib_successors(2000);
        const auto non = non_successors(800);
        std::set<BigInt> s(succ.begin(), succ.end());
        for (const auto& v : non) CHECK(s.count(v) == 0);
        for (std::size_t i = 0; i < lower.size(); ++i) CHECK(lower[i] == from_u64(oracle::lower_wythoff(i)));
    }

    TEST_CASE("para-Fibonacci sequences") {
        CHECK(para_fibonacci_vertical(23) ==
              to_bigints({0, 0, 0, 1, 0, 2, 1, 0, 3, 2, 1, 4, 0, 5, 3, 2, 6, 1, 7, 4, 0, 8, 5}));
        CHECK(para_fibonacci_horizontal(23) ==
              to_bigints({1, 2, 3, 1, 4, 1, 2, 5, 1, 2, 3, 1, 6, 1, 2, 3, 1, 4, 1, 2, 7, 1, 2}));
        const auto v = para_fibonacci_vertical(10000);
        const auto d = delete_first_occurrences(v);
        CHECK(std::equal(d.begin(), d.end(), v.begin()));
        const auto h = para_fibonacci_horizontal(10000);
        for (std::uint64_t n = 1; n <= 10000; ++n) {
            auto [r, k] = wythoff_position(n);
            CHECK(v[n - 1] == from_u64(r));
            CHECK(h[n - 1] == k + 1);
        }
    }

    TEST_CASE("blocks between zeros and alternating rows") {
        const auto blocks = para_fibonacci_blocks(12);
        for (const auto& b : blocks) CHECK(b.front() == 0);
        const WythoffWindow w = wythoff_window(20, 12, 1);
        for (std::size_t n = 0; n + 1 <= 20; ++n) CHECK(rows_alternate(w.rows[n], w.rows[n + 1]));
    }

    TEST_CASE("Fibonacci-type sequences land in a row") {
        for (std::uint64_t a = 1; a <= 20; ++a) {
            for (std::uint64_t b = 1; b <= 20; ++b) {
                const auto m = locate_fibonacci_type(a, b);
                REQUIRE(m.has_value());
                std::uint64_t x = a, y = b;
                for (std::size_t s = 0; s < m->step; ++s) {
                    const std::uint64_t z = x + y;
                    x = y;
                    y = z;
                }
                CHECK(wythoff_entry(from_u64(m->row), m->column) == from_u64(x));
                CHECK(wythoff_entry(from_u64(m->row), m->column + 1) == from_u64(y));
            }
        }
    }
}
