#include "oracles.hpp"
#include "seqlab/error.hpp"
#include "seqlab/registry.hpp"
#include "seqlab/seqdb.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

using namespace seqlab;

namespace {

SeqDatabase small_db() {
    std::istringstream in(
        "# comment\n"
        "\n"
        "A27 1,2,3,4,5,6,7,8,9,10\n"
        "A5 1,2,2,3,2,4,2,4,3,4\n"
        "A290 0,1,4,9,16,25,36\n"
        "A4 0,0,0,0\n");
    return SeqDatabase::parse(in);
}

}  // namespace

TEST_SUITE("seqdb") {
    TEST_CASE("ids are normalized") {
        CHECK(normalize_id("A435") == "A000435");
        CHECK(normalize_id("a000435") == "A000435");
        CHECK(normalize_id("35513") == "A035513");
        for (const char* bad : {"", "A", "B12", "A1234567", "A12x"}) CHECK_THROWS_AS(normalize_id(bad), InvalidArgument);
    }

    TEST_CASE("parse errors carry the line number") {
        std::istringstream bad("A1 1,2\nA2 1,,2\n");
        try {
            SeqDatabase::parse(bad);
            FAIL("no error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
        std::istringstream dup("A1 1\n# x\nA000001 2\n");
        CHECK_THROWS_AS(SeqDatabase::parse(dup), ParseError);
        std::istringstream noterms("A1\n");
        CHECK_THROWS_AS(SeqDatabase::parse(noterms), ParseError);
        CHECK_THROWS_AS(SeqDatabase::load("/nonexistent/seqlab.db"), InvalidArgument);
    }

    TEST_CASE("lookup ranks exact, then position, then id") {
        const SeqDatabase db = small_db();
        CHECK(db.size() == 4);
        auto r = db.lookup(to_bigints({1, 2, 3}));
        REQUIRE(r.matches.size() == 1);
        CHECK(r.matches[0].id == "A000027");
        r = db.lookup(to_bigints({2, 4}));
        CHECK(r.low_confidence);
        REQUIRE(r.matches.size() == 1);
        CHECK(r.matches[0].position == 4);
        r = db.lookup(to_bigints({0, 0, 0, 0}));
        REQUIRE(r.matches.size() == 1);
        CHECK(r.matches[0].exact);
        r = db.lookup(to_bigints({0, 0}));
        CHECK(r.matches[0].id == "A000004");
        CHECK(r.matches[0].position == 0);
        CHECK(db.lookup(to_bigints({1, -2})).matches.empty());
        CHECK(db.lookup({}).matches.empty());
    }

    TEST_CASE("write then parse is the identity") {
        const SeqDatabase db = registry_database();
        std::ostringstream out;
        db.write(out);
        std::istringstream in(out.str());
        const SeqDatabase back = SeqDatabase::parse(in);
        REQUIRE(back.size() == db.size());
        for (std::size_t i = 0; i < db.size(); ++i) {
            CHECK(back.entries()[i].id == db.entries()[i].id);
            CHECK(back.entries()[i].terms == db.entries()[i].terms);
        }
        CHECK(back.index() == db.index());
    }

    TEST_CASE("every registered sequence finds itself from any window") {
        const SeqDatabase db = registry_database();
        std::mt19937_64 rng(4);
        for (const auto& e : db.entries()) {
            const std::size_t len = std::min<std::size_t>(6, e.terms.size());
            const std::size_t start = rng() % (e.terms.size() - len + 1);
            std::vector<BigInt> q(e.terms.begin() + start, e.terms.begin() + start + len);
            bool found = false;
            for (const auto& m : db.lookup(q).matches) found = found || (m.id == e.id && m.position <= start);
            CHECK_MESSAGE(found, e.id);
        }
    }

    TEST_CASE("superseek explains differences by partial sums") {
        const SeqDatabase db = registry_database();
        const auto hits = superseek(db, to_bigints({2, 4, 5, 6, 8, 9, 10, 11, 13}));
        bool chain = false;
        for (const auto& h : hits) {
            chain = chain || (h.id == "A005228" && h.chain == std::vector<SeekStep>{SeekStep::partial_sums_from_one});
        }
        CHECK(chain);
        CHECK(superseek(db, to_bigints({7, 7, 7, 7})).empty());
    }

    TEST_CASE("superseek undoes a random scaling or binomial transform") {
        const SeqDatabase db = small_db();
        const auto sq = to_bigints({0, 1, 4, 9, 16, 25, 36});
        auto doubled = sq;
        for (auto& v : doubled) v *= 2;
        bool half = false;
        for (const auto& h : superseek(db, doubled)) half = half || (h.id == "A000290" && h.chain == std::vector<SeekStep>{SeekStep::half});
        CHECK(half);
        bool inv = false;
        for (const auto& h : superseek(db, binomial_transform(sq)))
            inv = inv || (h.id == "A000290" && h.chain == std::vector<SeekStep>{SeekStep::inverse_binomial});
        CHECK(inv);
        CHECK(apply_chain(to_bigints({1, 3}), {SeekStep::half}).empty());
    }

    TEST_CASE("squared binomial sum: direct sum equals the recurrence") {
        const auto a = squared_binomial_sum(40);
        CHECK(a == squared_binomial_sum_by_recurrence(40));
        CHECK(std::vector<BigInt>(a.begin(), a.begin() + 6) == to_bigints({1, 8, 88, 1088, 14296, 195008}));
        for (unsigned n = 0; n < 12; ++n) {
            BigInt s = 0;
            for (unsigned k = 0; k <= n; ++k) {
                const BigInt u = oracle::binom(2 * n - 2 * k, n - k), v = oracle::binom(2 * k, k);
                s += u * u * v * v;
            }
            CHECK(a[n] == s);
        }
    }

    TEST_CASE("sigma(n) - d(n) - phi(n)") {
        const auto g = inequality_gap(3000);
        CHECK(std::vector<BigInt>(g.begin(), g.begin() + 15) == to_bigints({-1, 0, 0, 2, 0, 6, 0, 7, 4, 10, 0, 18, 0, 14, 12}));
        const auto primes = oracle::primes_below(3001);
        const std::set<std::uint64_t> prime_set(primes.begin(), primes.end());
        for (std::uint64_t n = 1; n <= 3000; ++n) {
            const auto d = oracle::divisor_sums(n);
            CHECK(g[n - 1] == BigInt(from_u64(d.sigma)) - from_u64(d.tau) - from_u64(d.phi));
            if (n >= 2) CHECK(g[n - 1] >= 0);
            if (n >= 2) CHECK((g[n - 1] == 0) == (prime_set.count(n) == 1));
        }
    }

    TEST_CASE("mod 5 square indices and the Loeschian test") {
        CHECK(mod5_square_indices(36) == std::vector<std::uint64_t>{1, 4, 5, 9, 11, 16, 19, 20, 25, 29, 31, 36});
        for (std::uint64_t n = 0; n <= 3000; ++n) {
            CHECK(loeschian_test(n) == oracle::loeschian(n));
            CHECK(loeschian_by_factors(n) == oracle::loeschian(n));
        }
    }
}

TEST_SUITE("registry") {
    TEST_CASE("names and ids resolve to the same entry") {
        for (const auto& e : registry()) {
            CHECK(find_registered(e.name) == &e);
            CHECK(find_registered(e.seq.id()) == &e);
        }
        CHECK(find_registered("A5228")->name == "hofstadter");
        CHECK(find_registered("no-such-thing") == nullptr);
        CHECK(find_registered("A1") == nullptr);
    }

    TEST_CASE("budgets surface as BudgetExceeded") {
        CHECK_THROWS_AS(find_registered("A1231")->seq.terms(10), BudgetExceeded);
        CHECK_THROWS_AS(find_registered("pancake")->seq.terms(14), BudgetExceeded);
    }

    TEST_CASE("Catalan and tau oracles") {
        const auto c = find_registered("A108")->seq.terms(25);
        for (unsigned n = 0; n < 25; ++n) CHECK(c[n] == oracle::binom(2 * n, n) / (n + 1));
        CHECK(find_registered("A594")->seq.terms(25) == oracle::ramanujan_tau(25));
    }
}
