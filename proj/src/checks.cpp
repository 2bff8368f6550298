#include "seqlab/checks.hpp"

#include "seqlab/boustrophedon.hpp"
#include "seqlab/error.hpp"
#include "seqlab/extremal.hpp"
#include "seqlab/hard_enum.hpp"
#include "seqlab/levine.hpp"
#include "seqlab/primes.hpp"
#include "seqlab/recursive.hpp"
#include "seqlab/registry.hpp"
#include "seqlab/seqdb.hpp"
#include "seqlab/sequence.hpp"
#include "seqlab/series.hpp"
#include "seqlab/tchouka.hpp"
#include "seqlab/wythoff.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

namespace seqlab {

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

CheckSuite suite(std::string name, bool extended, std::function<Outcome()> body) {
    return CheckSuite{name, extended, [name, body] {
                          Outcome o = body();
                          return CheckResult{name, o.passed, o.detail, 0};
                      }};
}

template <class T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

Outcome tree_heights() {
    const double r = tree_height_asymptotic_ratio(50);
    return {std::abs(r - 1) <= 0.10, "W_50 / n^n * sqrt(n / 2pi) = " + str(r) + " (want 1 +- 0.10)"};
}

Outcome conway() {
    const std::uint64_t last = conway_threshold(1000000);
    return {last == 1489, "last n <= 10^6 with |a(n)/n - 1/2| > 1/20: " + str(last)};
}

Outcome primeth() {
    const auto w = wilson_primeth(12);
    return {w.back() == 9737333, "12th term " + w.back().get_str()};
}

Outcome primeth_extended() {
    PrimeSieve sieve(200000000);
    const auto w = wilson_primeth(13, sieve);
    return {w.back() == 174440041, "13th term " + w.back().get_str()};
}

Outcome levine() {
    for (std::size_t n = 1; n <= kLevineRows; ++n) {
        IdentityReport r = verify_identities(n);
        if (!r.all_hold()) return {false, "an identity fails at row " + str(n)};
    }
    const auto terms = levine_terms(13);
    if (!levine_upper_bound_holds(terms)) return {false, "L_{n+2} <= L_{n+1} L_n fails"};
    if (!levine_lower_bound_holds(terms)) return {false, "ratio lower bound fails"};
    const GrowthFit fit = growth_estimate(std::vector<BigInt>(terms.begin() + 4, terms.end()), 5);
    const bool ok = fit.c2 >= 0.050 && fit.c2 <= 0.058;
    return {ok, "identities hold on rows 1.." + str(kLevineRows) + "; fit c1 = " + str(fit.c1) + ", c2 = " + str(fit.c2)};
}

Outcome levine_extended() {
    const auto terms = levine_terms(15);
    return {terms[13] == parse_bigint("266437144916648607844") &&
                terms[14] == parse_bigint("508009471379488821444261986503540"),
            "L_15 = " + terms[14].get_str()};
}

Outcome wythoff() {
    const WythoffWindow w1 = wythoff_window(50, 30, 1);
    for (int c = 2; c <= 4; ++c) {
        if (!(wythoff_window(50, 30, c) == w1)) return {false, "construction " + str(c) + " disagrees with 1"};
    }
    std::set<std::pair<std::uint64_t, unsigned>> seen;
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        auto [row, col] = wythoff_position(n);
        if (wythoff_entry(from_u64(row), col) != from_u64(n)) return {false, str(n) + " misplaced"};
        if (!seen.insert({row, col}).second) return {false, "cell reused at " + str(n)};
    }
    const auto v = para_fibonacci_vertical(10000);
    const auto d = delete_first_occurrences(v);
    if (!std::equal(d.begin(), d.end(), v.begin())) return {false, "deleting first occurrences changes the sequence"};
    return {true, "constructions 1-4 agree on 51x31; 1..10^4 each placed once; fixed point over 10^4 terms"};
}

Outcome boustrophedon() {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long> dist(-50, 50);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<BigInt> a(20);
        for (auto& v : a) v = dist(rng);
        if (boustrophedon_transform(a) != boustrophedon_transform_convolution(a)) {
            return {false, "paths disagree on trial " + str(trial)};
        }
    }
    const auto all = entringer_numbers(31);
    const std::vector<BigInt> e(all.begin() + 1, all.end());
    const auto be = boustrophedon_transform(e);
    if (!std::equal(be.begin(), be.end() - 1, e.begin() + 1)) return {false, "E_1, E_2, ... does not shift"};
    const auto a = eigen_shift_solver(2, 30);
    const auto ba = boustrophedon_transform(a);
    if (!std::equal(ba.begin(), ba.end() - 2, a.begin() + 2)) return {false, "shift-two sequence does not shift"};
    return {true, "triangle = convolution on 200 random inputs; eigen-sequences shift"};
}

Outcome extremal() {
    for (unsigned m = 1; m <= kExtremalDefaultMaxM; ++m) {
        if (extremal_leading_coeffs(m).lead != leading_coeff_closed_form(m)) return {false, "closed form fails at m = " + str(m)};
    }
    for (unsigned n = 8; n <= 24 * kExtremalDefaultMaxM; n += 8) extremal_weight_enumerator(n);
    return {true, "closed form holds for m <= 8; enumerators integral for n <= 192"};
}

Outcome extremal_extended() {
    std::vector<unsigned> ms;
    for (unsigned m = 1; m <= 160; ++m) ms.push_back(m);
    auto n = find_negative_next_coeff(ms);
    return {n && *n == 3696, n ? "first negative next coefficient at n = " + str(*n) : "none found"};
}

Outcome theta() {
    const QSeries f = e8_theta(10);
    const QSeries g = leech_theta(10);
    bool ok = f[1] == 240 && f[2] == 2160 && f[3] == 6720 && g[1] == 0 && g[2] == 196560 && g[3] == 16773120 &&
              g[4] == 398034000;
    for (unsigned m = 1; m <= 5; ++m) {
        const QSeries t = extremal_theta(24 * m, m + 1);
        for (unsigned j = 1; j <= m; ++j) ok = ok && t[j] == 0;
        ok = ok && t[m + 1] > 0;
    }
    return {ok, "E8 and Leech coefficients; extremal theta vanishes through q^{2m} for n = 24m <= 120"};
}

Outcome meanders() {
    const MeanderGrowthReport r = meander_growth_check(16);
    std::size_t sub = 0, super = 0;
    for (const auto& p : r.pairs) {
        sub += p.submultiplicative;
        super += p.supermultiplicative;
    }
    const bool ok = r.all_bracketed() && super == r.pairs.size();
    return {ok, "C_n <= M_2n <= C_n^2 for 2n <= 16; supermultiplicative on " + str(super) + "/" + str(r.pairs.size()) +
                    " pairs, submultiplicative on " + str(sub)};
}

Outcome tchoukaillon(unsigned uniq) {
    const std::size_t K = 300;
    const auto game = t_by_first_occurrence(K);
    const auto sieve = t_by_sieve(K);
    for (std::size_t k = 1; k <= K; ++k) {
        if (game[k - 1] != t_by_rounding(k) || sieve[k - 1] != game[k - 1]) return {false, "constructions differ at " + str(k)};
    }
    const auto wp = winning_positions(uniq);
    for (unsigned n = 0; n <= uniq; ++n) {
        const auto boards = all_winning_boards(n);
        if (boards.size() != 1 || boards[0] != wp[n].holes) return {false, "winning position not unique at n = " + str(n)};
    }
    const double r = pi_asymptotic_check(10000);
    return {std::abs(r - 1) <= 0.01, "three constructions agree for n <= 300; unique for n <= " + str(uniq) +
                                         "; t(10^4) pi / 10^8 = " + str(r)};
}

Outcome gilbreath() {
    const std::size_t primes = prime_count(1000000);
    const auto lead = gilbreath_row_leaders(primes - 1, primes);
    for (std::size_t k = 1; k < lead.size(); ++k) {
        if (lead[k] != 1) return {false, "row " + str(k) + " starts with " + lead[k].get_str()};
    }
    return {true, "rows 1.." + str(lead.size() - 1) + " start with 1"};
}

Outcome database() {
    const SeqDatabase db = registry_database();
    for (const auto& e : db.entries()) {
        std::vector<BigInt> q(e.terms.begin(), e.terms.begin() + std::min<std::ptrdiff_t>(10, e.terms.size()));
        bool found = false;
        for (const auto& m : db.lookup(q).matches) found = found || m.id == e.id;
        if (!found) return {false, e.id + " does not find itself"};
    }
    const auto a = squared_binomial_sum(40);
    if (a != squared_binomial_sum_by_recurrence(40)) return {false, "squared binomial sum: paths differ"};
    inequality_gap(1000000);
    bool chain = false;
    for (const auto& r : superseek(db, to_bigints({2, 4, 5, 6, 8, 9, 10, 11, 13}))) {
        chain = chain || (r.id == "A005228" && r.chain == std::vector<SeekStep>{SeekStep::partial_sums_from_one});
    }
    if (!chain) return {false, "superseek misses the partial-sums chain"};
    return {true, str(db.size()) + " entries find themselves; dual paths agree; sigma gap nonnegative to 10^6"};
}

Outcome shipped_database() {
    const std::string path = default_database_path();
    const SeqDatabase shipped = SeqDatabase::load(path);
    for (const auto& e : registry()) {
        const DbEntry* d = shipped.find(e.seq.id());
        if (!d) return {false, e.seq.id() + " missing from " + path};
        if (d->terms != e.seq.terms(d->terms.size())) return {false, e.seq.id() + " differs from " + path};
    }
    return {true, path + " agrees with every generator"};
}

Outcome hard_extended() {
    bool ok = pancake_f(10, 10) == 11 && latin_squares_reduced(7, 7) == parse_bigint("16942080") &&
              dedekind_variant(5, 6) == 7579 && dedekind_variant(6, 6) == 7828352 && hadamard_maxdet01(6, 7) == 9 &&
              hadamard_maxdet01(7, 7) == 32;
    return {ok, "pancake 10, Latin 7, Dedekind 5-6, Hadamard 6-7"};
}

}  // namespace

const std::vector<CheckSuite>& check_suites() {
    static const std::vector<CheckSuite> s{
        suite("tree-heights", false, tree_heights),
        suite("conway", false, conway),
        suite("primeth", false, primeth),
        suite("levine", false, levine),
        suite("wythoff", false, wythoff),
        suite("boustrophedon", false, boustrophedon),
        suite("extremal-codes", false, extremal),
        suite("extremal-lattices", false, theta),
        suite("meanders", false, meanders),
        suite("tchoukaillon", false, [] { return tchoukaillon(10); }),
        suite("gilbreath", false, gilbreath),
        suite("database", false, database),
        suite("shipped-database", false, shipped_database),
        suite("primeth-extended", true, primeth_extended),
        suite("levine-extended", true, levine_extended),
        suite("tchoukaillon-extended", true, [] { return tchoukaillon(12); }),
        suite("hard-extended", true, hard_extended),
        suite("extremal-negativity", true, extremal_extended),
    };
    return s;
}

std::vector<CheckResult> run_checks(bool extended, const std::function<void(const CheckResult&)>& on_result) {
    std::vector<CheckResult> out;
    for (const auto& s : check_suites()) {
        if (s.extended && !extended) continue;
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = s.run();
        } catch (const std::exception& e) {
            r = CheckResult{s.name, false, std::string("error: ") + e.what(), 0};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace seqlab
