#include "seqlab/registry.hpp"

#include "seqlab/boustrophedon.hpp"
#include "seqlab/error.hpp"
#include "seqlab/extremal.hpp"
#include "seqlab/levine.hpp"
#include "seqlab/recursive.hpp"
#include "seqlab/series.hpp"
#include "seqlab/tchouka.hpp"
#include "seqlab/wythoff.hpp"

#include <algorithm>
#include <limits>

namespace seqlab {

namespace {

// Terms f(first), f(first+1), ... as a generator.
template <class F>
Generator indexed(unsigned first, F f) {
    return [first, f](std::size_t count) {
        std::vector<BigInt> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) out.push_back(BigInt(f(first + static_cast<unsigned>(i))));
        return out;
    };
}

template <class Int>
std::vector<BigInt> widen(const std::vector<Int>& v) {
    return to_bigints(v);
}

std::vector<BigInt> series_prefix(const QSeries& s, std::size_t count) {
    return std::vector<BigInt>(s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(count));
}

RegistryEntry generated(std::string id, std::string name, std::string description, long offset, Generator gen,
                        std::size_t db_terms) {
    return RegistryEntry{std::move(name), std::move(description), Sequence(std::move(id), offset, std::move(gen)),
                         db_terms};
}

RegistryEntry stored(std::string id, std::string name, std::string description, long offset,
                     std::initializer_list<const char*> terms) {
    std::vector<BigInt> t;
    for (const char* s : terms) t.push_back(parse_bigint(s));
    const std::size_t n = t.size();
    return RegistryEntry{std::move(name), std::move(description), Sequence::stored(std::move(id), offset, std::move(t)),
                         n};
}

RegistryEntry hybrid(std::string id, std::string name, std::string description, long offset, Generator gen,
                     std::size_t limit, std::initializer_list<const char*> terms) {
    std::vector<BigInt> t;
    for (const char* s : terms) t.push_back(parse_bigint(s));
    const std::size_t n = std::max(t.size(), limit);
    return RegistryEntry{std::move(name), std::move(description),
                         Sequence::hybrid(std::move(id), offset, std::move(gen), limit, std::move(t)), n};
}

}  // namespace

std::vector<RegistryEntry> make_registry(const RegistryBudget& budget) {
    const HardEnumBudget hb = budget.hard;
    std::vector<RegistryEntry> r;

    // trees and section-two lookups
    r.push_back(generated("A000435", "tree-heights", "sum of node heights over rooted labeled trees, divided by n", 1,
                          indexed(1, [](unsigned n) { return tree_height_sum_W(n); }), 15));
    r.push_back(generated("A001405", "central-binomial", "C(n, floor(n/2))", 0,
                          indexed(0, [](unsigned n) { return binomial(n, n / 2); }), 25));
    r.push_back(generated("A031363", "mod5-squares",
                          "c whose primes = 2, 3 (mod 5) occur to even powers", 1,
                          [](std::size_t count) {
                              std::uint64_t limit = 64;
                              std::vector<std::uint64_t> v;
                              while ((v = mod5_square_indices(limit)).size() < count) limit *= 2;
                              v.resize(count);
                              return widen(v);
                          },
                          30));
    r.push_back(generated("A036917", "squared-binomial-sum", "sum_k C(2n-2k,n-k)^2 C(2k,k)^2", 0,
                          squared_binomial_sum, 20));
    r.push_back(generated("A046520", "sigma-gap", "sigma(n) - d(n) - phi(n)", 1, inequality_gap, 40));

    // hard sequences
    r.push_back(hybrid("A000315", "latin-squares", "reduced Latin squares of order n", 1,
                       indexed(1, [hb](unsigned n) { return latin_squares_reduced(n, hb.latin); }), hb.latin,
                       {"1", "1", "1", "4", "56", "9408", "16942080", "535281401856", "377597570964258816",
                        "7580721483160132811489280"}));
    r.push_back(stored("A001231", "projective-planes", "projective planes of order n", 2,
                       {"1", "1", "1", "1", "0", "1", "1", "4", "0"}));
    r.push_back(stored("A001676", "sphere-structures", "differential structures on the n-sphere", 1,
                       {"1", "1", "1", "1", "1", "1", "28", "2", "8", "6", "992", "1", "3", "2", "16256", "2"}));
    r.push_back(hybrid("A007153", "dedekind", "monotone Boolean functions of n variables, constants excluded", 1,
                       indexed(1, [hb](unsigned n) { return dedekind_variant(n, hb.dedekind); }), hb.dedekind,
                       {"1", "4", "18", "166", "7579", "7828352", "2414682040996", "56130437228687557907786"}));
    r.push_back(hybrid("A003432", "hadamard", "maximal determinant of an n x n 0-1 matrix", 1,
                       indexed(1, [hb](unsigned n) { return hadamard_maxdet01(n, hb.hadamard); }), hb.hadamard,
                       {"1", "1", "2", "3", "5", "9", "32", "56", "144", "320", "1458", "3645", "9477"}));
    r.push_back(stored("A007299", "hadamard-matrices", "inequivalent Hadamard matrices", 0,
                       {"1", "1", "1", "5", "3", "60", "487"}));
    r.push_back(stored("A001116", "kissing-numbers", "largest known kissing numbers", 1,
                       {"2", "6", "12", "24", "40", "72", "126", "240", "272"}));
    r.push_back(hybrid("A058986", "pancake", "prefix reversals needed to sort n pancakes in the worst case", 1,
                       indexed(1, [hb](unsigned n) { return BigInt(pancake_f(n, hb.pancake)); }), hb.pancake,
                       {"0", "1", "3", "4", "5", "7", "8", "9", "10", "11", "13", "14", "15"}));

    // recursive sequences
    r.push_back(generated("A005228", "hofstadter", "differences are the missing numbers", 1,
                          [](std::size_t count) { return hofstadter_complement(count).seq; }, 40));
    r.push_back(generated("A030124", "hofstadter-complement", "numbers missing from the Hofstadter sequence", 1,
                          [](std::size_t count) { return hofstadter_complement(count + 1).diffs; }, 40));
    r.push_back(generated("A001462", "golomb", "a(n) counts the occurrences of n", 1, golomb, 40));
    r.push_back(hybrid("A007097", "primeth", "each term is the previous-term-th prime", 0,
                       [](std::size_t count) { return wilson_primeth(count); }, budget.wilson_terms,
                       {"1", "2", "3", "5", "11", "31", "127", "709", "5381", "52711", "648391", "9737333",
                        "174440041", "3657500101", "88362852307", "2428095424619", "75063692618249",
                        "2586559730396077"}));
    r.push_back(generated("A005132", "recaman", "subtract n if new and positive, else add n", 1,
                          recaman_subtract_first, 40));
    r.push_back(generated("A008336", "recaman-divide", "divide by n if possible, else multiply", 1, recaman_divide,
                          20));
    r.push_back(generated("A004001", "conway", "a(n) = a(a(n-1)) + a(n-a(n-1))", 1, conway_10000, 40));
    r.push_back(generated("A005229", "conway-variant", "a(n) = a(a(n-2)) + a(n-a(n-2))", 1, conway_variant_A5229,
                          40));
    r.push_back(generated("A028354", "prague-clock", "strokes of the Prague clock grouped by hour", 1, prague_clock,
                          29));

    // meanders and stamps
    r.push_back(generated("A005316", "meanders", "ways a river crosses a road n times", 1,
                          [hb](std::size_t count) {
                              std::vector<BigInt> out;
                              for (unsigned n = 1; n <= count; ++n) out.push_back(meander_count(n, hb.meander));
                              return out;
                          },
                          hb.meander));
    r.push_back(generated("A005315", "closed-meanders", "closed curves crossing a line 2n times", 1,
                          [hb](std::size_t count) {
                              std::vector<BigInt> out;
                              for (unsigned k = 1; k <= count; ++k) out.push_back(closed_meander_count(k, hb.meander / 2));
                              return out;
                          },
                          hb.meander / 2));
    r.push_back(generated("A001011", "stamps", "ways to fold a strip of n blank stamps", 1,
                          [hb](std::size_t count) {
                              std::vector<BigInt> out;
                              for (unsigned n = 1; n <= count; ++n) out.push_back(stamp_foldings(n, hb.stamp));
                              return out;
                          },
                          std::min<std::size_t>(hb.stamp, 12)));
    r.push_back(generated("A000108", "catalan", "Catalan numbers", 0, indexed(0, [](unsigned n) { return catalan(n); }),
                          25));

    // codes and lattices
    r.push_back(generated("A018236", "extremal-72", "extremal weight enumerator of length 72, weights 0, 4, 8, ...", 0,
                          [](std::size_t count) {
                              std::vector<BigInt> out;
                              if (count == 0) return out;
                              for (const auto& c : extremal_enumerator_prefix(72, static_cast<unsigned>(count - 1))) {
                                  out.push_back(to_integer(c));
                              }
                              return out;
                          },
                          12));
    r.push_back(generated("A034414", "extremal-lead", "minimal-weight codewords in the extremal enumerator of length 24m",
                          0,
                          indexed(0, [](unsigned m) { return m == 0 ? BigInt(1) : extremal_leading_coeffs(m).lead; }),
                          kExtremalDefaultMaxM + 1));
    r.push_back(generated("A034415", "extremal-next",
                          "next-to-minimal-weight codewords in the extremal enumerator of length 24m", 0,
                          indexed(0, [](unsigned m) { return m == 0 ? BigInt(1) : extremal_leading_coeffs(m).next; }),
                          kExtremalDefaultMaxM + 1));
    r.push_back(generated("A004009", "e8-theta", "theta series of E8 in powers of q^2", 0,
                          [](std::size_t count) { return series_prefix(e8_theta(count), count); }, 25));
    r.push_back(generated("A008408", "leech-theta", "theta series of the Leech lattice in powers of q^2", 0,
                          [](std::size_t count) { return series_prefix(leech_theta(count), count); }, 20));
    r.push_back(generated("A000594", "ramanujan-tau", "Ramanujan tau function", 1, ramanujan_tau, 25));
    r.push_back(generated("A034597", "extremal-theta", "minimal vectors in the extremal theta series of dimension 24m", 0,
                          indexed(0,
                                  [](unsigned m) {
                                      if (m == 0) return BigInt(1);
                                      return extremal_theta(24 * m, m + 1)[m + 1];
                                  }),
                          8));

    // Levine
    r.push_back(hybrid("A011784", "levine", "Levine's run-length array, last entry of each row", 1,
                       [](std::size_t count) { return levine_terms(count); }, budget.levine_terms,
                       {"1", "2", "2", "3", "4", "7", "14", "42", "213", "2837", "175450", "139759600",
                        "6837625106787", "266437144916648607844", "508009471379488821444261986503540"}));

    // arrays
    r.push_back(generated("A007318", "pascal", "Pascal's triangle by rows", 0,
                          [](std::size_t count) { return read_triangle_by_rows(pascal_triangle(), count); }, 45));
    r.push_back(generated("A003987", "nim-sum", "Nim-addition table by antidiagonals", 0,
                          [](std::size_t count) { return read_square_by_antidiagonals(nim_square(), count); }, 45));
    r.push_back(generated("A036262", "gilbreath", "Gilbreath's array of prime differences by antidiagonals", 1,
                          gilbreath_sequence, 45));

    // Wythoff
    r.push_back(generated("A035513", "wythoff", "Wythoff array by antidiagonals", 1,
                          [](std::size_t count) {
                              NumberSquare s{[](std::size_t i, std::size_t j) {
                                  return wythoff_entry(from_u64(j), static_cast<unsigned>(i));
                              }};
                              return read_square_by_antidiagonals(s, count);
                          },
                          45));
    r.push_back(generated("A000201", "lower-wythoff", "floor(n tau)", 1, lower_wythoff, 40));
    r.push_back(generated("A022342", "fibonacci-successors", "Fibonacci successors of 1, 2, 3, ...", 1, fib_successors,
                          40));
    r.push_back(generated("A007067", "non-successors", "numbers that are not Fibonacci successors", 1, non_successors,
                          40));
    r.push_back(generated("A019586", "para-fibonacci-vertical", "row of the Wythoff array containing n", 1,
                          para_fibonacci_vertical, 40));
    r.push_back(generated("A035612", "para-fibonacci-horizontal", "column of the Wythoff array containing n", 1,
                          para_fibonacci_horizontal, 40));

    // boustrophedon
    r.push_back(generated("A000364", "secant", "Euler (secant) numbers", 0,
                          [](std::size_t count) { return secant_tangent_numbers(count).sec; }, 15));
    r.push_back(generated("A000182", "tangent", "tangent numbers", 1,
                          [](std::size_t count) { return secant_tangent_numbers(count).tan; }, 15));
    r.push_back(generated("A000111", "entringer", "Euler zigzag numbers", 0, entringer_numbers, 25));
    r.push_back(generated("A000667", "boustrophedon-ones", "boustrophedon transform of 1, 1, 1, ...", 0,
                          [](std::size_t count) { return boustrophedon_transform(std::vector<BigInt>(count, 1)); },
                          25));
    r.push_back(generated("A000661", "boustrophedon-shift-two",
                          "shifts two places left under the boustrophedon transform", 0,
                          [](std::size_t count) { return eigen_shift_solver(2, count); }, 25));
    r.push_back(generated("A003238", "moebius-shift", "shifts one place left under the inverse Moebius transform", 1,
                          moebius_shift_sequence, 40));

    // Tchoukaillon
    r.push_back(generated("A028932", "tchoukaillon", "winning Tchoukaillon positions, holes m..1 as digits", 0,
                          winning_position_numbers, 20));
    r.push_back(generated("A028920", "tchoukaillon-steps", "hole chosen at each step of the winning-position rule", 1,
                          [](std::size_t count) { return widen(i_sequence(count)); }, 40));
    r.push_back(generated("A002491", "tchoukaillon-t", "first step choosing hole n", 1,
                          indexed(1, [](unsigned n) { return from_u64(t_by_rounding(n)); }), 40));

    return r;
}

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> r = make_registry();
    return r;
}

const RegistryEntry* find_registered(std::string_view key) {
    for (const auto& e : registry()) {
        if (e.name == key) return &e;
    }
    std::string id;
    try {
        id = normalize_id(key);
    } catch (const InvalidArgument&) {
        return nullptr;
    }
    for (const auto& e : registry()) {
        if (e.seq.id() == id) return &e;
    }
    return nullptr;
}

SeqDatabase registry_database() {
    SeqDatabase db;
    for (const auto& e : registry()) db.add(e.seq.id(), e.seq.terms(e.db_terms));
    return db;
}

}  // namespace seqlab
