#include "seqlab/hard_enum.hpp"

#include "seqlab/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <string>

namespace seqlab {

namespace {

void check_range(const char* what, unsigned n, unsigned lo, unsigned max_n) {
    if (n < lo) throw InvalidArgument(std::string(what) + ": n must be at least " + std::to_string(lo));
    if (n > max_n) {
        throw BudgetExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds the budget of " +
                             std::to_string(max_n));
    }
}

// ---- pancakes ---------------------------------------------------------------

using Packed = std::uint64_t;  // nibble i holds the element at position i

std::uint64_t lehmer_rank(Packed p, unsigned n) {
    std::uint64_t rank = 0;
    unsigned used = 0;
    for (unsigned i = 0; i < n; ++i) {
        unsigned d = (p >> (4 * i)) & 0xf;
        unsigned smaller_unused = d - static_cast<unsigned>(std::popcount(used & ((1u << d) - 1)));
        rank = rank * (n - i) + smaller_unused;
        used |= 1u << d;
    }
    return rank;
}

Packed flip(Packed p, unsigned k) {
    Packed out = p;
    for (unsigned i = 0; i < k; ++i) {
        Packed nib = (p >> (4 * (k - 1 - i))) & 0xf;
        out = (out & ~(Packed{0xf} << (4 * i))) | (nib << (4 * i));
    }
    return out;
}

// ---- noncrossing matchings --------------------------------------------------

// All noncrossing perfect matchings of `pts` (sorted), as partner maps indexed by point label.
void matchings_rec(const std::vector<unsigned>& pts, std::size_t lo, std::size_t hi, std::vector<int>& partner,
                   const std::function<void()>& done, std::vector<std::pair<std::size_t, std::size_t>>& stack) {
    while (lo >= hi) {
        if (stack.empty()) {
            done();
            return;
        }
        auto [l, h] = stack.back();
        stack.pop_back();
        matchings_rec(pts, l, h, partner, done, stack);
        stack.emplace_back(l, h);
        return;
    }
    for (std::size_t j = lo + 1; j < hi; j += 2) {
        partner[pts[lo]] = static_cast<int>(pts[j]);
        partner[pts[j]] = static_cast<int>(pts[lo]);
        // inside (lo, j) then outside (j, hi)
        stack.emplace_back(j + 1, hi);
        matchings_rec(pts, lo + 1, j, partner, done, stack);
        stack.pop_back();
    }
}

std::vector<std::vector<int>> noncrossing_matchings(const std::vector<unsigned>& pts, unsigned labels) {
    std::vector<std::vector<int>> out;
    if (pts.size() % 2 != 0) return out;
    std::vector<int> partner(labels, -1);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    matchings_rec(pts, 0, pts.size(), partner, [&] { out.push_back(partner); }, stack);
    return out;
}

// ---- Hadamard branch and bound ----------------------------------------------

struct MaxDetSearch {
    unsigned n;
    unsigned N;  // n + 1
    double scale;  // 2^n
    long long cap;
    long long best = 0;
    std::vector<std::vector<double>> basis;  // orthonormal
    std::vector<unsigned> rows;
    std::vector<double> rest_bound;  // rest_bound[k] = N^{k/2}

    long long exact_det() const {
        // integer Bareiss on the chosen 0/1 rows; entries stay small for n <= 8
        std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = 0; j < n; ++j) a[i][j] = (rows[i] >> j) & 1u;
        }
        long long prev = 1;
        int sign = 1;
        for (unsigned k = 0; k < n; ++k) {
            unsigned p = k;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            if (p != k) {
                std::swap(a[p], a[k]);
                sign = -sign;
            }
            for (unsigned i = k + 1; i < n; ++i) {
                for (unsigned j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
                a[i][k] = 0;
            }
            prev = a[k][k];
        }
        return sign * a[n - 1][n - 1];
    }

    void dfs(unsigned depth, unsigned start, double prod) {
        if (best >= cap) return;
        if (depth == n) {
            long long d = exact_det();
            if (d < 0) d = -d;
            if (d > best) best = d;
            return;
        }
        std::vector<double> v(N);
        for (unsigned mask = start; mask < (1u << n); ++mask) {
            v[0] = 1.0;
            for (unsigned j = 0; j < n; ++j) v[j + 1] = (mask >> j) & 1u ? -1.0 : 1.0;
            for (const auto& q : basis) {
                double dot = 0;
                for (unsigned t = 0; t < N; ++t) dot += v[t] * q[t];
                for (unsigned t = 0; t < N; ++t) v[t] -= dot * q[t];
            }
            double g = 0;
            for (unsigned t = 0; t < N; ++t) g += v[t] * v[t];
            g = std::sqrt(g);
            if (g < 1e-6) continue;
            const double bound = prod * g * rest_bound[n - depth - 1] / scale;
            if (bound < static_cast<double>(best + 1) * (1 - 1e-9)) continue;
            for (unsigned t = 0; t < N; ++t) v[t] /= g;
            basis.push_back(v);
            rows.push_back(mask);
            dfs(depth + 1, mask + 1, prod * g);
            rows.pop_back();
            basis.pop_back();
            if (best >= cap) return;
        }
    }
};

// ---- stamps -----------------------------------------------------------------

bool crease_ok(const std::vector<unsigned>& pos, unsigned k) {
    // crease k joins stamps k and k+1 (0-based stamps); same-side creases have equal parity
    unsigned a = std::min(pos[k], pos[k + 1]), b = std::max(pos[k], pos[k + 1]);
    for (unsigned j = k % 2; j < k; j += 2) {
        unsigned c = std::min(pos[j], pos[j + 1]), d = std::max(pos[j], pos[j + 1]);
        bool interleave = (a < c && c < b && b < d) || (c < a && a < d && d < b);
        if (interleave) return false;
    }
    return true;
}

void stamps_rec(std::vector<std::uint8_t>& stack, unsigned n, std::vector<std::vector<std::uint8_t>>* out,
                std::uint64_t& count) {
    const unsigned k = static_cast<unsigned>(stack.size());
    if (k == n) {
        ++count;
        if (out) out->push_back(stack);
        return;
    }
    for (unsigned q = 0; q <= k; ++q) {
        stack.insert(stack.begin() + q, static_cast<std::uint8_t>(k));
        std::vector<unsigned> pos(k + 1);
        for (unsigned i = 0; i <= k; ++i) pos[stack[i]] = i;
        if (crease_ok(pos, k - 1)) stamps_rec(stack, n, out, count);
        stack.erase(stack.begin() + q);
    }
}

}  // namespace

unsigned pancake_f(unsigned n, unsigned max_n) {
    check_range("pancake_f", n, 1, max_n);
    if (n > 15) throw BudgetExceeded("pancake_f supports at most 15 pancakes");
    std::uint64_t total = 1;
    for (unsigned i = 2; i <= n; ++i) total *= i;
    std::vector<std::uint8_t> dist(total, 0xff);
    Packed id = 0;
    for (unsigned i = 0; i < n; ++i) id |= Packed{i} << (4 * i);
    std::vector<Packed> frontier{id}, next;
    dist[lehmer_rank(id, n)] = 0;
    unsigned depth = 0;
    while (true) {
        next.clear();
        for (Packed p : frontier) {
            for (unsigned k = 2; k <= n; ++k) {
                Packed q = flip(p, k);
                std::uint64_t r = lehmer_rank(q, n);
                if (dist[r] == 0xff) {
                    dist[r] = static_cast<std::uint8_t>(depth + 1);
                    next.push_back(q);
                }
            }
        }
        if (next.empty()) return depth;
        ++depth;
        std::swap(frontier, next);
    }
}

BigInt latin_squares_reduced(unsigned n, unsigned max_n) {
    check_range("latin_squares_reduced", n, 1, max_n);
    if (n <= 2) return 1;
    std::vector<unsigned> rowmask(n, 0), colmask(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        rowmask[0] |= 1u << i;
        colmask[i] |= 1u << i;  // row 0 holds i in column i
        rowmask[i] |= 1u << i;  // column 0 holds i in row i
        colmask[0] |= 1u << i;
    }
    const unsigned full = (1u << n) - 1;
    std::uint64_t count = 0;
    std::function<void(unsigned)> fill = [&](unsigned cell) {
        const unsigned r = 1 + cell / (n - 1), c = 1 + cell % (n - 1);
        if (r == n) {
            ++count;
            return;
        }
        unsigned avail = full & ~rowmask[r] & ~colmask[c];
        while (avail) {
            unsigned bit = avail & (~avail + 1);
            avail ^= bit;
            rowmask[r] |= bit;
            colmask[c] |= bit;
            fill(cell + 1);
            rowmask[r] ^= bit;
            colmask[c] ^= bit;
        }
    };
    fill(0);
    return from_u64(count);
}

BigInt monotone_boolean_functions(unsigned n, unsigned max_n) {
    check_range("monotone_boolean_functions", n, 0, max_n);
    if (n > 6) throw BudgetExceeded("monotone Boolean functions are enumerated for n <= 6 only");
    // truth tables of monotone functions of k variables, as 2^k-bit words
    std::vector<std::uint64_t> mon{0, 1};
    for (unsigned k = 1; k < n; ++k) {
        std::vector<std::uint64_t> next;
        const unsigned half = 1u << (k - 1);
        for (auto a : mon) {
            for (auto b : mon) {
                if ((a & ~b) == 0) next.push_back(a | (b << half));
            }
        }
        mon = std::move(next);
    }
    if (n == 0) return 2;
    std::uint64_t count = 0;
    for (auto a : mon) {
        for (auto b : mon) count += (a & ~b) == 0;
    }
    return from_u64(count);
}

BigInt dedekind_variant(unsigned n, unsigned max_n) {
    check_range("dedekind_variant", n, 1, max_n);
    return monotone_boolean_functions(n, max_n) - 2;
}

BigInt hadamard_bound(unsigned n) {
    if (n % 4 != 3) throw InvalidArgument("hadamard_bound needs n = 3 (mod 4)");
    BigInt num = pow(BigInt(n + 1), (n + 1) / 2);
    BigInt den = pow(BigInt(2), n);
    if (num % den != 0) throw ConstructionFailure("hadamard bound is not integral");
    return num / den;
}

BigInt hadamard_maxdet01(unsigned n, unsigned max_n) {
    check_range("hadamard_maxdet01", n, 1, max_n);
    if (n > 8) throw BudgetExceeded("hadamard_maxdet01 supports n <= 8 only");
    MaxDetSearch s;
    s.n = n;
    s.N = n + 1;
    s.scale = std::ldexp(1.0, static_cast<int>(n));
    s.cap = static_cast<long long>(std::floor(std::pow(s.N, s.N / 2.0) / s.scale + 1e-9));
    s.rest_bound.resize(n + 1);
    for (unsigned k = 0; k <= n; ++k) s.rest_bound[k] = std::pow(static_cast<double>(s.N), k / 2.0);
    s.basis.push_back(std::vector<double>(s.N, 1.0 / std::sqrt(static_cast<double>(s.N))));
    s.dfs(0, 1, std::sqrt(static_cast<double>(s.N)));
    return BigInt(static_cast<long>(s.best));
}

BigInt meander_count(unsigned n, unsigned max_n) {
    check_range("meander_count", n, 1, max_n);
    std::vector<unsigned> lower, upper;
    for (unsigned p = 0; p <= n; ++p) lower.push_back(p);
    for (unsigned p = 1; p <= n; ++p) upper.push_back(p);
    (n % 2 == 0 ? lower : upper).push_back(n + 1);
    const auto lows = noncrossing_matchings(lower, n + 2);
    const auto ups = noncrossing_matchings(upper, n + 2);
    std::uint64_t count = 0;
    for (const auto& lo : lows) {
        for (const auto& up : ups) {
            // walk from the south-west end; a single curve visits every crossing
            unsigned cur = 0, seen = 0;
            bool below = true;
            while (true) {
                cur = static_cast<unsigned>(below ? lo[cur] : up[cur]);
                if (cur == n + 1) break;
                ++seen;
                below = !below;
            }
            count += seen == n;
        }
    }
    return from_u64(count);
}

BigInt closed_meander_count(unsigned k, unsigned max_k) {
    check_range("closed_meander_count", k, 1, max_k);
    std::vector<unsigned> pts;
    for (unsigned p = 0; p < 2 * k; ++p) pts.push_back(p);
    const auto ms = noncrossing_matchings(pts, 2 * k);
    std::uint64_t count = 0;
    for (const auto& lo : ms) {
        for (const auto& up : ms) {
            unsigned cur = 0, len = 0;
            bool below = true;
            do {
                cur = static_cast<unsigned>(below ? lo[cur] : up[cur]);
                below = !below;
                ++len;
            } while (cur != 0 || !below);
            count += len == 2 * k;
        }
    }
    return from_u64(count);
}

std::vector<std::vector<std::uint8_t>> stamp_folding_stacks(unsigned n, unsigned max_n) {
    check_range("stamp_folding_stacks", n, 1, max_n);
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> stack{0};
    std::uint64_t count = 0;
    stamps_rec(stack, n, &out, count);
    return out;
}

BigInt labeled_stamp_foldings(unsigned n, unsigned max_n) {
    check_range("labeled_stamp_foldings", n, 1, max_n);
    std::vector<std::uint8_t> stack{0};
    std::uint64_t count = 0;
    stamps_rec(stack, n, nullptr, count);
    return from_u64(count);
}

BigInt stamp_foldings(unsigned n, unsigned max_n) {
    check_range("stamp_foldings", n, 1, max_n);
    // Burnside over {id, turn the stack over, reverse the strip, both}
    std::uint64_t total = 0, fix_turn = 0, fix_rev = 0, fix_both = 0;
    std::vector<std::uint8_t> stack{0};
    std::vector<std::vector<std::uint8_t>> all;
    std::uint64_t count = 0;
    stamps_rec(stack, n, &all, count);
    for (const auto& s : all) {
        ++total;
        std::vector<std::uint8_t> turned(s.rbegin(), s.rend());
        std::vector<std::uint8_t> reversed(s), both(turned);
        for (auto& v : reversed) v = static_cast<std::uint8_t>(n - 1 - v);
        for (auto& v : both) v = static_cast<std::uint8_t>(n - 1 - v);
        fix_turn += turned == s;
        fix_rev += reversed == s;
        fix_both += both == s;
    }
    const std::uint64_t sum = total + fix_turn + fix_rev + fix_both;
    if (sum % 4 != 0) throw ConstructionFailure("stamp folding orbit count is not integral");
    return from_u64(sum / 4);
}

BigInt catalan(unsigned n) { return binomial(2 * n, n) / (n + 1); }

bool MeanderGrowthReport::all_bracketed() const {
    return std::all_of(rows.begin(), rows.end(), [](const MeanderGrowthRow& r) { return r.catalan_bracket; });
}

MeanderGrowthReport meander_growth_check(unsigned max_n) {
    MeanderGrowthReport rep;
    std::vector<BigInt> m2{BigInt(1)};  // index 0 unused
    for (unsigned n = 1; 2 * n <= max_n; ++n) {
        MeanderGrowthRow row;
        row.n = n;
        row.m2n = meander_count(2 * n, std::max(max_n, 2 * n));
        row.root = std::exp(log(row.m2n) / n);
        BigInt c = catalan(n);
        row.catalan_bracket = c <= row.m2n && row.m2n <= c * c;
        m2.push_back(row.m2n);
        rep.rows.push_back(row);
    }
    for (unsigned a = 1; a < m2.size(); ++a) {
        for (unsigned b = a; a + b < m2.size(); ++b) {
            MeanderPairCheck p;
            p.a = a;
            p.b = b;
            p.submultiplicative = m2[a + b] <= m2[a] * m2[b];
            p.supermultiplicative = m2[a + b] >= m2[a] * m2[b];
            rep.pairs.push_back(p);
        }
    }
    return rep;
}

}  // namespace seqlab
