#pragma once

// Slow, direct reference computations used to cross-check the library.
// Nothing here calls into seqlab beyond the BigInt type.

#include "seqlab/bignum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using seqlab::BigInt;
using seqlab::BigRational;

inline BigInt binom(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Sum of node depths over all n^{n-1} rooted labeled trees, divided by n.
// Trees come from Pruefer sequences.
inline BigInt tree_heights_W(unsigned n) {
    if (n == 1) return 0;
    std::vector<unsigned> code(n - 2, 0);
    std::uint64_t total = 0;
    while (true) {
        std::vector<unsigned> degree(n, 1);
        for (unsigned c : code) ++degree[c];
        std::vector<std::vector<unsigned>> adj(n);
        std::vector<unsigned> deg = degree;
        for (unsigned c : code) {
            unsigned leaf = 0;
            while (deg[leaf] != 1) ++leaf;
            adj[leaf].push_back(c);
            adj[c].push_back(leaf);
            --deg[leaf];
            --deg[c];
        }
        unsigned u = n, v = n;
        for (unsigned i = 0; i < n; ++i) {
            if (deg[i] == 1) (u == n ? u : v) = i;
        }
        adj[u].push_back(v);
        adj[v].push_back(u);
        for (unsigned root = 0; root < n; ++root) {
            std::vector<int> depth(n, -1);
            std::queue<unsigned> q;
            depth[root] = 0;
            q.push(root);
            while (!q.empty()) {
                unsigned x = q.front();
                q.pop();
                total += static_cast<std::uint64_t>(depth[x]);
                for (unsigned y : adj[x]) {
                    if (depth[y] < 0) {
                        depth[y] = depth[x] + 1;
                        q.push(y);
                    }
                }
            }
        }
        std::size_t i = 0;
        while (i < code.size() && ++code[i] == n) code[i++] = 0;
        if (i == code.size()) break;
    }
    return seqlab::from_u64(total / n);
}

// Permutations of 1..n with p1 > p2 < p3 > ... (E_n).
inline std::uint64_t alternating_permutations(unsigned n) {
    if (n <= 1) return 1;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (unsigned i = 0; i + 1 < n && ok; ++i) ok = (i % 2 == 0) ? p[i] > p[i + 1] : p[i] < p[i + 1];
        count += ok;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

// prod_{m>=1} (1 - q^m)^24 through q^order, via the pentagonal number theorem.
inline std::vector<BigInt> eta24(std::size_t order) {
    std::vector<BigInt> e(order + 1, 0);
    for (long k = -100; k <= 100; ++k) {
        const long g = k * (3 * k - 1) / 2;
        if (g >= 0 && static_cast<std::size_t>(g) <= order) e[g] += (k % 2 == 0) ? 1 : -1;
    }
    std::vector<BigInt> r(order + 1, 0);
    r[0] = 1;
    for (int t = 0; t < 24; ++t) {
        std::vector<BigInt> s(order + 1, 0);
        for (std::size_t i = 0; i <= order; ++i) {
            for (std::size_t j = 0; i + j <= order; ++j) s[i + j] += r[i] * e[j];
        }
        r = s;
    }
    return r;
}

struct DivisorSums {
    std::uint64_t sigma = 0, tau = 0, phi = 0, sigma3 = 0;
};

inline DivisorSums divisor_sums(std::uint64_t n) {
    DivisorSums d;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (n % k == 0) {
            d.sigma += k;
            d.sigma3 += k * k * k;
            ++d.tau;
        }
        if (std::gcd(k, n) == 1) ++d.phi;
    }
    return d;
}

// Weight distribution of the binary code spanned by the rows (bitmasks).
inline std::vector<std::uint64_t> weight_distribution(const std::vector<std::uint32_t>& rows, unsigned length) {
    std::vector<std::uint64_t> w(length + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << rows.size()); ++mask) {
        std::uint32_t word = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (mask >> i & 1) word ^= rows[i];
        }
        ++w[static_cast<unsigned>(__builtin_popcount(word))];
    }
    return w;
}

// Extended Hamming [8,4,4] code.
inline std::vector<std::uint32_t> hamming8() { return {0b11110000, 0b11001100, 0b10101010, 0b11111111}; }

// Extended Golay [24,12,8] code: identity | (J - A) for the icosahedron adjacency A.
inline std::vector<std::uint32_t> golay24() {
    const int edges[30][2] = {{0, 1}, {0, 2},  {0, 3},  {0, 4},  {0, 5},  {1, 2},   {2, 3},  {3, 4},
                              {4, 5}, {5, 1},  {1, 6},  {2, 6},  {2, 7},  {3, 7},   {3, 8},  {4, 8},
                              {4, 9}, {5, 9},  {5, 10}, {1, 10}, {6, 7},  {7, 8},   {8, 9},  {9, 10},
                              {10, 6}, {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11}};
    std::uint32_t adj[12] = {};
    for (auto& e : edges) {
        adj[e[0]] |= 1u << e[1];
        adj[e[1]] |= 1u << e[0];
    }
    std::vector<std::uint32_t> rows;
    for (int i = 0; i < 12; ++i) rows.push_back((1u << (12 + i)) | (~adj[i] & 0xFFFu));
    return rows;
}

// Coefficients of tan x and sec x as exact series, by division by cos x.
// Returns n! [x^n] for n < count.
inline std::vector<BigInt> tan_sec_numbers(std::size_t count, bool tangent) {
    std::vector<BigRational> c(count, 0), s(count, 0);
    for (std::size_t n = 0; n < count; ++n) {
        BigRational v(1);
        for (std::size_t k = 1; k <= n; ++k) v /= static_cast<long>(k);
        if (n % 2 == 0) c[n] = (n / 2 % 2 == 0) ? v : BigRational(-v);
        else s[n] = ((n - 1) / 2 % 2 == 0) ? v : BigRational(-v);
    }
    std::vector<BigRational> num = s;
    if (!tangent) {
        num.assign(count, 0);
        num[0] = 1;
    }
    std::vector<BigRational> q(count, 0);
    for (std::size_t n = 0; n < count; ++n) {
        BigRational r = num[n];
        for (std::size_t k = 1; k <= n; ++k) r -= c[k] * q[n - k];
        q[n] = r;
    }
    std::vector<BigInt> out;
    for (std::size_t n = 0; n < count; ++n) {
        BigRational v = q[n];
        for (std::size_t k = 1; k <= n; ++k) v *= static_cast<long>(k);
        out.push_back(v.get_num());
    }
    return out;
}

// Crossing order along the river is p; arcs alternate sides, both ends escape.
inline bool valid_meander_order(const std::vector<int>& p) {
    const std::size_t n = p.size();
    std::vector<std::pair<int, int>> arcs[2];
    for (std::size_t i = 0; i + 1 < n; ++i) arcs[i % 2].push_back(std::minmax(p[i], p[i + 1]));
    for (auto& side : arcs) {
        for (std::size_t i = 0; i < side.size(); ++i) {
            for (std::size_t j = i + 1; j < side.size(); ++j) {
                auto [a, b] = side[i];
                auto [c, d] = side[j];
                if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
            }
        }
    }
    auto enclosed = [&](int x, int s) {
        return std::any_of(arcs[s].begin(), arcs[s].end(), [&](auto ab) { return ab.first < x && x < ab.second; });
    };
    return !enclosed(p.front(), 1) && !enclosed(p.back(), n % 2 == 1 ? 0 : 1);
}

// M_n: crossing orders of n + 1 crossings that start at the leftmost one.
inline std::uint64_t open_meanders(unsigned n) {
    std::vector<int> p(n + 1);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t count = 0;
    do {
        count += valid_meander_order(p);
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return count;
}

// Stack order (bottom to top) of stamps 0..n-1 is a valid folding when the
// creases on each side of the stack do not interleave.
inline bool valid_folding(const std::vector<int>& stack) {
    const std::size_t n = stack.size();
    std::vector<int> pos(n);
    for (std::size_t h = 0; h < n; ++h) pos[stack[h]] = static_cast<int>(h);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 2; j + 1 < n; j += 2) {
            auto [a, b] = std::minmax(pos[i], pos[i + 1]);
            auto [c, d] = std::minmax(pos[j], pos[j + 1]);
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
        }
    }
    return true;
}

// Foldings of n blank stamps: orbits of labeled foldings under turning the
// stack over and reversing the strip, counted by canonical minimum.
inline std::uint64_t blank_stamp_foldings(unsigned n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    std::set<std::vector<int>> canon;
    do {
        if (!valid_folding(s)) continue;
        std::vector<int> flip(s.rbegin(), s.rend()), rev(n), both;
        for (unsigned h = 0; h < n; ++h) rev[h] = static_cast<int>(n) - 1 - s[h];
        both.assign(rev.rbegin(), rev.rend());
        canon.insert(std::min({s, flip, rev, both}));
    } while (std::next_permutation(s.begin(), s.end()));
    return canon.size();
}

inline std::uint64_t labeled_stamp_foldings(unsigned n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    std::uint64_t count = 0;
    do {
        count += valid_folding(s);
    } while (std::next_permutation(s.begin(), s.end()));
    return count;
}

// Reduced Latin squares by filling rows with permutations.
inline std::uint64_t reduced_latin(unsigned n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> rows{perms.front()};
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, unsigned r) -> void {
        if (r == n) {
            ++count;
            return;
        }
        for (const auto& q : perms) {
            if (q[0] != static_cast<int>(r)) continue;
            bool ok = true;
            for (const auto& prev : rows) {
                for (unsigned c = 0; c < n && ok; ++c) ok = prev[c] != q[c];
            }
            if (!ok) continue;
            rows.push_back(q);
            self(self, r + 1);
            rows.pop_back();
        }
    };
    rec(rec, 1);
    return count;
}

// Monotone Boolean functions of n <= 4 variables among all 2^(2^n) truth tables.
inline std::uint64_t monotone_functions(unsigned n) {
    const unsigned points = 1u << n;
    std::uint64_t count = 0;
    for (std::uint64_t f = 0; f < (1ull << points); ++f) {
        bool ok = true;
        for (unsigned x = 0; x < points && ok; ++x) {
            for (unsigned b = 0; b < n && ok; ++b) {
                if (!(x >> b & 1) && (f >> x & 1) && !(f >> (x | 1u << b) & 1)) ok = false;
            }
        }
        count += ok;
    }
    return count;
}

inline long long det_int(std::vector<std::vector<long long>> a) {
    const std::size_t n = a.size();
    long long prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

// Maximal determinant over all 2^(n^2) zero-one matrices.
inline long long maxdet01(unsigned n) {
    long long best = 0;
    for (std::uint64_t m = 0; m < (1ull << (n * n)); ++m) {
        std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
        for (unsigned i = 0; i < n * n; ++i) a[i / n][i % n] = m >> i & 1;
        best = std::max(best, det_int(a));
    }
    return best;
}

// Pancake diameter by BFS over permutations stored in a map.
inline unsigned pancake_diameter(unsigned n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, unsigned> dist{{id, 0}};
    std::queue<std::vector<int>> q;
    q.push(id);
    unsigned best = 0;
    while (!q.empty()) {
        auto p = q.front();
        q.pop();
        const unsigned d = dist[p];
        best = std::max(best, d);
        for (unsigned k = 2; k <= n; ++k) {
            auto r = p;
            std::reverse(r.begin(), r.begin() + k);
            if (dist.emplace(r, d + 1).second) q.push(r);
        }
    }
    return best;
}

// Boards of holes 1..: clear all stones by forward play, no memo.
inline bool tchouka_wins(std::vector<int> holes) {
    bool empty = true;
    for (int h : holes) empty = empty && h == 0;
    if (empty) return true;
    for (std::size_t i = 0; i < holes.size(); ++i) {
        if (holes[i] != static_cast<int>(i) + 1) continue;
        auto next = holes;
        next[i] = 0;
        for (std::size_t j = 0; j < i; ++j) ++next[j];
        if (tchouka_wins(next)) return true;
    }
    return false;
}

// Boards with n stones in holes 1..n that win.
inline std::vector<std::vector<int>> tchouka_winning_boards(unsigned n) {
    std::vector<std::vector<int>> out;
    std::vector<int> b(n, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == b.size()) {
            if (left == 0 && tchouka_wins(b)) out.push_back(b);
            return;
        }
        for (int v = 0; v <= std::min(left, static_cast<int>(i) + 1); ++v) {
            b[i] = v;
            self(self, i + 1, left - v);
        }
        b[i] = 0;
    };
    rec(rec, 0, static_cast<int>(n));
    return out;
}

// Primes below n by a plain sieve.
inline std::vector<std::uint64_t> primes_below(std::uint64_t n) {
    std::vector<bool> composite(n, false);
    std::vector<std::uint64_t> p;
    for (std::uint64_t i = 2; i < n; ++i) {
        if (composite[i]) continue;
        p.push_back(i);
        for (std::uint64_t j = i * i; j < n; j += i) composite[j] = true;
    }
    return p;
}

// Levine rows expanded literally; L_1 .. L_{rows + 2}, the last two as row sums.
inline std::vector<std::uint64_t> levine_literal(unsigned rows) {
    std::vector<std::uint64_t> row{1, 1}, L{1};
    std::uint64_t prev_sum = 0;
    for (unsigned r = 2; r <= rows; ++r) {
        prev_sum = std::accumulate(row.begin(), row.end(), std::uint64_t{0});
        std::vector<std::uint64_t> next;
        for (std::size_t k = row.size(); k-- > 0;) next.insert(next.end(), row[k], row.size() - k);
        row = std::move(next);
        L.push_back(row.back());
    }
    L.push_back(prev_sum);
    L.push_back(std::accumulate(row.begin(), row.end(), std::uint64_t{0}));
    return L;
}

// floor((n+1) phi) in long double; exact for small n.
inline std::uint64_t lower_wythoff(std::uint64_t n) {
    return static_cast<std::uint64_t>(std::floor(static_cast<long double>(n + 1) * (1 + std::sqrt(5.0L)) / 2));
}

inline std::uint64_t nim_sum(std::uint64_t a, std::uint64_t b) {
    // mex of {a' + b, a + b'} over smaller options
    static std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> memo;
    if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
    std::set<std::uint64_t> seen;
    for (std::uint64_t x = 0; x < a; ++x) seen.insert(nim_sum(x, b));
    for (std::uint64_t y = 0; y < b; ++y) seen.insert(nim_sum(a, y));
    std::uint64_t m = 0;
    while (seen.count(m)) ++m;
    return memo[{a, b}] = m;
}

// N = a^2 + ab + b^2 with a, b >= 0, by double loop.
inline bool loeschian(std::uint64_t n) {
    for (std::uint64_t a = 0; a * a <= n; ++a) {
        for (std::uint64_t b = 0; a * a + a * b + b * b <= n; ++b) {
            if (a * a + a * b + b * b == n) return true;
        }
    }
    return false;
}

// tau(n) from (E4^3 - E6^2) / 1728.
inline std::vector<BigInt> ramanujan_tau(std::size_t count) {
    std::vector<BigInt> e4(count + 1, 0), e6(count + 1, 0);
    e4[0] = e6[0] = 1;
    for (std::size_t n = 1; n <= count; ++n) {
        BigInt s3 = 0, s5 = 0;
        for (std::size_t d = 1; d <= n; ++d) {
            if (n % d) continue;
            BigInt D(static_cast<unsigned long>(d));
            s3 += D * D * D;
            s5 += D * D * D * D * D;
        }
        e4[n] = 240 * s3;
        e6[n] = -504 * s5;
    }
    auto mul = [&](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        std::vector<BigInt> c(count + 1, 0);
        for (std::size_t i = 0; i <= count; ++i) {
            for (std::size_t j = 0; i + j <= count; ++j) c[i + j] += a[i] * b[j];
        }
        return c;
    };
    const auto a = mul(mul(e4, e4), e4), b = mul(e6, e6);
    std::vector<BigInt> out;
    for (std::size_t n = 1; n <= count; ++n) out.push_back((a[n] - b[n]) / 1728);
    return out;
}

}  // namespace oracle
