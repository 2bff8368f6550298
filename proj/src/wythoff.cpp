#include "seqlab/wythoff.hpp"

#include "seqlab/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace seqlab {

namespace {

// F_0..F_93 fit in 64 bits.
const std::vector<std::uint64_t>& fib64() {
    static const std::vector<std::uint64_t> f = [] {
        std::vector<std::uint64_t> v{0, 1};
        while (v.size() < 94) v.push_back(v[v.size() - 1] + v[v.size() - 2]);
        return v;
    }();
    return f;
}

std::vector<unsigned> zeckendorf64(std::uint64_t n) {
    const auto& f = fib64();
    std::vector<unsigned> idx;
    unsigned i = 93;
    while (n > 0) {
        while (f[i] > n) --i;
        idx.push_back(i);
        n -= f[i];
        i -= 2;
    }
    return idx;
}

std::uint64_t upper_wythoff(std::uint64_t m) { return to_u64(floor_times_phi(from_u64(m))) + m; }

}  // namespace

BigInt fibonacci(unsigned k) {
    BigInt f;
    mpz_fib_ui(f.get_mpz_t(), k);
    return f;
}

std::vector<unsigned> zeckendorf(const BigInt& n) {
    if (n < 1) throw InvalidArgument("zeckendorf needs n >= 1");
    if (fits_u64(n)) return zeckendorf64(to_u64(n));
    unsigned i = 2;
    while (fibonacci(i + 1) <= n) ++i;
    std::vector<unsigned> idx;
    BigInt rest = n;
    while (rest > 0) {
        BigInt fi = fibonacci(i);
        while (fi > rest) fi = fibonacci(--i);
        idx.push_back(i);
        rest -= fi;
        i -= 2;
    }
    return idx;
}

BigInt fib_successor(const BigInt& n) {
    if (n == 0) return 0;
    BigInt s = 0;
    for (unsigned i : zeckendorf(n)) s += fibonacci(i + 1);
    return s;
}

BigInt fib_predecessor(const BigInt& n) {
    BigInt s = 0;
    if (n == 0) return s;
    for (unsigned i : zeckendorf(n)) {
        if (i <= 2) throw InvalidArgument("fib_predecessor: expansion contains F_2");
        s += fibonacci(i - 1);
    }
    return s;
}

BigInt floor_times_phi(const BigInt& x) {
    if (x < 0) throw InvalidArgument("floor_times_phi needs x >= 0");
    BigInt r = sqrt(BigInt(5 * x * x));
    return (x + r) / 2;
}

BigInt wythoff_entry(const BigInt& n, unsigned k) {
    if (n < 0) throw InvalidArgument("wythoff row must be nonnegative");
    return floor_times_phi(n + 1) * fibonacci(k + 2) + fibonacci(k + 1) * n;
}

std::vector<BigInt> lower_wythoff(std::size_t count) {
    std::vector<BigInt> out;
    for (std::size_t n = 0; n < count; ++n) out.push_back(floor_times_phi(from_u64(n + 1)));
    return out;
}

std::vector<BigInt> fib_successors(std::size_t count) {
    std::vector<BigInt> out;
    for (std::size_t n = 1; n <= count; ++n) out.push_back(fib_successor(from_u64(n)));
    return out;
}

std::vector<BigInt> non_successors(std::size_t count) {
    std::vector<BigInt> out;
    std::set<std::uint64_t> succ;
    std::uint64_t next_n = 1, next_succ = 0;
    for (std::uint64_t v = 1; out.size() < count; ++v) {
        // successors are increasing and S n >= n + 1, so S 1..v cover everything <= v
        while (next_n <= v) {
            next_succ = to_u64(fib_successor(from_u64(next_n++)));
            succ.insert(next_succ);
        }
        if (!succ.count(v)) out.push_back(from_u64(v));
        succ.erase(succ.begin(), succ.lower_bound(v));
    }
    return out;
}

WythoffWindow wythoff_window(std::size_t R, std::size_t K, int construction) {
    WythoffWindow w;
    w.rows.assign(R + 1, std::vector<BigInt>(K + 1));
    w.index_column.resize(R + 1);
    w.lower_column.resize(R + 1);
    switch (construction) {
        case 1:
            for (std::size_t n = 0; n <= R; ++n) {
                BigInt a = from_u64(n), b = floor_times_phi(from_u64(n + 1));
                w.index_column[n] = a;
                w.lower_column[n] = b;
                for (std::size_t k = 0; k <= K; ++k) {
                    BigInt c = a + b;
                    w.rows[n][k] = c;
                    a = b;
                    b = c;
                }
            }
            return w;
        case 2:
            for (std::size_t n = 0; n <= R; ++n) {
                BigInt bn = from_u64(n), sn = fib_successor(bn);
                w.index_column[n] = bn;
                w.lower_column[n] = 1 + sn;
                BigInt m = bn + 1 + sn;
                for (std::size_t k = 0; k <= K; ++k) {
                    w.rows[n][k] = m;
                    m = fib_successor(m);
                }
            }
            return w;
        case 3: {
            std::vector<BigInt> first = non_successors(R + 1);
            for (std::size_t n = 0; n <= R; ++n) {
                BigInt m = first[n];
                for (std::size_t k = 0; k <= K; ++k) {
                    w.rows[n][k] = m;
                    m = fib_successor(m);
                }
                // run the Fibonacci rule backwards for the pre-line columns
                BigInt c1 = K >= 1 ? w.rows[n][1] : fib_successor(first[n]);
                w.lower_column[n] = c1 - first[n];
                w.index_column[n] = first[n] - w.lower_column[n];
            }
            return w;
        }
        case 4:
            for (std::size_t n = 0; n <= R; ++n) {
                BigInt bn = from_u64(n);
                for (std::size_t k = 0; k <= K; ++k) w.rows[n][k] = wythoff_entry(bn, static_cast<unsigned>(k));
                BigInt c1 = K >= 1 ? w.rows[n][1] : wythoff_entry(bn, 1);
                w.lower_column[n] = c1 - w.rows[n][0];
                w.index_column[n] = w.rows[n][0] - w.lower_column[n];
            }
            return w;
        default:
            throw InvalidArgument("construction must be 1, 2, 3 or 4");
    }
}

std::pair<std::uint64_t, unsigned> wythoff_position(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("wythoff_position needs n >= 1");
    std::vector<unsigned> z = zeckendorf64(n);
    const unsigned col = z.back() - 2;
    const auto& f = fib64();
    std::uint64_t c0 = 0;
    for (unsigned i : z) c0 += f[i - col];
    // column 0 of row r is floor((r+1) tau^2) - 1
    const std::uint64_t target = c0 + 1;
    auto m = static_cast<std::uint64_t>(static_cast<long double>(target) / 2.6180339887498948482L);
    while (upper_wythoff(m) < target) ++m;
    while (m > 1 && upper_wythoff(m - 1) >= target) --m;
    if (m == 0 || upper_wythoff(m) != target) {
        throw ConstructionFailure("wythoff_position: no row starts at " + std::to_string(c0));
    }
    return {m - 1, col};
}

std::vector<BigInt> para_fibonacci_vertical(std::size_t count) {
    std::vector<BigInt> out;
    for (std::uint64_t n = 1; n <= count; ++n) out.push_back(from_u64(wythoff_position(n).first));
    return out;
}

std::vector<BigInt> para_fibonacci_horizontal(std::size_t count) {
    std::vector<BigInt> out;
    for (std::uint64_t n = 1; n <= count; ++n) out.push_back(from_u64(wythoff_position(n).second + 1));
    return out;
}

std::vector<BigInt> delete_first_occurrences(const std::vector<BigInt>& a) {
    std::set<BigInt> seen;
    std::vector<BigInt> out;
    for (const auto& v : a) {
        if (seen.insert(v).second) continue;
        out.push_back(v);
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> para_fibonacci_blocks(std::size_t count_blocks) {
    std::vector<std::vector<std::uint64_t>> blocks;
    for (std::uint64_t n = 1;; ++n) {
        std::uint64_t r = wythoff_position(n).first;
        if (r == 0) {
            if (blocks.size() == count_blocks) break;
            blocks.emplace_back();
        }
        blocks.back().push_back(r);
    }
    return blocks;
}

bool rows_alternate(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return true;
    const BigInt limit = std::min(a.back(), b.back());
    std::vector<std::pair<BigInt, int>> merged;
    auto start = std::lower_bound(a.begin(), a.end(), b.front());
    if (start != a.begin()) --start;
    for (auto it = start; it != a.end() && *it <= limit; ++it) merged.emplace_back(*it, 0);
    for (const auto& v : b) {
        if (v <= limit) merged.emplace_back(v, 1);
    }
    std::sort(merged.begin(), merged.end());
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        if (merged[i].second == merged[i + 1].second) return false;
    }
    return true;
}

std::optional<FibonacciTypeMatch> locate_fibonacci_type(std::uint64_t a, std::uint64_t b, std::size_t max_steps) {
    const std::uint64_t cap = std::uint64_t{1} << 62;
    for (std::size_t step = 0; step < max_steps; ++step) {
        if (a >= 1 && b >= 1) {
            auto pa = wythoff_position(a), pb = wythoff_position(b);
            if (pa.first == pb.first && pb.second == pa.second + 1) return FibonacciTypeMatch{pa.first, pa.second, step};
        }
        if (b > cap) break;
        std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    return std::nullopt;
}

}  // namespace seqlab
