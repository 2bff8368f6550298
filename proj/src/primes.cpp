#include "seqlab/primes.hpp"

#include "seqlab/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

namespace seqlab {

namespace {

constexpr std::size_t kSegmentWords = 1u << 15;  // 2^21 odd numbers per segment

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline void clear_bit(std::vector<std::uint64_t>& bits, std::uint64_t idx) {
    bits[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
}

inline bool get_bit(const std::vector<std::uint64_t>& bits, std::uint64_t idx) {
    return (bits[idx >> 6] >> (idx & 63)) & 1u;
}

// k-th (0-based) set bit of w
unsigned select_bit(std::uint64_t w, unsigned k) {
    for (unsigned i = 0; i < k; ++i) w &= w - 1;
    return static_cast<unsigned>(std::countr_zero(w));
}

}  // namespace

PrimeSieve::PrimeSieve(std::uint64_t capacity) : capacity_(capacity) {
    if (capacity_ < 2) throw InvalidArgument("sieve capacity must be at least 2");
}

std::uint64_t PrimeSieve::limit() const {
    std::shared_lock lock(mutex_);
    return limit_;
}

void PrimeSieve::extend_to(std::uint64_t n) {
    if (n > capacity_) {
        throw CapacityExceeded("sieve capacity " + std::to_string(capacity_) + " is below " + std::to_string(n));
    }
    std::unique_lock lock(mutex_);
    extend_locked(n);
}

void PrimeSieve::extend_locked(std::uint64_t n) {
    if (n <= limit_) return;
    const std::uint64_t old_words = bits_.size();
    const std::uint64_t new_words = (n / 2) / 64 + 1;
    const std::uint64_t new_limit = 128 * new_words - 1;
    const std::uint64_t root = isqrt(new_limit);

    if (old_words == 0) {
        // First fill: plain odd-only Eratosthenes over the whole range.
        bits_.assign(new_words, ~std::uint64_t{0});
        clear_bit(bits_, 0);  // 1 is not prime
        for (std::uint64_t i = 1;; ++i) {
            std::uint64_t p = 2 * i + 1;
            if (p > root) break;
            if (!get_bit(bits_, i)) continue;
            for (std::uint64_t j = (p * p - 1) / 2; j < new_words * 64; j += p) clear_bit(bits_, j);
        }
    } else {
        if (root > limit_) extend_locked(root);
        const std::uint64_t base_words = bits_.size();
        bits_.resize(new_words, ~std::uint64_t{0});
        // base primes were materialized before the resize; only their bits are read
        std::vector<std::uint64_t> base;
        for (std::uint64_t i = 1; i < base_words * 64; ++i) {
            std::uint64_t p = 2 * i + 1;
            if (p > root) break;
            if (get_bit(bits_, i)) base.push_back(p);
        }
        for (std::uint64_t w0 = std::max(old_words, base_words); w0 < new_words; w0 += kSegmentWords) {
            const std::uint64_t w1 = std::min<std::uint64_t>(w0 + kSegmentWords, new_words);
            const std::uint64_t lo_idx = w0 * 64, hi_idx = w1 * 64;  // odd-number indices [lo, hi)
            const std::uint64_t hi_num = 2 * (hi_idx - 1) + 1;
            for (std::uint64_t p : base) {
                if (p * p > hi_num) break;
                std::uint64_t lo_num = 2 * lo_idx + 1;
                std::uint64_t m = std::max(p * p, ((lo_num + p - 1) / p) * p);
                if (m % 2 == 0) m += p;
                for (std::uint64_t j = (m - 1) / 2; j < hi_idx; j += p) clear_bit(bits_, j);
            }
        }
        // Segments were sieved only from max(old, base) on; words between old_words and
        // base_words were already produced by the recursive call.
    }
    count_before_.resize(new_words + 1);
    std::uint64_t start = old_words == 0 ? 0 : std::min<std::uint64_t>(old_words, count_before_.size() - 1);
    if (start == 0) count_before_[0] = 0;
    for (std::uint64_t w = start; w < new_words; ++w) {
        count_before_[w + 1] = count_before_[w] + static_cast<std::uint64_t>(std::popcount(bits_[w]));
    }
    limit_ = new_limit;
}

bool PrimeSieve::test_locked(std::uint64_t n) const {
    if (n < 2) return false;
    if (n == 2) return true;
    if (n % 2 == 0) return false;
    return get_bit(bits_, (n - 1) / 2);
}

std::uint64_t PrimeSieve::count_locked(std::uint64_t x) const {
    if (x < 2) return 0;
    const std::uint64_t idx = (x - 1) / 2;
    const std::uint64_t w = idx >> 6;
    const unsigned b = static_cast<unsigned>(idx & 63);
    const std::uint64_t mask = b == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (b + 1)) - 1);
    return 1 + count_before_[w] + static_cast<std::uint64_t>(std::popcount(bits_[w] & mask));
}

bool PrimeSieve::is_prime(std::uint64_t n) {
    extend_to(n);
    std::shared_lock lock(mutex_);
    return test_locked(n);
}

std::uint64_t PrimeSieve::prime_count(std::uint64_t x) {
    extend_to(std::max<std::uint64_t>(x, 2));
    std::shared_lock lock(mutex_);
    return count_locked(x);
}

std::uint64_t PrimeSieve::nth_prime(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("nth_prime: primes are 1-indexed");
    if (n == 1) return 2;
    {
        std::unique_lock lock(mutex_);
        while (limit_ < 3 || count_locked(limit_) < n) {
            if (limit_ >= capacity_) {
                throw CapacityExceeded("prime number " + std::to_string(n) + " lies beyond sieve capacity " +
                                       std::to_string(capacity_));
            }
            // Rosser's bound p_n < n(ln n + ln ln n) for n >= 6
            double ln = std::log(static_cast<double>(std::max<std::uint64_t>(n, 6)));
            auto estimate = static_cast<std::uint64_t>(static_cast<double>(n) * (ln + std::log(ln))) + 16;
            std::uint64_t target = std::min(capacity_, std::max(estimate, 2 * limit_ + 128));
            extend_locked(target);
        }
    }
    std::shared_lock lock(mutex_);
    const std::uint64_t odd_rank = n - 1;  // among odd primes, 1-based
    auto it = std::lower_bound(count_before_.begin(), count_before_.end(), odd_rank);
    // count_before_[w] < odd_rank <= count_before_[w+1]
    std::uint64_t w = static_cast<std::uint64_t>(it - count_before_.begin()) - 1;
    unsigned k = static_cast<unsigned>(odd_rank - count_before_[w] - 1);
    std::uint64_t idx = w * 64 + select_bit(bits_[w], k);
    const std::uint64_t p = 2 * idx + 1;
    if (p > capacity_) {
        throw CapacityExceeded("prime number " + std::to_string(n) + " lies beyond sieve capacity " +
                               std::to_string(capacity_));
    }
    return p;
}

std::vector<std::uint64_t> PrimeSieve::primes_up_to(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    if (x < 2) return out;
    extend_to(x);
    std::shared_lock lock(mutex_);
    out.reserve(count_locked(x));
    out.push_back(2);
    for (std::uint64_t w = 0; w < bits_.size(); ++w) {
        std::uint64_t word = bits_[w];
        while (word) {
            std::uint64_t p = 2 * (w * 64 + static_cast<std::uint64_t>(std::countr_zero(word))) + 1;
            if (p > x) return out;
            out.push_back(p);
            word &= word - 1;
        }
    }
    return out;
}

PrimeSieve& default_sieve() {
    static PrimeSieve sieve([] {
        if (const char* env = std::getenv("SEQLAB_SIEVE_LIMIT")) {
            try {
                return to_u64(parse_bigint(env));
            } catch (const Error&) {
                throw InvalidArgument(std::string("SEQLAB_SIEVE_LIMIT is not a nonnegative integer: ") + env);
            }
        }
        return kDefaultSieveCapacity;
    }());
    return sieve;
}

std::uint64_t nth_prime(std::uint64_t n) { return default_sieve().nth_prime(n); }
std::uint64_t prime_count(std::uint64_t x) { return default_sieve().prime_count(x); }

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Brent's cycle-finding variant of Pollard rho. The constants are fixed, so the
// split found for a given n is always the same.
std::uint64_t find_factor(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
        const std::uint64_t m = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = find_factor(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("factorize: n must be positive");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    split(n, primes);
    std::sort(primes.begin(), primes.end());
    Factorization out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().first == p) {
            ++out.back().second;
        } else {
            out.emplace_back(p, 1u);
        }
    }
    return out;
}

Factorization factorize(const BigInt& n) {
    if (sgn(n) <= 0) throw InvalidArgument("factorize: n must be positive");
    if (!fits_u64(n)) throw InvalidArgument("factorize: inputs of 2^64 or more are not supported");
    return factorize(to_u64(n));
}

ArithFunctions arith_functions(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("arith_functions: n must be positive");
    ArithFunctions f{1, 1, 1, 1};
    for (auto [p, e] : factorize(n)) {
        BigInt bp = from_u64(p);
        BigInt pe = pow(bp, e);
        f.sigma *= (pe * bp - 1) / (bp - 1);
        f.tau *= e + 1;
        f.phi *= (pe / bp) * (bp - 1);
        BigInt p3 = bp * bp * bp;
        f.sigma3 *= (pow(p3, e + 1) - 1) / (p3 - 1);
    }
    return f;
}

ArithTable arith_table(std::uint64_t limit) {
    ArithTable t;
    t.sigma.assign(limit + 1, 0);
    t.tau.assign(limit + 1, 0);
    t.phi.assign(limit + 1, 0);
    if (limit == 0) return t;
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf[i]) continue;
        for (std::uint64_t j = i; j <= limit; j += i) {
            if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    t.sigma[1] = t.tau[1] = t.phi[1] = 1;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        std::uint64_t p = spf[n], m = n, pe = 1;
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            pe *= p;
            ++e;
        }
        t.sigma[n] = t.sigma[m] * ((pe * p - 1) / (p - 1));
        t.tau[n] = t.tau[m] * (e + 1);
        t.phi[n] = t.phi[m] * (pe / p) * (p - 1);
    }
    return t;
}

}  // namespace seqlab
