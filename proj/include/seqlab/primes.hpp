#pragma once

#include "seqlab/bignum.hpp"

#include <cstdint>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace seqlab {

inline constexpr std::uint64_t kDefaultSieveCapacity = 100'000'000;

/// Segmented odd-only sieve of Eratosthenes that grows on demand up to a fixed
/// capacity. Primes are 1-indexed (p_1 = 2).
///
/// Queries take a shared lock and extension takes an exclusive one, so a single
/// sieve can be shared across threads.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint64_t capacity = kDefaultSieveCapacity);

    PrimeSieve(const PrimeSieve&) = delete;
    PrimeSieve& operator=(const PrimeSieve&) = delete;

    std::uint64_t capacity() const noexcept { return capacity_; }
    /// Largest integer whose primality is currently materialized.
    std::uint64_t limit() const;

    /// Sieves through n. Throws CapacityExceeded if n > capacity().
    void extend_to(std::uint64_t n);

    bool is_prime(std::uint64_t n);
    /// pi(x), the number of primes <= x.
    std::uint64_t prime_count(std::uint64_t x);
    /// The n-th prime. Throws CapacityExceeded when it lies beyond capacity().
    std::uint64_t nth_prime(std::uint64_t n);
    /// All primes <= x, ascending.
    std::vector<std::uint64_t> primes_up_to(std::uint64_t x);

private:
    void extend_locked(std::uint64_t n);
    std::uint64_t count_locked(std::uint64_t x) const;
    bool test_locked(std::uint64_t n) const;

    std::uint64_t capacity_;
    std::uint64_t limit_ = 0;
    // bit i of word w <-> odd number 2*(64w+i)+1
    std::vector<std::uint64_t> bits_;
    // number of odd primes in words [0, w)
    std::vector<std::uint64_t> count_before_;
    mutable std::shared_mutex mutex_;
};

/// Process-wide sieve; capacity from SEQLAB_SIEVE_LIMIT when set, else the default.
PrimeSieve& default_sieve();

std::uint64_t nth_prime(std::uint64_t n);
std::uint64_t prime_count(std::uint64_t x);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Sorted prime factorization; empty for n = 1. Requires n >= 1.
Factorization factorize(std::uint64_t n);
/// Same, rejecting inputs of 2^64 or more with InvalidArgument.
Factorization factorize(const BigInt& n);

struct ArithFunctions {
    BigInt sigma;            // sum of divisors
    std::uint64_t tau = 0;   // number of divisors
    BigInt phi;              // Euler totient
    BigInt sigma3;           // sum of cubes of divisors
};

ArithFunctions arith_functions(std::uint64_t n);

/// sigma, d, phi for every 1 <= n <= limit from one linear sieve; index 0 unused.
struct ArithTable {
    std::vector<std::uint64_t> sigma;
    std::vector<std::uint64_t> tau;
    std::vector<std::uint64_t> phi;
};

ArithTable arith_table(std::uint64_t limit);

}  // namespace seqlab
