#pragma once

// The Sequence abstraction, array readers, elementary sequence transforms,
// Nim-addition and the Gilbreath difference array.

#include "seqlab/bignum.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace seqlab {

enum class Provenance { generated, stored, hybrid };

const char* to_string(Provenance p);

/// Produces the first `count` terms. Must be deterministic.
using Generator = std::function<std::vector<BigInt>(std::size_t count)>;

/// An identified integer sequence, generated on demand and memoized, or stored.
/// Memo extension is serialized by an internal mutex, so concurrent readers are safe.
class Sequence {
public:
    Sequence(std::string id, long offset, Generator gen);
    static Sequence stored(std::string id, long offset, std::vector<BigInt> terms);
    /// Generated for the first generated_limit terms, stored beyond. Generated
    /// terms must agree with the stored ones where both exist.
    static Sequence hybrid(std::string id, long offset, Generator gen, std::size_t generated_limit,
                           std::vector<BigInt> known);

    Sequence(const Sequence& other);
    Sequence& operator=(const Sequence& other);

    const std::string& id() const noexcept { return id_; }
    long offset() const noexcept { return offset_; }
    Provenance provenance() const noexcept { return provenance_; }

    /// The first count terms. For stored sequences, throws BudgetExceeded when
    /// count exceeds the number of known terms.
    std::vector<BigInt> terms(std::size_t count) const;
    /// Number of terms available: stored count (stored and hybrid) or SIZE_MAX.
    std::size_t known_terms() const noexcept;
    /// Number of terms produced by the generator: 0, a limit, or SIZE_MAX.
    std::size_t generated_terms() const noexcept;

private:
    Sequence() = default;

    std::string id_;
    long offset_ = 0;
    Provenance provenance_ = Provenance::generated;
    Generator gen_;
    std::size_t generated_limit_ = 0;
    std::vector<BigInt> known_;
    mutable std::mutex mutex_;
    mutable std::vector<BigInt> memo_;
};

/// Triangle whose row n has n + 1 entries.
struct NumberTriangle {
    std::function<std::vector<BigInt>(std::size_t row)> row;
};

struct NumberSquare {
    std::function<BigInt(std::size_t row, std::size_t col)> entry;
};

NumberTriangle pascal_triangle();
NumberSquare nim_square();

std::vector<BigInt> read_triangle_by_rows(const NumberTriangle& t, std::size_t count);

/// Reading order (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
std::vector<BigInt> read_square_by_antidiagonals(const NumberSquare& s, std::size_t count);
/// (row, col) of the index-th term in antidiagonal order.
std::pair<std::size_t, std::size_t> antidiagonal_position(std::size_t index);
std::size_t antidiagonal_index(std::size_t row, std::size_t col);

std::uint64_t nim_add(std::uint64_t a, std::uint64_t b);

/// Leading entries of rows 1..num_rows of the iterated absolute differences of
/// the first `width` primes. Requires width >= num_rows + 1.
std::vector<BigInt> gilbreath_row_leaders(std::size_t num_rows, std::size_t width);
/// The Gilbreath array (row 0 = primes) read by antidiagonals.
std::vector<BigInt> gilbreath_sequence(std::size_t count);

enum class TransformKind { differences, partial_sums, binomial, inverse_binomial, inverse_moebius };

const char* to_string(TransformKind k);

/// b_n = a_{n+1} - a_n
std::vector<BigInt> differences(const std::vector<BigInt>& a);
/// b_n = a_0 + ... + a_n
std::vector<BigInt> partial_sums(const std::vector<BigInt>& a);
/// b_n = sum C(n,k) a_k
std::vector<BigInt> binomial_transform(const std::vector<BigInt>& a);
/// b_n = sum (-1)^{n-k} C(n,k) a_k
std::vector<BigInt> inverse_binomial_transform(const std::vector<BigInt>& a);
/// 1-indexed: b_n = sum_{d | n} a_d
std::vector<BigInt> inverse_moebius_transform(const std::vector<BigInt>& a);
/// 1-indexed: b_n = sum_{d | n} mu(n/d) a_d
std::vector<BigInt> moebius_transform(const std::vector<BigInt>& a);

/// First count terms of the transform. The source needs count terms
/// (count + 1 for differences); throws InvalidArgument otherwise.
std::vector<BigInt> transform(const std::vector<BigInt>& a, TransformKind kind, std::size_t count);

}  // namespace seqlab
