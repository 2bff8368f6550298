#pragma once

// A small sequence table: stripped-format ingestion, contiguous-run lookup,
// transform-chain search, and a few identification helpers.
//
// Stripped format: one sequence per line, "<ID> <t1>,<t2>,...,<tk>", with
// optional '#' comment lines and blank lines.

#include "seqlab/bignum.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqlab {

/// $SEQLAB_DB if set, otherwise the database shipped with the library.
std::string default_database_path();

/// "A435", "a000435" and "435" all become "A000435". Throws InvalidArgument.
std::string normalize_id(std::string_view id);

struct DbEntry {
    std::string id;
    std::vector<BigInt> terms;
};

struct LookupMatch {
    std::string id;
    std::size_t position = 0;  // index of the first matched term in the entry
    bool exact = false;        // the query is the entire stored list
};

struct LookupResult {
    std::vector<LookupMatch> matches;
    bool low_confidence = false;  // fewer than three query terms
};

class SeqDatabase {
public:
    /// Throws ParseError on a malformed line or a repeated id.
    static SeqDatabase load(const std::string& path);
    static SeqDatabase parse(std::istream& in);

    /// Throws InvalidArgument if the id is already present.
    void add(std::string id, std::vector<BigInt> terms);

    const DbEntry* find(std::string_view id) const;
    const std::vector<DbEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// Entries containing the query as a contiguous run: exact matches first,
    /// then by position, then by id.
    LookupResult lookup(const std::vector<BigInt>& query) const;

    /// Term -> (entry, position) postings; exposed for idempotence checks.
    const std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>>& index() const noexcept {
        return index_;
    }

    void write(std::ostream& out) const;

private:
    std::vector<DbEntry> entries_;
    std::map<std::string, std::size_t> by_id_;
    std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> index_;
};

enum class SeekStep {
    differences,
    partial_sums,
    partial_sums_from_one,  // prepend 1, then partial sums
    binomial,
    inverse_binomial,
    inverse_moebius,
    boustrophedon,
    negate,
    times_two,
    times_three,
    half,   // only when every term is even
    third,  // only when every term is divisible by 3
    shift,  // drop the first term
};

const char* to_string(SeekStep s);
const std::vector<SeekStep>& seek_steps();

/// Applies the chain left to right; empty if a step is undefined for the input.
std::vector<BigInt> apply_chain(const std::vector<BigInt>& terms, const std::vector<SeekStep>& chain);

struct SuperseekerResult {
    std::string id;
    std::vector<SeekStep> chain;  // applied to the query
    std::size_t offset = 0;       // where the transformed query starts in the entry
};

/// Tries the query and every chain of at most two steps, in a fixed order.
/// Transformed queries shorter than three terms or constant are skipped, as are
/// chains that undo themselves or end in a shift.
std::vector<SuperseekerResult> superseek(const SeqDatabase& db, const std::vector<BigInt>& query);

/// a(n) = sum_k C(2n-2k, n-k)^2 C(2k, k)^2, checked against the three-term
/// recurrence at every n >= 2. Throws ConstructionFailure on a mismatch.
std::vector<BigInt> squared_binomial_sum(std::size_t count);
/// The same numbers from 2n^3 a(n) = 16(2n-1)(2n^2-2n+1) a(n-1) - 512(n-1)^3 a(n-2).
std::vector<BigInt> squared_binomial_sum_by_recurrence(std::size_t count);

/// sigma(n) - d(n) - phi(n) for n = 1..count. Throws ConstructionFailure if a
/// term with n >= 2 is negative.
std::vector<BigInt> inequality_gap(std::size_t count);

/// c <= limit in whose factorization every prime = 2 or 3 (mod 5) has even exponent.
std::vector<std::uint64_t> mod5_square_indices(std::uint64_t limit);

/// N = a^2 + ab + b^2 for some a, b >= 0, by direct search.
bool loeschian_test(std::uint64_t n);
/// The same question answered from the factorization: primes = 2 (mod 3) occur evenly.
bool loeschian_by_factors(std::uint64_t n);

}  // namespace seqlab
