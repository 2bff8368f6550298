#pragma once

// Levine's array: row 1 is [1, 1]; if a row reads a_1 ... a_k, the next row has
// a_k 1's, a_{k-1} 2's, .... L_n is the last entry of row n.

#include "seqlab/bignum.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace seqlab {

/// A row stored as runs. Run j (0-based) has value j + 1, so only multiplicities
/// are kept; the row is nondecreasing and starts at 1.
class RunLengthRow {
public:
    RunLengthRow(std::size_t index, std::vector<std::uint64_t> multiplicities);

    /// Row 1, i.e. [1, 1].
    static RunLengthRow first();

    std::size_t index() const noexcept { return index_; }
    std::size_t run_count() const noexcept { return mult_.size(); }
    std::uint64_t value(std::size_t run) const { return run + 1; }
    std::uint64_t multiplicity(std::size_t run) const { return mult_.at(run); }
    const std::vector<std::uint64_t>& multiplicities() const noexcept { return mult_; }

    BigInt length() const;
    BigInt sum() const;
    std::uint64_t last() const { return mult_.size(); }
    /// The expanded row; throws BudgetExceeded above max_len entries.
    std::vector<std::uint64_t> expand(std::uint64_t max_len = 10'000'000) const;

    /// sum_{i=1}^{length} s(i), s(i) the i-th prefix sum.
    BigInt prefix_sum_total() const;
    /// sum_{i=1}^{length} C(s(i) + 1, 2).
    BigInt prefix_triangle_total() const;
    /// s(i) for 0 <= i <= length.
    BigInt prefix_sum(const BigInt& i) const;

private:
    std::size_t index_;
    std::vector<std::uint64_t> mult_;
};

/// Default cap on the number of runs of a materialized row.
inline constexpr std::uint64_t kLevineMaxRuns = 10'000'000;

/// Builds the next row directly from the runs of r.
RunLengthRow next_row(const RunLengthRow& r, std::uint64_t max_runs = kLevineMaxRuns);

/// Rows 1..count.
std::vector<RunLengthRow> levine_rows(std::size_t count, std::uint64_t max_runs = kLevineMaxRuns);

/// Number of rows that fit under the run cap (11 for the default).
inline constexpr std::size_t kLevineRows = 11;
/// Largest index reachable from the materialized rows via the prefix-sum identities.
inline constexpr std::size_t kLevineMaxIndex = 15;

/// L_1..L_max_index. Throws BudgetExceeded above kLevineMaxIndex.
std::vector<BigInt> levine_terms(std::size_t max_index);

struct IdentityReport {
    std::size_t row = 0;
    /// Results of the seven identities; empty when the quantities involved are
    /// not available (rows beyond kLevineRows, terms beyond kLevineMaxIndex).
    std::array<std::optional<bool>, 7> holds;
    bool all_hold() const;
    std::size_t checked() const;
};

/// Checks the seven identities for L_n around row n against the terms of
/// levine_terms(kLevineMaxIndex).
IdentityReport verify_identities(std::size_t n);

struct GrowthFit {
    double c1 = 0;
    double c2 = 0;
    std::vector<double> residuals;
};

/// Least-squares fit of log L_n = -log c1 + c2 tau^n over the given terms,
/// which start at index first_index.
GrowthFit growth_estimate(const std::vector<BigInt>& terms, std::size_t first_index);

/// L_{n+2} <= L_{n+1} L_n for every consecutive triple.
bool levine_upper_bound_holds(const std::vector<BigInt>& terms);
/// L_{n+3}/(2L_{n+2}) >= (L_{n+2}/(2L_{n+1})) (L_{n+1}/(2L_n)) for every run of four.
bool levine_lower_bound_holds(const std::vector<BigInt>& terms);

}  // namespace seqlab
