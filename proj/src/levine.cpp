#include "seqlab/levine.hpp"

#include "seqlab/error.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

namespace seqlab {

RunLengthRow::RunLengthRow(std::size_t index, std::vector<std::uint64_t> multiplicities)
    : index_(index), mult_(std::move(multiplicities)) {
    if (mult_.empty()) throw InvalidArgument("levine row must have at least one run");
    for (auto m : mult_) {
        if (m == 0) throw InvalidArgument("levine run multiplicities must be positive");
    }
}

RunLengthRow RunLengthRow::first() { return RunLengthRow(1, {2}); }

BigInt RunLengthRow::length() const {
    BigInt n = 0;
    for (auto m : mult_) n += from_u64(m);
    return n;
}

BigInt RunLengthRow::sum() const {
    BigInt s = 0;
    for (std::size_t j = 0; j < mult_.size(); ++j) s += from_u64(mult_[j]) * from_u64(j + 1);
    return s;
}

std::vector<std::uint64_t> RunLengthRow::expand(std::uint64_t max_len) const {
    BigInt len = length();
    if (len > from_u64(max_len)) {
        throw BudgetExceeded("levine row " + std::to_string(index_) + " has " + to_string(len) + " entries");
    }
    std::vector<std::uint64_t> out;
    out.reserve(to_u64(len));
    for (std::size_t j = 0; j < mult_.size(); ++j) out.insert(out.end(), mult_[j], j + 1);
    return out;
}

BigInt RunLengthRow::prefix_sum(const BigInt& i) const {
    BigInt left = i, s = 0;
    for (std::size_t j = 0; j < mult_.size() && left > 0; ++j) {
        BigInt m = from_u64(mult_[j]);
        BigInt take = left < m ? left : m;
        s += take * from_u64(j + 1);
        left -= take;
    }
    if (left > 0) throw InvalidArgument("prefix length exceeds the row length");
    return s;
}

BigInt RunLengthRow::prefix_sum_total() const {
    // Within a run of value v and multiplicity m after prefix S0 the partial sums
    // are S0 + v, ..., S0 + m v.
    BigInt total = 0, s0 = 0;
    for (std::size_t j = 0; j < mult_.size(); ++j) {
        BigInt m = from_u64(mult_[j]), v = from_u64(j + 1);
        total += m * s0 + v * m * (m + 1) / 2;
        s0 += m * v;
    }
    return total;
}

BigInt RunLengthRow::prefix_triangle_total() const {
    BigInt twice = 0, s0 = 0;  // sum of s^2 + s
    for (std::size_t j = 0; j < mult_.size(); ++j) {
        BigInt m = from_u64(mult_[j]), v = from_u64(j + 1);
        BigInt lin = m * s0 + v * m * (m + 1) / 2;
        BigInt sq = m * s0 * s0 + s0 * v * m * (m + 1) + v * v * (m * (m + 1) * (2 * m + 1) / 6);
        twice += sq + lin;
        s0 += m * v;
    }
    return twice / 2;
}

RunLengthRow next_row(const RunLengthRow& r, std::uint64_t max_runs) {
    BigInt runs = r.length();
    if (runs > from_u64(max_runs)) {
        throw BudgetExceeded("levine row " + std::to_string(r.index() + 1) + " would have " + to_string(runs) +
                             " runs");
    }
    // Multiplicities of the new row are the old row read backwards.
    std::vector<std::uint64_t> mult;
    mult.reserve(to_u64(runs));
    const auto& m = r.multiplicities();
    for (std::size_t j = m.size(); j-- > 0;) mult.insert(mult.end(), m[j], j + 1);
    return RunLengthRow(r.index() + 1, std::move(mult));
}

std::vector<RunLengthRow> levine_rows(std::size_t count, std::uint64_t max_runs) {
    std::vector<RunLengthRow> rows;
    if (count == 0) return rows;
    rows.push_back(RunLengthRow::first());
    while (rows.size() < count) rows.push_back(next_row(rows.back(), max_runs));
    return rows;
}

std::vector<BigInt> levine_terms(std::size_t max_index) {
    if (max_index > kLevineMaxIndex) {
        throw BudgetExceeded("levine terms beyond L_" + std::to_string(kLevineMaxIndex) + " are not computable here");
    }
    const std::size_t nrows = std::min(max_index, kLevineRows);
    std::vector<RunLengthRow> rows = levine_rows(nrows);
    std::vector<BigInt> out;
    for (const auto& r : rows) out.push_back(from_u64(r.last()));
    if (max_index > kLevineRows) {
        const RunLengthRow& last = rows.back();
        out.push_back(last.length());                 // L_12, length of row 11
        if (max_index > 12) out.push_back(last.sum());  // L_13, sum of row 11
        if (max_index > 13) out.push_back(last.prefix_sum_total());
        if (max_index > 14) out.push_back(last.prefix_triangle_total());
    }
    out.resize(max_index);
    return out;
}

bool IdentityReport::all_hold() const {
    for (const auto& h : holds) {
        if (h && !*h) return false;
    }
    return true;
}

std::size_t IdentityReport::checked() const {
    std::size_t c = 0;
    for (const auto& h : holds) c += h.has_value();
    return c;
}

IdentityReport verify_identities(std::size_t n) {
    if (n == 0) throw InvalidArgument("rows are numbered from 1");
    static const std::vector<RunLengthRow> rows = levine_rows(kLevineRows);
    static const std::vector<BigInt> L = levine_terms(kLevineMaxIndex);
    auto row = [&](std::size_t k) -> const RunLengthRow* {
        return k >= 1 && k <= rows.size() ? &rows[k - 1] : nullptr;
    };
    auto term = [&](std::size_t k) -> const BigInt* { return k >= 1 && k <= L.size() ? &L[k - 1] : nullptr; };

    IdentityReport rep;
    rep.row = n;
    const BigInt* ln = term(n);
    if (ln) {
        if (n >= 3 && row(n - 2)) rep.holds[0] = *ln == row(n - 2)->sum();
        if (n >= 2 && row(n - 1)) rep.holds[1] = *ln == row(n - 1)->length();
        if (row(n)) rep.holds[2] = *ln == from_u64(row(n)->last());
        if (row(n + 1)) rep.holds[3] = *ln == from_u64(row(n + 1)->multiplicity(0));
    }
    const RunLengthRow* rn = row(n);
    const BigInt* l1 = term(n + 1);
    if (rn && l1) {
        const bool whole_row = *l1 == rn->length();
        if (const BigInt* l2 = term(n + 2)) rep.holds[4] = whole_row && *l2 == rn->prefix_sum(*l1);
        if (const BigInt* l3 = term(n + 3)) rep.holds[5] = whole_row && *l3 == rn->prefix_sum_total();
        if (const BigInt* l4 = term(n + 4)) rep.holds[6] = whole_row && *l4 == rn->prefix_triangle_total();
    }
    return rep;
}

GrowthFit growth_estimate(const std::vector<BigInt>& terms, std::size_t first_index) {
    if (terms.size() < 8) throw InvalidArgument("growth fit needs at least 8 terms");
    const double tau = std::numbers::phi;
    const auto n = static_cast<Eigen::Index>(terms.size());
    Eigen::MatrixXd x(n, 2);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        x(i, 0) = 1.0;
        x(i, 1) = std::pow(tau, static_cast<double>(first_index + static_cast<std::size_t>(i)));
        y(i) = log(terms[static_cast<std::size_t>(i)]);
    }
    Eigen::Vector2d beta = x.colPivHouseholderQr().solve(y);
    GrowthFit fit;
    fit.c1 = std::exp(-beta(0));
    fit.c2 = beta(1);
    Eigen::VectorXd res = y - x * beta;
    fit.residuals.assign(res.data(), res.data() + res.size());
    return fit;
}

bool levine_upper_bound_holds(const std::vector<BigInt>& terms) {
    for (std::size_t i = 0; i + 2 < terms.size(); ++i) {
        if (terms[i + 2] > terms[i + 1] * terms[i]) return false;
    }
    return true;
}

bool levine_lower_bound_holds(const std::vector<BigInt>& terms) {
    for (std::size_t i = 0; i + 3 < terms.size(); ++i) {
        auto ratio = [](const BigInt& num, const BigInt& den) {
            BigRational q(num, 2 * den);
            q.canonicalize();
            return q;
        };
        BigRational lhs = ratio(terms[i + 3], terms[i + 2]);
        BigRational rhs = ratio(terms[i + 2], terms[i + 1]) * ratio(terms[i + 1], terms[i]);
        if (lhs < rhs) return false;
    }
    return true;
}

}  // namespace seqlab
