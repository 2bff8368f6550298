#include "seqlab/sequence.hpp"

#include "seqlab/error.hpp"
#include "seqlab/primes.hpp"

#include <algorithm>
#include <limits>

namespace seqlab {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::generated: return "generated";
        case Provenance::stored: return "stored";
        case Provenance::hybrid: return "hybrid";
    }
    return "?";
}

Sequence::Sequence(std::string id, long offset, Generator gen)
    : id_(std::move(id)), offset_(offset), provenance_(Provenance::generated), gen_(std::move(gen)) {
    if (!gen_) throw InvalidArgument("sequence " + id_ + " has no generator");
}

Sequence Sequence::stored(std::string id, long offset, std::vector<BigInt> terms) {
    Sequence s;
    s.id_ = std::move(id);
    s.offset_ = offset;
    s.provenance_ = Provenance::stored;
    s.memo_ = std::move(terms);
    return s;
}

Sequence Sequence::hybrid(std::string id, long offset, Generator gen, std::size_t generated_limit,
                          std::vector<BigInt> known) {
    if (!gen) throw InvalidArgument("sequence " + id + " has no generator");
    Sequence s;
    s.id_ = std::move(id);
    s.offset_ = offset;
    s.provenance_ = Provenance::hybrid;
    s.gen_ = std::move(gen);
    s.generated_limit_ = generated_limit;
    s.known_ = std::move(known);
    return s;
}

Sequence::Sequence(const Sequence& other) {
    std::lock_guard lock(other.mutex_);
    id_ = other.id_;
    offset_ = other.offset_;
    provenance_ = other.provenance_;
    gen_ = other.gen_;
    generated_limit_ = other.generated_limit_;
    known_ = other.known_;
    memo_ = other.memo_;
}

Sequence& Sequence::operator=(const Sequence& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(mutex_, other.mutex_);
    id_ = other.id_;
    offset_ = other.offset_;
    provenance_ = other.provenance_;
    gen_ = other.gen_;
    generated_limit_ = other.generated_limit_;
    known_ = other.known_;
    memo_ = other.memo_;
    return *this;
}

std::size_t Sequence::known_terms() const noexcept {
    if (provenance_ == Provenance::stored) {
        std::lock_guard lock(mutex_);
        return memo_.size();
    }
    if (provenance_ == Provenance::hybrid) return std::max(known_.size(), generated_limit_);
    return std::numeric_limits<std::size_t>::max();
}

std::size_t Sequence::generated_terms() const noexcept {
    switch (provenance_) {
        case Provenance::stored: return 0;
        case Provenance::hybrid: return generated_limit_;
        case Provenance::generated: break;
    }
    return std::numeric_limits<std::size_t>::max();
}

std::vector<BigInt> Sequence::terms(std::size_t count) const {
    std::lock_guard lock(mutex_);
    if (memo_.size() < count) {
        if (provenance_ == Provenance::stored) {
            throw BudgetExceeded(id_ + " has only " + std::to_string(memo_.size()) + " known terms");
        }
        if (provenance_ == Provenance::hybrid) {
            if (count > known_terms()) {
                throw BudgetExceeded(id_ + " has only " + std::to_string(known_terms()) + " known terms");
            }
            std::vector<BigInt> fresh = gen_(std::min(count, generated_limit_));
            for (std::size_t i = 0; i < fresh.size() && i < known_.size(); ++i) {
                if (fresh[i] != known_[i]) {
                    throw ConstructionFailure(id_ + ": generated term " + std::to_string(i) + " disagrees with stored data");
                }
            }
            for (std::size_t i = fresh.size(); i < count; ++i) fresh.push_back(known_.at(i));
            memo_ = std::move(fresh);
            return std::vector<BigInt>(memo_.begin(), memo_.begin() + static_cast<std::ptrdiff_t>(count));
        }
        std::vector<BigInt> fresh = gen_(count);
        if (fresh.size() < count) {
            throw BudgetExceeded(id_ + " produced only " + std::to_string(fresh.size()) + " terms");
        }
        memo_ = std::move(fresh);
    }
    return std::vector<BigInt>(memo_.begin(), memo_.begin() + static_cast<std::ptrdiff_t>(count));
}

NumberTriangle pascal_triangle() {
    return {[](std::size_t n) {
        std::vector<BigInt> row(n + 1);
        row[0] = 1;
        for (std::size_t k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
        return row;
    }};
}

NumberSquare nim_square() {
    return {[](std::size_t r, std::size_t c) { return from_u64(nim_add(r, c)); }};
}

std::vector<BigInt> read_triangle_by_rows(const NumberTriangle& t, std::size_t count) {
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t n = 0; out.size() < count; ++n) {
        std::vector<BigInt> row = t.row(n);
        if (row.size() != n + 1) throw InvalidArgument("triangle row has the wrong length");
        for (auto& v : row) {
            if (out.size() == count) break;
            out.push_back(std::move(v));
        }
    }
    return out;
}

std::pair<std::size_t, std::size_t> antidiagonal_position(std::size_t index) {
    std::size_t d = 0;
    while ((d + 1) * (d + 2) / 2 <= index) ++d;
    std::size_t j = index - d * (d + 1) / 2;
    return {d - j, j};
}

std::size_t antidiagonal_index(std::size_t row, std::size_t col) {
    std::size_t d = row + col;
    return d * (d + 1) / 2 + col;
}

std::vector<BigInt> read_square_by_antidiagonals(const NumberSquare& s, std::size_t count) {
    std::vector<BigInt> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto [r, c] = antidiagonal_position(i);
        out.push_back(s.entry(r, c));
    }
    return out;
}

std::uint64_t nim_add(std::uint64_t a, std::uint64_t b) { return a ^ b; }

namespace {

std::vector<std::uint64_t> first_primes(std::size_t count) {
    if (count == 0) return {};
    std::vector<std::uint64_t> p = default_sieve().primes_up_to(nth_prime(count));
    p.resize(count);
    return p;
}

template <class Cell>
std::vector<BigInt> leaders_impl(const std::vector<std::uint64_t>& primes, std::size_t num_rows) {
    std::vector<Cell> row(primes.size() - 1);
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) row[i] = static_cast<Cell>(primes[i + 1] - primes[i]);
    std::vector<BigInt> out;
    out.reserve(num_rows);
    std::size_t len = row.size();
    Cell* r = row.data();
    for (std::size_t k = 0; k < num_rows; ++k) {
        out.emplace_back(static_cast<unsigned long>(r[0]));
        --len;
        for (std::size_t i = 0; i < len; ++i) {
            Cell a = r[i], b = r[i + 1];
            r[i] = static_cast<Cell>(a > b ? a - b : b - a);
        }
    }
    return out;
}

}  // namespace

std::vector<BigInt> gilbreath_row_leaders(std::size_t num_rows, std::size_t width) {
    if (width < num_rows + 1) throw InvalidArgument("gilbreath: width must be at least num_rows + 1");
    if (num_rows == 0) return {};
    std::vector<std::uint64_t> primes = first_primes(width);
    std::uint64_t max_gap = 0;
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) max_gap = std::max(max_gap, primes[i + 1] - primes[i]);
    // Entries of later rows never exceed the largest gap.
    if (max_gap <= 0xff) return leaders_impl<std::uint8_t>(primes, num_rows);
    return leaders_impl<std::uint32_t>(primes, num_rows);
}

std::vector<BigInt> gilbreath_sequence(std::size_t count) {
    if (count == 0) return {};
    std::size_t diag = antidiagonal_position(count - 1).first + antidiagonal_position(count - 1).second;
    // rows[k] holds row k of the array through column diag - k
    std::vector<std::vector<BigInt>> rows;
    rows.push_back(to_bigints(first_primes(diag + 1)));
    for (std::size_t k = 1; k <= diag; ++k) {
        const auto& prev = rows.back();
        std::vector<BigInt> next(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) next[i] = abs(prev[i + 1] - prev[i]);
        rows.push_back(std::move(next));
    }
    NumberSquare sq{[&rows](std::size_t r, std::size_t c) { return rows.at(r).at(c); }};
    return read_square_by_antidiagonals(sq, count);
}

const char* to_string(TransformKind k) {
    switch (k) {
        case TransformKind::differences: return "differences";
        case TransformKind::partial_sums: return "partial_sums";
        case TransformKind::binomial: return "binomial";
        case TransformKind::inverse_binomial: return "inverse_binomial";
        case TransformKind::inverse_moebius: return "inverse_moebius";
    }
    return "?";
}

std::vector<BigInt> differences(const std::vector<BigInt>& a) {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) out.push_back(a[i + 1] - a[i]);
    return out;
}

std::vector<BigInt> partial_sums(const std::vector<BigInt>& a) {
    std::vector<BigInt> out(a.size());
    BigInt acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i];
        out[i] = acc;
    }
    return out;
}

std::vector<BigInt> binomial_transform(const std::vector<BigInt>& a) {
    std::vector<BigInt> out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        BigInt c = 1, acc = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            acc += c * a[k];
            c = c * (n - k) / (k + 1);
        }
        out[n] = acc;
    }
    return out;
}

std::vector<BigInt> inverse_binomial_transform(const std::vector<BigInt>& a) {
    std::vector<BigInt> out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        BigInt c = 1, acc = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            if ((n - k) % 2 == 0) {
                acc += c * a[k];
            } else {
                acc -= c * a[k];
            }
            c = c * (n - k) / (k + 1);
        }
        out[n] = acc;
    }
    return out;
}

std::vector<BigInt> inverse_moebius_transform(const std::vector<BigInt>& a) {
    const std::size_t n = a.size();
    std::vector<BigInt> out(n, 0);
    for (std::size_t d = 1; d <= n; ++d) {
        for (std::size_t m = d; m <= n; m += d) out[m - 1] += a[d - 1];
    }
    return out;
}

std::vector<BigInt> moebius_transform(const std::vector<BigInt>& a) {
    const std::size_t n = a.size();
    // mu by a small sieve
    std::vector<int> mu(n + 1, 1);
    std::vector<bool> composite(n + 1, false);
    for (std::size_t p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        for (std::size_t m = p; m <= n; m += p) {
            if (m > p) composite[m] = true;
            mu[m] = -mu[m];
        }
        for (std::size_t m = p * p; m <= n; m += p * p) mu[m] = 0;
    }
    std::vector<BigInt> out(n, 0);
    for (std::size_t d = 1; d <= n; ++d) {
        for (std::size_t m = d; m <= n; m += d) {
            int s = mu[m / d];
            if (s > 0) {
                out[m - 1] += a[d - 1];
            } else if (s < 0) {
                out[m - 1] -= a[d - 1];
            }
        }
    }
    return out;
}

std::vector<BigInt> transform(const std::vector<BigInt>& a, TransformKind kind, std::size_t count) {
    const std::size_t need = kind == TransformKind::differences ? count + 1 : count;
    if (a.size() < need) throw InvalidArgument("transform: source sequence is too short");
    std::vector<BigInt> src(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(need));
    switch (kind) {
        case TransformKind::differences: return differences(src);
        case TransformKind::partial_sums: return partial_sums(src);
        case TransformKind::binomial: return binomial_transform(src);
        case TransformKind::inverse_binomial: return inverse_binomial_transform(src);
        case TransformKind::inverse_moebius: return inverse_moebius_transform(src);
    }
    return {};
}

}  // namespace seqlab
