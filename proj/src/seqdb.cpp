#include "seqlab/seqdb.hpp"

#include "seqlab/boustrophedon.hpp"
#include "seqlab/error.hpp"
#include "seqlab/primes.hpp"
#include "seqlab/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace seqlab {

#ifndef SEQLAB_DEFAULT_DB
#define SEQLAB_DEFAULT_DB "seqlab.db"
#endif

std::string default_database_path() {
    if (const char* env = std::getenv("SEQLAB_DB"); env && *env) return env;
    return SEQLAB_DEFAULT_DB;
}

std::string normalize_id(std::string_view id) {
    std::string_view digits = id;
    if (!digits.empty() && (digits.front() == 'A' || digits.front() == 'a')) digits.remove_prefix(1);
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw InvalidArgument("not a sequence id: '" + std::string(id) + "'");
    }
    return "A" + std::string(6 - digits.size(), '0') + std::string(digits);
}

SeqDatabase SeqDatabase::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open database '" + path + "'");
    return parse(in);
}

SeqDatabase SeqDatabase::parse(std::istream& in) {
    SeqDatabase db;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::size_t space = line.find_first_of(" \t", first);
        if (space == std::string::npos) throw ParseError(lineno, "expected '<ID> <terms>'");
        std::string id;
        std::vector<BigInt> terms;
        try {
            id = normalize_id(std::string_view(line).substr(first, space - first));
            terms = parse_terms(std::string_view(line).substr(space + 1));
        } catch (const Error& e) {
            throw ParseError(lineno, e.what());
        }
        if (terms.empty()) throw ParseError(lineno, "no terms");
        if (db.by_id_.count(id)) throw ParseError(lineno, "duplicate id " + id);
        db.add(std::move(id), std::move(terms));
    }
    return db;
}

void SeqDatabase::add(std::string id, std::vector<BigInt> terms) {
    id = normalize_id(id);
    if (by_id_.count(id)) throw InvalidArgument("duplicate id " + id);
    const std::size_t e = entries_.size();
    for (std::size_t i = 0; i < terms.size(); ++i) index_[terms[i].get_str()].emplace_back(e, i);
    by_id_.emplace(id, e);
    entries_.push_back(DbEntry{std::move(id), std::move(terms)});
}

const DbEntry* SeqDatabase::find(std::string_view id) const {
    auto it = by_id_.find(normalize_id(id));
    return it == by_id_.end() ? nullptr : &entries_[it->second];
}

LookupResult SeqDatabase::lookup(const std::vector<BigInt>& query) const {
    LookupResult r;
    r.low_confidence = query.size() < 3;
    if (query.empty()) return r;
    auto it = index_.find(query.front().get_str());
    if (it == index_.end()) return r;
    for (auto [e, pos] : it->second) {
        const auto& t = entries_[e].terms;
        if (pos + query.size() > t.size()) continue;
        if (!std::equal(query.begin(), query.end(), t.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
        r.matches.push_back(LookupMatch{entries_[e].id, pos, pos == 0 && query.size() == t.size()});
    }
    std::sort(r.matches.begin(), r.matches.end(), [](const LookupMatch& a, const LookupMatch& b) {
        if (a.exact != b.exact) return a.exact;
        if (a.position != b.position) return a.position < b.position;
        return a.id < b.id;
    });
    // one hit per entry: its earliest position
    std::set<std::string> seen;
    std::erase_if(r.matches, [&](const LookupMatch& m) { return !seen.insert(m.id).second; });
    return r;
}

void SeqDatabase::write(std::ostream& out) const {
    for (const auto& e : entries_) out << e.id << ' ' << join(e.terms) << '\n';
}

const char* to_string(SeekStep s) {
    switch (s) {
        case SeekStep::differences: return "differences";
        case SeekStep::partial_sums: return "partial_sums";
        case SeekStep::partial_sums_from_one: return "partial_sums_from_one";
        case SeekStep::binomial: return "binomial";
        case SeekStep::inverse_binomial: return "inverse_binomial";
        case SeekStep::inverse_moebius: return "inverse_moebius";
        case SeekStep::boustrophedon: return "boustrophedon";
        case SeekStep::negate: return "negate";
        case SeekStep::times_two: return "times_two";
        case SeekStep::times_three: return "times_three";
        case SeekStep::half: return "half";
        case SeekStep::third: return "third";
        case SeekStep::shift: return "shift";
    }
    return "?";
}

const std::vector<SeekStep>& seek_steps() {
    static const std::vector<SeekStep> steps{
        SeekStep::differences,    SeekStep::partial_sums,    SeekStep::partial_sums_from_one,
        SeekStep::binomial,       SeekStep::inverse_binomial, SeekStep::inverse_moebius,
        SeekStep::boustrophedon,  SeekStep::negate,          SeekStep::times_two,
        SeekStep::times_three,    SeekStep::half,            SeekStep::third,
        SeekStep::shift,
    };
    return steps;
}

namespace {

std::vector<BigInt> scaled(std::vector<BigInt> a, long num, long den) {
    for (auto& v : a) {
        if (den != 1) {
            if (v % den != 0) return {};
            v /= den;
        }
        v *= num;
    }
    return a;
}

std::vector<BigInt> apply_step(const std::vector<BigInt>& a, SeekStep s) {
    if (a.empty()) return {};
    switch (s) {
        case SeekStep::differences: return differences(a);
        case SeekStep::partial_sums: return partial_sums(a);
        case SeekStep::partial_sums_from_one: {
            std::vector<BigInt> b{BigInt(1)};
            b.insert(b.end(), a.begin(), a.end());
            return partial_sums(b);
        }
        case SeekStep::binomial: return binomial_transform(a);
        case SeekStep::inverse_binomial: return inverse_binomial_transform(a);
        case SeekStep::inverse_moebius: return inverse_moebius_transform(a);
        case SeekStep::boustrophedon: return boustrophedon_transform(a);
        case SeekStep::negate: return scaled(a, -1, 1);
        case SeekStep::times_two: return scaled(a, 2, 1);
        case SeekStep::times_three: return scaled(a, 3, 1);
        case SeekStep::half: return scaled(a, 1, 2);
        case SeekStep::third: return scaled(a, 1, 3);
        case SeekStep::shift: return std::vector<BigInt>(a.begin() + 1, a.end());
    }
    return {};
}

bool informative(const std::vector<BigInt>& a) {
    if (a.size() < 3) return false;
    return std::any_of(a.begin(), a.end(), [&](const BigInt& v) { return v != a.front(); });
}

// Chains equivalent to a shorter one: inverse pairs, and a trailing shift
// (lookup already matches at any position).
bool redundant(const std::vector<SeekStep>& chain) {
    if (!chain.empty() && chain.back() == SeekStep::shift) return true;
    if (chain.size() != 2) return false;
    using S = SeekStep;
    static const std::set<std::pair<S, S>> inverse{
        {S::negate, S::negate},           {S::times_two, S::half},       {S::half, S::times_two},
        {S::times_three, S::third},       {S::third, S::times_three},    {S::binomial, S::inverse_binomial},
        {S::inverse_binomial, S::binomial}, {S::partial_sums, S::differences}, {S::partial_sums_from_one, S::differences},
    };
    return inverse.count({chain[0], chain[1]}) > 0;
}

}  // namespace

std::vector<BigInt> apply_chain(const std::vector<BigInt>& terms, const std::vector<SeekStep>& chain) {
    std::vector<BigInt> a = terms;
    for (SeekStep s : chain) {
        a = apply_step(a, s);
        if (a.empty()) return a;
    }
    return a;
}

std::vector<SuperseekerResult> superseek(const SeqDatabase& db, const std::vector<BigInt>& query) {
    std::vector<SuperseekerResult> out;
    std::vector<std::vector<SeekStep>> chains{{}};
    for (SeekStep s : seek_steps()) chains.push_back({s});
    for (SeekStep s : seek_steps()) {
        for (SeekStep t : seek_steps()) chains.push_back({s, t});
    }
    for (const auto& chain : chains) {
        if (redundant(chain)) continue;
        const std::vector<BigInt> q = apply_chain(query, chain);
        if (!informative(q)) continue;
        for (const auto& m : db.lookup(q).matches) out.push_back(SuperseekerResult{m.id, chain, m.position});
    }
    return out;
}

std::vector<BigInt> squared_binomial_sum(std::size_t count) {
    std::vector<BigInt> a;
    for (std::size_t n = 0; n < count; ++n) {
        BigInt s = 0;
        const long ln = static_cast<long>(n);
        for (long k = 0; k <= ln; ++k) {
            BigInt u = binomial(2 * ln - 2 * k, ln - k), v = binomial(2 * k, k);
            s += u * u * v * v;
        }
        a.push_back(s);
    }
    for (std::size_t n = 2; n < a.size(); ++n) {
        const BigInt N(static_cast<unsigned long>(n));
        BigInt lhs = 2 * N * N * N * a[n];
        BigInt rhs = 16 * (2 * N - 1) * (2 * N * N - 2 * N + 1) * a[n - 1] - 512 * (N - 1) * (N - 1) * (N - 1) * a[n - 2];
        if (lhs != rhs) throw ConstructionFailure("squared binomial sum violates its recurrence at n = " + std::to_string(n));
    }
    return a;
}

std::vector<BigInt> squared_binomial_sum_by_recurrence(std::size_t count) {
    std::vector<BigInt> a;
    if (count >= 1) a.emplace_back(1);
    if (count >= 2) a.emplace_back(8);
    for (std::size_t n = 2; n < count; ++n) {
        const BigInt N(static_cast<unsigned long>(n));
        BigInt num = 16 * (2 * N - 1) * (2 * N * N - 2 * N + 1) * a[n - 1] - 512 * (N - 1) * (N - 1) * (N - 1) * a[n - 2];
        BigInt den = 2 * N * N * N;
        if (num % den != 0) throw ConstructionFailure("recurrence is not integral at n = " + std::to_string(n));
        a.push_back(num / den);
    }
    return a;
}

std::vector<BigInt> inequality_gap(std::size_t count) {
    std::vector<BigInt> out;
    if (count == 0) return out;
    const ArithTable t = arith_table(count);
    out.reserve(count);
    for (std::size_t n = 1; n <= count; ++n) {
        BigInt v = BigInt(from_u64(t.sigma[n])) - from_u64(t.tau[n]) - from_u64(t.phi[n]);
        if (n >= 2 && v < 0) throw ConstructionFailure("sigma(n) < d(n) + phi(n) at n = " + std::to_string(n));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::uint64_t> mod5_square_indices(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 1; c <= limit; ++c) {
        bool ok = true;
        for (auto [p, e] : factorize(c)) {
            if ((p % 5 == 2 || p % 5 == 3) && e % 2 == 1) ok = false;
        }
        if (ok) out.push_back(c);
    }
    return out;
}

bool loeschian_test(std::uint64_t n) {
    for (std::uint64_t a = 0; a * a <= n; ++a) {
        // b^2 + ab + a^2 - n = 0
        const std::uint64_t rest = n - a * a;
        std::uint64_t b = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(rest)));
        while (b > 0 && b * b + a * b > rest) --b;
        while ((b + 1) * (b + 1) + a * (b + 1) <= rest) ++b;
        if (b * b + a * b == rest) return true;
    }
    return false;
}

bool loeschian_by_factors(std::uint64_t n) {
    if (n == 0) return true;
    for (auto [p, e] : factorize(n)) {
        if (p % 3 == 2 && e % 2 == 1) return false;
    }
    return true;
}

}  // namespace seqlab
