#include "seqlab/tchouka.hpp"

#include "seqlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <unordered_map>

namespace seqlab {

namespace {

// Holes 1..15 packed four bits each (hole h in bits 4(h-1)..4h-1).
using PackedBoard = std::uint64_t;

bool packable(const Board& b) {
    if (b.stones.size() > 16) {
        for (std::size_t h = 16; h < b.stones.size(); ++h) {
            if (b.stones[h] != 0) return false;
        }
    }
    for (std::size_t h = 1; h < b.stones.size() && h < 16; ++h) {
        if (b.stones[h] > 15) return false;
    }
    return true;
}

PackedBoard pack(const Board& b) {
    PackedBoard p = 0;
    for (std::size_t h = 1; h < b.stones.size() && h < 16; ++h) p |= b.stones[h] << (4 * (h - 1));
    return p;
}

std::uint64_t hole(PackedBoard p, unsigned h) { return (p >> (4 * (h - 1))) & 0xf; }

bool wins_packed(PackedBoard p, std::unordered_map<PackedBoard, bool>& memo) {
    if (p == 0) return true;
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    bool win = false;
    for (unsigned h = 1; h < 16 && !win; ++h) {
        if (hole(p, h) != h) continue;
        PackedBoard q = p & ~(PackedBoard{0xf} << (4 * (h - 1)));
        for (unsigned j = 1; j < h; ++j) {
            if (hole(q, j) == 15) {
                q = ~PackedBoard{0};  // sentinel: would overflow a nibble
                break;
            }
            q += PackedBoard{1} << (4 * (j - 1));
        }
        if (q == ~PackedBoard{0}) throw BudgetExceeded("board exceeds the packed search range");
        win = wins_packed(q, memo);
    }
    memo.emplace(p, win);
    return win;
}

bool wins_generic(std::vector<std::uint64_t> s, std::map<std::vector<std::uint64_t>, bool>& memo) {
    s[0] = 0;
    while (s.size() > 1 && s.back() == 0) s.pop_back();
    if (s.size() == 1) return true;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    bool win = false;
    for (std::size_t h = 1; h < s.size() && !win; ++h) {
        if (s[h] != h) continue;
        std::vector<std::uint64_t> t = s;
        t[h] = 0;
        for (std::size_t j = 1; j < h; ++j) ++t[j];
        win = wins_generic(std::move(t), memo);
    }
    memo.emplace(std::move(s), win);
    return win;
}

// Apply the first-empty-hole rule in place and return the chosen hole.
std::uint64_t advance(std::vector<std::uint64_t>& holes) {
    std::size_t i = 0;
    while (i < holes.size() && holes[i] != 0) ++i;
    if (i == holes.size()) holes.push_back(0);
    holes[i] = i + 1;
    for (std::size_t j = 0; j < i; ++j) --holes[j];
    return i + 1;
}

}  // namespace

std::uint64_t Board::in_play() const {
    std::uint64_t s = 0;
    for (std::size_t h = 1; h < stones.size(); ++h) s += stones[h];
    return s;
}

std::optional<Board> play_move(const Board& b, std::size_t h) {
    if (h == 0 || h >= b.stones.size() || b.stones[h] == 0) throw InvalidArgument("play_move: hole is empty");
    const std::uint64_t s = b.stones[h];
    if (s != h) return std::nullopt;
    Board out = b;
    out.stones[h] = 0;
    for (std::size_t j = 0; j < h; ++j) ++out.stones[j];
    return out;
}

bool is_winning(const Board& b) {
    if (b.stones.empty()) return true;
    if (packable(b)) {
        std::unordered_map<PackedBoard, bool> memo;
        return wins_packed(pack(b), memo);
    }
    std::map<std::vector<std::uint64_t>, bool> memo;
    return wins_generic(b.stones, memo);
}

std::string WinningPosition::digits() const {
    if (holes.empty()) return "0";
    const bool wide = std::any_of(holes.begin(), holes.end(), [](std::uint64_t v) { return v >= 10; });
    std::string s;
    for (auto it = holes.rbegin(); it != holes.rend(); ++it) {
        if (wide && !s.empty()) s += ' ';
        s += std::to_string(*it);
    }
    return s;
}

Board WinningPosition::board() const {
    Board b;
    b.stones.push_back(0);
    b.stones.insert(b.stones.end(), holes.begin(), holes.end());
    return b;
}

std::vector<WinningPosition> winning_positions(std::size_t max_n) {
    std::vector<WinningPosition> out;
    std::vector<std::uint64_t> holes;
    for (std::size_t n = 0; n <= max_n; ++n) {
        if (n > 0) advance(holes);
        out.push_back(WinningPosition{n, holes});
    }
    return out;
}

std::vector<BigInt> winning_position_numbers(std::size_t count) {
    std::vector<BigInt> out;
    if (count == 0) return out;
    for (const auto& p : winning_positions(count - 1)) {
        BigInt v = 0;
        for (auto it = p.holes.rbegin(); it != p.holes.rend(); ++it) {
            if (*it >= 10) throw ConstructionFailure("winning position has a hole with 10 or more stones");
            v = v * 10 + static_cast<unsigned long>(*it);
        }
        out.push_back(v);
    }
    return out;
}

std::vector<std::uint64_t> i_sequence(std::size_t count) {
    std::vector<std::uint64_t> out;
    std::vector<std::uint64_t> holes;
    while (out.size() < count) out.push_back(advance(holes));
    return out;
}

std::vector<std::uint64_t> t_by_first_occurrence(std::size_t max_k) {
    std::vector<std::uint64_t> t(max_k, 0);
    std::vector<std::uint64_t> holes;
    std::size_t found = 0;
    for (std::uint64_t step = 1; found < max_k; ++step) {
        std::uint64_t i = advance(holes);
        if (i <= max_k && t[i - 1] == 0) {
            t[i - 1] = step;
            ++found;
        }
    }
    return t;
}

std::vector<std::uint64_t> rounding_chain(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("rounding_chain needs n >= 1");
    std::vector<std::uint64_t> chain{n};
    std::uint64_t x = n;
    for (std::uint64_t j = n - 1; j >= 1; --j) {
        x = (x + j - 1) / j * j;
        chain.push_back(x);
    }
    return chain;
}

std::uint64_t t_by_rounding(std::uint64_t n) { return rounding_chain(n).back(); }

std::vector<std::uint64_t> t_by_sieve(std::size_t max_k) {
    // t(k) <= k^2 for every k >= 1, so a column of k^2 numbers suffices.
    const std::uint64_t len = std::max<std::uint64_t>(4, std::uint64_t{max_k} * max_k);
    std::vector<std::uint64_t> col(len);
    for (std::uint64_t v = 0; v < len; ++v) col[v] = v + 1;
    std::vector<std::uint64_t> tops;
    for (std::size_t k = 1; k <= max_k; ++k) {
        if (k >= 2) {
            std::size_t w = 0;
            for (std::size_t pos = 0; pos < col.size(); ++pos) {
                if (pos % k != 0) col[w++] = col[pos];
            }
            col.resize(w);
        }
        if (col.empty()) throw ConstructionFailure("sieve column ran out");
        tops.push_back(col.front());
    }
    return tops;
}

double pi_asymptotic_check(std::uint64_t n) {
    const double t = static_cast<double>(t_by_rounding(n));
    return t * std::numbers::pi / (static_cast<double>(n) * static_cast<double>(n));
}

std::vector<std::vector<std::uint64_t>> all_winning_boards(unsigned n) {
    if (n > 15) throw BudgetExceeded("all_winning_boards supports n <= 15");
    std::vector<std::vector<std::uint64_t>> out;
    std::unordered_map<PackedBoard, bool> memo;
    std::vector<std::uint64_t> holes(n, 0);
    // every composition of n into holes 1..n, each hole capped at 15
    auto rec = [&](auto&& self, unsigned h, unsigned left) -> void {
        if (h == n) {
            if (left != 0) return;
            Board b;
            b.stones.push_back(0);
            b.stones.insert(b.stones.end(), holes.begin(), holes.end());
            if (wins_packed(pack(b), memo)) {
                auto trimmed = holes;
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                out.push_back(trimmed);
            }
            return;
        }
        for (unsigned v = 0; v <= left && v <= 15; ++v) {
            holes[h] = v;
            self(self, h + 1, left - v);
        }
        holes[h] = 0;
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace seqlab
