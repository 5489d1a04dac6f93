#include "graycode/bitword.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <queue>
#include <stdexcept>

namespace graycode {

namespace {

constexpr std::uint64_t msb_mask(int n) { return std::uint64_t{1} << (n - 1); }

constexpr std::uint64_t width_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Edge test on raw values; lengths must already agree.
bool adjacent_raw(std::uint64_t a, std::uint64_t b, int n) {
    const std::uint64_t x = a ^ b;
    if (x == msb_mask(n)) {
        return true;  // the words differ exactly in position 1
    }
    if (std::popcount(x) != 2) {
        return false;
    }
    const int k = std::countr_zero(x);
    if ((x >> k) != 3) {
        return false;  // the two differing positions are not neighbours
    }
    // Neighbouring positions flip together only when they hold 0 and 1;
    // equal values there would make the other word differ by 00 <-> 11.
    return (((a >> k) ^ (a >> (k + 1))) & 1) != 0;
}

// Set bit k marks that positions k and k+1 (counted from the right) hold
// unequal values, i.e. a pair swap is available there.
std::uint64_t swappable_pairs(std::uint64_t bits, int n) {
    if (n < 2) {
        return 0;
    }
    return (bits ^ (bits >> 1)) & width_mask(n - 1);
}

// Calls fn(raw) for every neighbour of bits, flip first, then swaps from
// the right end of the word leftwards.
template <typename Fn>
void for_each_neighbor_raw(std::uint64_t bits, int n, Fn&& fn) {
    fn(bits ^ msb_mask(n));
    std::uint64_t pairs = swappable_pairs(bits, n);
    while (pairs != 0) {
        const int k = std::countr_zero(pairs);
        pairs &= pairs - 1;
        fn(bits ^ (std::uint64_t{3} << k));
    }
}

void require_same_length(const Word& u, const Word& v, const char* what) {
    if (u.length() != v.length()) {
        throw std::invalid_argument(std::string(what) + ": word lengths differ (" +
                                    std::to_string(u.length()) + " vs " +
                                    std::to_string(v.length()) + ")");
    }
}

}  // namespace

Word::Word(std::uint64_t bits, int length) : length_(length), bits_(bits) {
    if (length < 1 || length > kMaxLength) {
        throw std::invalid_argument("word length must be in [1, 64], got " +
                                    std::to_string(length));
    }
    if ((bits & ~width_mask(length)) != 0) {
        throw std::invalid_argument("raw bits do not fit in " + std::to_string(length) +
                                    " positions");
    }
}

Word Word::zeros(int length) { return Word(0, length); }

Word Word::ones(int length) { return Word(width_mask(length), length); }

Word Word::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty word");
    }
    if (text.size() > kMaxLength) {
        throw std::invalid_argument("word longer than 64 letters");
    }
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("word may only contain 0 and 1, got '" +
                                        std::string(1, c) + "'");
        }
        bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return Word(bits, static_cast<int>(text.size()));
}

int Word::bit(int pos) const {
    if (pos < 1 || pos > length_) {
        throw std::out_of_range("word position " + std::to_string(pos) +
                                " outside [1, " + std::to_string(length_) + "]");
    }
    return static_cast<int>((bits_ >> (length_ - pos)) & 1);
}

int Word::popcount() const { return std::popcount(bits_); }

Word Word::append(int bit) const {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("appended letter must be 0 or 1");
    }
    if (length_ + 1 > kMaxLength) {
        throw std::invalid_argument("cannot append beyond 64 letters");
    }
    return Word((bits_ << 1) | static_cast<std::uint64_t>(bit), length_ + 1);
}

Word Word::append(int hi, int lo) const { return append(hi).append(lo); }

std::string Word::str() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i) {
        if ((bits_ >> (length_ - 1 - i)) & 1) {
            s[static_cast<std::size_t>(i)] = '1';
        }
    }
    return s;
}

bool adjacent(const Word& u, const Word& v) {
    require_same_length(u, v, "adjacent");
    return adjacent_raw(u.raw(), v.raw(), u.length());
}

std::vector<Word> neighbors(const Word& u) {
    const int n = u.length();
    std::vector<Word> out;
    out.reserve(1 + static_cast<std::size_t>(std::popcount(swappable_pairs(u.raw(), n))));
    for_each_neighbor_raw(u.raw(), n, [&](std::uint64_t w) { out.emplace_back(w, n); });
    return out;
}

std::string to_string(Gap g) {
    switch (g) {
        case Gap::kZero: return "0";
        case Gap::kOne: return "1";
        case Gap::kTwo: return "2";
        case Gap::kMore: return "MORE";
    }
    throw std::invalid_argument("unknown gap value");
}

Gap gap(const Word& u, const Word& v) {
    require_same_length(u, v, "gap");
    const int n = u.length();
    const std::uint64_t a = u.raw();
    const std::uint64_t b = v.raw();
    if (a == b) {
        return Gap::kZero;
    }
    if (adjacent_raw(a, b, n)) {
        return Gap::kOne;
    }
    bool shared = false;
    for_each_neighbor_raw(a, n, [&](std::uint64_t w) {
        if (!shared && adjacent_raw(w, b, n)) {
            shared = true;
        }
    });
    return shared ? Gap::kTwo : Gap::kMore;
}

int distance_bfs(const Word& u, const Word& v) {
    require_same_length(u, v, "distance_bfs");
    const int n = u.length();
    if (n > oracle_cap()) {
        throw std::invalid_argument("distance_bfs is a reference search; length " +
                                    std::to_string(n) + " exceeds the cap of " +
                                    std::to_string(oracle_cap()));
    }
    if (u.raw() == v.raw()) {
        return 0;
    }
    std::vector<int> dist(std::size_t{1} << n, -1);
    std::queue<std::uint64_t> frontier;
    dist[u.raw()] = 0;
    frontier.push(u.raw());
    while (!frontier.empty()) {
        const std::uint64_t cur = frontier.front();
        frontier.pop();
        const int d = dist[cur];
        bool done = false;
        for_each_neighbor_raw(cur, n, [&](std::uint64_t w) {
            if (done || dist[w] >= 0) {
                return;
            }
            if (w == v.raw()) {
                done = true;
                return;
            }
            dist[w] = d + 1;
            frontier.push(w);
        });
        if (done) {
            return d + 1;
        }
    }
    // The graph is connected, so this is unreachable for sound inputs.
    throw std::logic_error("distance_bfs: target not reached");
}

int oracle_cap() {
    constexpr int kDefault = 14;
    const char* env = std::getenv("GRAYCODE_ORACLE_CAP");
    if (env == nullptr) {
        return kDefault;
    }
    const std::string_view text(env);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        return kDefault;
    }
    if (value < 1 || value > 26) {
        return kDefault;
    }
    return value;
}

std::vector<Word> all_words(int length) {
    if (length < 1 || length > 26) {
        throw std::invalid_argument("all_words materialises 2^n entries; length must be in [1, 26]");
    }
    std::vector<Word> out;
    out.reserve(std::size_t{1} << length);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << length); ++bits) {
        out.emplace_back(bits, length);
    }
    return out;
}

}  // namespace graycode
