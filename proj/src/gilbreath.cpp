#include "graycode/gilbreath.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "graycode/listing_cycle.hpp"
#include "graycode/listing_path.hpp"

namespace graycode {

namespace {

void require_bijection(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    if (n == 0) {
        throw std::invalid_argument("a permutation needs at least one value");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : values) {
        if (v < 1 || v > n) {
            throw std::invalid_argument("value " + std::to_string(v) +
                                        " outside 1.." + std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("value " + std::to_string(v) +
                                        " appears twice");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

// True when a and b differ by exactly one swap of neighbouring positions.
bool one_swap_apart(std::span<const int> a, std::span<const int> b) {
    const std::size_t n = a.size();
    std::size_t lo = n;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) {
            lo = i;
            break;
        }
    }
    if (lo + 1 >= n) {
        return false;  // no difference, or a lone difference at the end
    }
    if (a[lo] != b[lo + 1] || a[lo + 1] != b[lo]) {
        return false;
    }
    for (std::size_t i = lo + 2; i < n; ++i) {
        if (a[i] != b[i]) {
            return false;
        }
    }
    return true;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    require_bijection(values_);
}

Permutation Permutation::identity(int n) {
    if (n < 1) {
        throw std::invalid_argument("permutation size must be positive");
    }
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    return Permutation(std::move(values));
}

Permutation Permutation::reversed_identity(int n) {
    if (n < 1) {
        throw std::invalid_argument("permutation size must be positive");
    }
    std::vector<int> values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i)] = n - i;
    }
    return Permutation(std::move(values));
}

Permutation Permutation::parse(std::string_view text) {
    const bool has_space =
        std::any_of(text.begin(), text.end(),
                    [](unsigned char c) { return std::isspace(c) != 0; });
    std::vector<int> values;
    if (has_space) {
        std::istringstream in{std::string(text)};
        int v = 0;
        while (in >> v) {
            values.push_back(v);
        }
        if (!in.eof()) {
            throw std::invalid_argument("cannot parse permutation \"" +
                                        std::string(text) + "\"");
        }
    } else {
        // Compact digit form: one value per character, sizes up to 9.
        for (char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument(
                    "compact permutation may only contain digits 1-9, got '" +
                    std::string(1, c) + "'");
            }
            values.push_back(c - '0');
        }
    }
    return Permutation(std::move(values));
}

int Permutation::at(int pos) const {
    if (pos < 1 || pos > size()) {
        throw std::out_of_range("permutation position " + std::to_string(pos) +
                                " outside [1, " + std::to_string(size()) + "]");
    }
    return values_[static_cast<std::size_t>(pos - 1)];
}

std::string Permutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += std::to_string(values_[i]);
    }
    return out;
}

std::string Permutation::compact_str() const {
    if (size() > 9) {
        throw std::invalid_argument("compact form only exists for sizes up to 9");
    }
    std::string out;
    for (int v : values_) {
        out += static_cast<char>('0' + v);
    }
    return out;
}

Permutation standardize(std::span<const int> sequence) {
    if (sequence.empty()) {
        throw std::invalid_argument("cannot standardize an empty sequence");
    }
    std::vector<int> sorted(sequence.begin(), sequence.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("cannot standardize a sequence with repeats");
    }
    std::vector<int> ranks(sequence.size());
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        const auto it = std::lower_bound(sorted.begin(), sorted.end(), sequence[i]);
        ranks[i] = static_cast<int>(it - sorted.begin()) + 1;
    }
    return Permutation(std::move(ranks));
}

bool contains_pattern(const Permutation& perm, const Permutation& pattern) {
    const int n = perm.size();
    const int k = pattern.size();
    if (k > n) {
        return false;
    }
    const std::span<const int> values = perm.values();
    const std::span<const int> pat = pattern.values();

    // Walk all index combinations i_1 < ... < i_k and compare relative
    // order directly, bailing out of a combination on the first clash.
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        bool match = true;
        for (int a = 0; match && a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                if ((values[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])] <
                     values[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])]) !=
                    (pat[static_cast<std::size_t>(a)] < pat[static_cast<std::size_t>(b)])) {
                    match = false;
                    break;
                }
            }
        }
        if (match) {
            return true;
        }
        // Advance the combination odometer.
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) {
            --pos;
        }
        if (pos < 0) {
            return false;
        }
        ++idx[static_cast<std::size_t>(pos)];
        for (int p = pos + 1; p < k; ++p) {
            idx[static_cast<std::size_t>(p)] = idx[static_cast<std::size_t>(p - 1)] + 1;
        }
    }
}

std::vector<Permutation> enumerate_avoiders(int n,
                                            std::span<const Permutation> patterns) {
    if (n < 1 || n > kAvoiderEnumerationCap) {
        throw std::invalid_argument("avoider enumeration walks n! permutations; size " +
                                    std::to_string(n) + " outside [1, " +
                                    std::to_string(kAvoiderEnumerationCap) + "]");
    }
    std::vector<int> values(static_cast<std::size_t>(n));
    std::iota(values.begin(), values.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation candidate(values);
        const bool avoids =
            std::none_of(patterns.begin(), patterns.end(), [&](const Permutation& p) {
                return contains_pattern(candidate, p);
            });
        if (avoids) {
            out.push_back(std::move(candidate));
        }
    } while (std::next_permutation(values.begin(), values.end()));
    return out;
}

Permutation psi(const Word& word) {
    const int len = word.length();
    const int ones_total = word.popcount();
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(len) + 1);
    values.push_back(ones_total + 1);
    int zeros_seen = 0;
    int ones_seen = 0;
    for (int i = 1; i <= len; ++i) {
        if (word.bit(i) == 0) {
            ++zeros_seen;
            values.push_back(ones_total + 1 + zeros_seen);
        } else {
            values.push_back(ones_total - ones_seen);
            ++ones_seen;
        }
    }
    return Permutation(std::move(values));
}

Word psi_inv(const Permutation& perm) {
    const int n = perm.size();
    if (n < 2) {
        throw std::invalid_argument("the bijection maps permutations of size >= 2");
    }
    if (n - 1 > Word::kMaxLength) {
        throw std::invalid_argument("permutation of size " + std::to_string(n) +
                                    " maps to a word longer than 64 letters");
    }
    static const Permutation kPattern132 = Permutation({1, 3, 2});
    static const Permutation kPattern312 = Permutation({3, 1, 2});
    if (contains_pattern(perm, kPattern132) || contains_pattern(perm, kPattern312)) {
        throw std::invalid_argument("permutation " + perm.str() +
                                    " contains 132 or 312, outside the bijection image");
    }
    const int first = perm.at(1);
    std::uint64_t bits = 0;
    for (int i = 2; i <= n; ++i) {
        bits = (bits << 1) | static_cast<std::uint64_t>(perm.at(i) < first);
    }
    const Word word(bits, n - 1);
    if (psi(word) != perm) {
        // The avoidance check above should make this unreachable, but the
        // round trip is cheap and is the actual definition of membership.
        throw std::invalid_argument("permutation " + perm.str() +
                                    " is not in the bijection image");
    }
    return word;
}

std::string to_string(PermGap g) {
    switch (g) {
        case PermGap::kZero: return "0";
        case PermGap::kOne: return "1";
        case PermGap::kTwo: return "2";
        case PermGap::kMore: return "MORE";
    }
    throw std::invalid_argument("unknown gap value");
}

PermGap perm_gap(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("perm_gap: sizes differ (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
    const std::span<const int> va = a.values();
    const std::span<const int> vb = b.values();
    if (std::equal(va.begin(), va.end(), vb.begin())) {
        return PermGap::kZero;
    }
    if (one_swap_apart(va, vb)) {
        return PermGap::kOne;
    }
    // Look for a middle permutation one neighbour swap from each side.
    std::vector<int> mid(va.begin(), va.end());
    for (std::size_t i = 0; i + 1 < mid.size(); ++i) {
        std::swap(mid[i], mid[i + 1]);
        if (one_swap_apart(mid, vb)) {
            return PermGap::kTwo;
        }
        std::swap(mid[i], mid[i + 1]);
    }
    return PermGap::kMore;
}

std::vector<Permutation> perm_listing(int n, ListingVariant variant) {
    if (n < 2 || n > Word::kMaxLength) {
        throw std::invalid_argument("permutation listing needs size in [2, 64], got " +
                                    std::to_string(n));
    }
    // Both variants ride on the forced listing (0, 1) when the words have
    // a single letter; the path construction proper starts at length 2.
    const Listing words = (variant == ListingVariant::kCycle || n == 2)
                              ? cycle_listing(n - 1)
                              : path_listing(n - 1);
    std::vector<Permutation> out;
    out.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        out.push_back(psi(words.at(i)));
    }
    return out;
}

}  // namespace graycode
