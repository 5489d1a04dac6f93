// bitword.hpp -- fixed-length binary words and the augmentation graph

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace graycode {

/// A binary word of fixed length n, 1 <= n <= 64.
///
/// Positions are 1-based and count from the left, so position 1 of "100" is
/// 1. Internally position 1 is the most significant stored bit: "100" has
/// raw value 0b100. Two words are equal only if both bits and length agree.
class Word {
  public:
    static constexpr int kMaxLength = 64;

    Word(std::uint64_t bits, int length);

    static Word zeros(int length);
    static Word ones(int length);

    /// Parses a string over {'0','1'}; anything else is rejected.
    static Word parse(std::string_view text);

    [[nodiscard]] int length() const { return length_; }
    [[nodiscard]] std::uint64_t raw() const { return bits_; }

    /// Bit value at 1-based position pos, counted from the left.
    [[nodiscard]] int bit(int pos) const;

    /// Number of 1 bits.
    [[nodiscard]] int popcount() const;

    /// The word of length n+1 obtained by appending one bit on the right.
    [[nodiscard]] Word append(int bit) const;

    /// The word of length n+2 obtained by appending two bits on the right,
    /// `hi` first: append(1, 0) turns "01" into "0110".
    [[nodiscard]] Word append(int hi, int lo) const;

    [[nodiscard]] std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    // Orders by length first, then lexicographically within a length.
    friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

  private:
    int length_;
    std::uint64_t bits_;
};

/// True when u and v (same length required) are joined by an edge of the
/// augmentation graph: they differ exactly in position 1, or they differ
/// exactly in two neighbouring positions i, i+1 whose values are 0 and 1 in
/// one order in u and the other order in v.
[[nodiscard]] bool adjacent(const Word& u, const Word& v);

/// All graph neighbours of u: the position-1 flip first, then the pair
/// swaps from right to left. Size is 1 + #{i : u_i != u_{i+1}}.
[[nodiscard]] std::vector<Word> neighbors(const Word& u);

/// Coarse distance between two words: kTwo means "not adjacent but a common
/// neighbour exists", kMore means the true distance exceeds 2.
enum class Gap : int { kZero = 0, kOne = 1, kTwo = 2, kMore = 3 };

[[nodiscard]] std::string to_string(Gap g);

[[nodiscard]] Gap gap(const Word& u, const Word& v);

/// Exact graph distance by breadth-first search. Only intended as a slow
/// reference; refuses lengths above oracle_cap().
[[nodiscard]] int distance_bfs(const Word& u, const Word& v);

/// Maximum word length distance_bfs will accept. Defaults to 14; the
/// environment variable GRAYCODE_ORACLE_CAP overrides it (values outside
/// [1, 26] or unparseable text are ignored).
[[nodiscard]] int oracle_cap();

/// All 2^n words of the given length in increasing raw order. Materialises
/// the lot, so lengths above 26 are refused.
[[nodiscard]] std::vector<Word> all_words(int length);

}  // namespace graycode
