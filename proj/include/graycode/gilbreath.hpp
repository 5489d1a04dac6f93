// gilbreath.hpp -- Gilbreath permutations and the word <-> permutation bijection

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graycode/bitword.hpp"
#include "graycode/listing.hpp"

namespace graycode {

/// A permutation of {1, ..., n} in one-line notation, 1-based.
class Permutation {
  public:
    /// values must be a rearrangement of 1..n for some n >= 1.
    explicit Permutation(std::vector<int> values);

    static Permutation identity(int n);
    static Permutation reversed_identity(int n);

    /// Accepts either space-separated values ("5 4 6 7 3 8 2 1") or, for
    /// sizes up to 9, a compact digit string ("54673821").
    static Permutation parse(std::string_view text);

    [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }

    /// Value at 1-based position pos.
    [[nodiscard]] int at(int pos) const;

    [[nodiscard]] std::span<const int> values() const { return values_; }

    /// Canonical space-separated form, e.g. "5 4 6 7 3 8 2 1".
    [[nodiscard]] std::string str() const;

    /// Compact digit form, only for size() <= 9.
    [[nodiscard]] std::string compact_str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> values_;
};

/// The permutation with the same relative order as the given distinct
/// integers: standardize({4, 7, 2}) == (2, 3, 1).
[[nodiscard]] Permutation standardize(std::span<const int> sequence);

/// True when some subsequence of perm is order-isomorphic to pattern.
[[nodiscard]] bool contains_pattern(const Permutation& perm, const Permutation& pattern);

/// Largest size enumerate_avoiders accepts; n! growth makes bigger sizes
/// useless as an oracle.
inline constexpr int kAvoiderEnumerationCap = 10;

/// All permutations of size n avoiding every given pattern, in
/// lexicographic order. Brute force over n!, intended as a reference.
[[nodiscard]] std::vector<Permutation> enumerate_avoiders(
    int n, std::span<const Permutation> patterns);

/// Maps a word of length n-1 to a permutation of size n that avoids both
/// 132 and 312 (a Gilbreath permutation). The first value is one more than
/// the number of 1s; after a 0 at position i the next value continues
/// upward from the first (first value plus the count of 0s so far), and
/// after a 1 at position i the next value is the count of 1s at positions
/// i..n-1. Bijective onto the 132/312-avoiders.
[[nodiscard]] Permutation psi(const Word& word);

/// Inverse of psi: letter i is 1 exactly when the permutation value at
/// position i+1 is below the first value. Rejects permutations outside the
/// image (anything containing 132 or 312).
[[nodiscard]] Word psi_inv(const Permutation& perm);

/// Coarse distance in the graph joining permutations that differ by one
/// swap of neighbouring positions: kTwo means "not one swap apart but some
/// permutation is one swap from both", kMore means farther than that.
enum class PermGap : int { kZero = 0, kOne = 1, kTwo = 2, kMore = 3 };

[[nodiscard]] std::string to_string(PermGap g);

[[nodiscard]] PermGap perm_gap(const Permutation& a, const Permutation& b);

enum class ListingVariant { kCycle, kPath };

/// The image of the cycle or path word listing under psi: a Gray code for
/// the Gilbreath permutations of size n >= 2, where consecutive entries are
/// one or two neighbour swaps apart. Both variants use the forced listing
/// (0, 1) when n == 2.
[[nodiscard]] std::vector<Permutation> perm_listing(int n, ListingVariant variant);

}  // namespace graycode
