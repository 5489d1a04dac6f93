// listing_cycle.hpp -- the cycle-like Gray code listing of binary words

#pragma once

#include <cstddef>

#include "graycode/listing.hpp"

namespace graycode {

/// How much structural checking the listing builders do while working.
/// kEveryLevel re-verifies the inductive properties after each extension
/// step; kFinalOnly checks the finished listing once. The top-level result
/// is always verified.
enum class ValidationMode { kFinalOnly, kEveryLevel };

/// kEveryLevel in debug builds, kFinalOnly otherwise.
[[nodiscard]] ValidationMode default_validation();

/// The hand-rolled cycle listings for n in {1, 2, 3}. Everything longer is
/// grown from these by the two extension steps below.
[[nodiscard]] Listing base_cycle(int n);

/// 1-based index i such that listing[i] == first and listing[i+1] == second.
/// The pair is required to exist; its absence means a construction invariant
/// broke, so the error is InvariantError rather than invalid_argument.
[[nodiscard]] std::size_t find_pair(const Listing& listing, const Word& first,
                                    const Word& second);

/// Doubles a full listing of odd length m >= 3 into one of length m+1:
/// entries 1..i get a 0 appended, then the whole listing reversed gets a 1
/// appended, then entries i+1..2^m get a 0 appended, where i is the position
/// of the adjacent pair (10...01, 00...01).
[[nodiscard]] Listing extend_odd_to_even(const Listing& listing,
                                         bool validate_input = true);

/// Doubles a full listing of even length m >= 4 into one of length m+1:
/// entries 1..i get a 0 appended, then the listing rotated one step (last
/// entry first) gets a 1 appended, then entries i+1..2^m get a 0 appended,
/// where i is the position of the adjacent pair (10...01, 0010...01).
[[nodiscard]] Listing extend_even_to_odd(const Listing& listing,
                                         bool validate_input = true);

/// The full cycle listing of all 2^n words of length n, built from
/// base_cycle(3) by alternating the two extension steps (base_cycle handles
/// n <= 3 directly). The result starts at 00...0, ends at 10...0, and walks
/// the augmentation graph with gaps 1 or 2, never two 2s in a row.
[[nodiscard]] Listing cycle_listing(int n, ValidationMode mode = default_validation());

/// Random access to cycle_listing(n) without materialising it: only the
/// listing one level below is stored, and each entry of the top level is
/// computed from it on demand. Halves the memory needed to stream large n.
class CycleListingStream {
  public:
    explicit CycleListingStream(int n, ValidationMode mode = default_validation());

    [[nodiscard]] int word_length() const { return word_length_; }
    [[nodiscard]] std::size_t size() const;

    /// Entry at 0-based index, in O(1).
    [[nodiscard]] Word at(std::size_t index) const;

  private:
    int word_length_;
    Listing below_;          // the level being extended (or the result itself)
    bool direct_ = false;    // below_ already is the requested listing
    bool odd_to_even_ = false;
    std::size_t split_ = 0;  // 1-based pair position i in below_
};

}  // namespace graycode
