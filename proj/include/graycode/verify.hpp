// verify.hpp -- structural property checks for word and permutation listings

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graycode/bitword.hpp"
#include "graycode/gilbreath.hpp"
#include "graycode/listing.hpp"

namespace graycode {

/// Named bundles of listing properties.
///   kL: generic Gray listing (endpoints 0...0 / 10...0, gaps in {1,2},
///       no two 2s in a row) -- any word length.
///   kA: kL plus the odd-length extension requirements (the adjacent pair
///       10...01, 00...01 appears; second-to-last entry is 0010...0) --
///       odd lengths >= 3 only.
///   kB: kL plus the even-length requirements (the adjacent pair 10...01,
///       0010...01 appears; second-to-last entry is 0010...0) -- even
///       lengths >= 4 only.
///   kC: path listing shape (entries 1, 2 and last are 0...0, 10...0,
///       1...1; gaps in {1,2}; no two 2s in a row; 0...01 sits right after
///       a gap-1 step) -- any word length.
///   kP: permutation Gray code, cycle flavour (starts at identity, ends at
///       21345...n, neighbour-swap gaps in {1,2}, no two 2s in a row).
///   kQ: permutation Gray code, path flavour (starts at identity, ends at
///       the reversal, same gap conditions).
enum class PropertySet { kL, kA, kB, kC, kP, kQ };

/// Parses "L", "A", "B", "C", "P", "Q" (case-insensitive).
[[nodiscard]] PropertySet property_set_from_name(std::string_view name);

/// Where a check first failed. index is the 1-based listing position the
/// failure is anchored at; index 0 means the listing as a whole (e.g. a
/// wrong entry count).
struct Counterexample {
    std::size_t index = 0;
    std::string details;
};

struct PropertyReport {
    std::string property_id;
    bool passed = true;
    std::optional<Counterexample> counterexample;  // engaged iff !passed
};

/// Whether the required adjacent pair of the A/B sets must appear exactly
/// in the stated order or may appear reversed.
enum class PairOrder { kOrdered, kEitherOrder };

/// Checks that a listing hits every word of its length exactly once.
[[nodiscard]] PropertyReport check_coverage(const Listing& listing);

/// Runs one property set against a word listing. Sets kA/kB reject word
/// lengths outside their parity domain with invalid_argument. The listing
/// should already have passed check_coverage; the pair/anchor checks assume
/// each word appears at most once.
[[nodiscard]] std::vector<PropertyReport> check_binary_properties(
    const Listing& listing, PropertySet set, PairOrder order = PairOrder::kOrdered);

/// Runs set kP or kQ against a permutation listing. All entries must share
/// one size and be pairwise distinct (invalid_argument otherwise).
[[nodiscard]] std::vector<PropertyReport> check_perm_properties(
    std::span<const Permutation> listing, PropertySet set);

/// Gaps between consecutive entries: profile[i] = gap(entry i+1, entry i+2)
/// in 1-based terms. Size is listing.size() - 1.
using GapProfile = std::vector<Gap>;
[[nodiscard]] GapProfile gap_profile(const Listing& listing);

/// One line per report: "<ID> PASS" or "<ID> FAIL @index=<i> <details>".
[[nodiscard]] std::string render_reports(std::span<const PropertyReport> reports);

[[nodiscard]] bool all_passed(std::span<const PropertyReport> reports);

/// Convenience for the builders: coverage plus the given set, throwing
/// InvariantError with the first failing report when anything is off.
void require_properties(const Listing& listing, PropertySet set,
                        std::string_view context);

}  // namespace graycode
