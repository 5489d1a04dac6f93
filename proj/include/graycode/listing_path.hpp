// listing_path.hpp -- the path-like Gray code listing of binary words

#pragma once

#include <cstddef>

#include "graycode/listing.hpp"
#include "graycode/listing_cycle.hpp"  // ValidationMode

namespace graycode {

/// Positions of the two anchor words inside an inner listing, plus the
/// recursion case they select. With eta_j the j-th entry (1-based), m_index
/// is where 1...10 sits and n_index is where 0...01 sits. The case number
/// encodes their order and the parity of the distance between them:
///   1: m_index > n_index, difference odd     2: m_index > n_index, even
///   3: m_index < n_index, difference odd     4: m_index < n_index, even
/// A sound inner listing always has |m_index - n_index| >= 2.
struct CaseSelector {
    std::size_t m_index = 0;
    std::size_t n_index = 0;
    int case_id = 0;
};

/// The five blocks a recursion step is assembled from, before concatenation.
/// Cases 1 and 2 glue them as p00, lower, zigzag, upper, p11; cases 3 and 4
/// as p00, upper, zigzag, lower, p11.
struct CaseSegments {
    Listing p00, lower, zigzag, upper, p11;
    int case_id = 0;
};

/// The hand-rolled path listings for n in {2, 3, 4}. Longer listings are
/// grown two letters at a time by build_case.
[[nodiscard]] Listing base_path(int n);

/// Finds the anchor words 1...10 and 0...01 in an inner listing and picks
/// the recursion case. Missing anchors or |m_index - n_index| < 2 indicate a
/// broken inner listing and raise InvariantError.
[[nodiscard]] CaseSelector locate_m_n(const Listing& inner);

/// Builds the five blocks for one recursion step over words two letters
/// longer than the inner listing. Exposed separately so the zigzag shape can
/// be inspected on its own.
[[nodiscard]] CaseSegments build_case_segments(const Listing& inner,
                                               const CaseSelector& selector);

/// One full recursion step: segments built and concatenated in case order.
[[nodiscard]] Listing build_case(const Listing& inner, const CaseSelector& selector,
                                 bool validate_input = true);

/// The full path listing of all 2^n words of length n >= 2, built from
/// base_path(3) or base_path(4) by parity. The result starts 00...0,
/// 10...0, ends at 11...1, walks the augmentation graph with gaps 1 or 2
/// (never two 2s in a row), and places 0...01 right after a gap-1 step.
[[nodiscard]] Listing path_listing(int n, ValidationMode mode = default_validation());

}  // namespace graycode
