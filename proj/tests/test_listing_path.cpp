#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "graycode/errors.hpp"
#include "graycode/listing_path.hpp"
#include "graycode/verify.hpp"

using namespace graycode;

namespace {

void check_complete_by_sorting(const Listing& listing) {
    std::vector<std::uint64_t> sorted = listing.raw();
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint64_t> expected(std::size_t{1} << listing.word_length());
    std::iota(expected.begin(), expected.end(), 0);
    CHECK(sorted == expected);
}

Listing listing_of(std::initializer_list<const char*> words) {
    Listing out(static_cast<int>(std::string_view(*words.begin()).size()));
    for (const char* w : words) {
        out.push_back(Word::parse(w));
    }
    return out;
}

}  // namespace

TEST_SUITE("listing_path") {

TEST_CASE("base listings match the references") {
    CHECK(base_path(2) == fixtures::make_listing(fixtures::kPathWords2));
    CHECK(base_path(3) == fixtures::make_listing(fixtures::kPathWords3));
    CHECK(base_path(4) == fixtures::make_listing(fixtures::kPathWords4));
    CHECK_THROWS_AS((void)base_path(1), std::invalid_argument);
    CHECK_THROWS_AS((void)base_path(5), std::invalid_argument);
}

TEST_CASE("anchor location and case selection") {
    const CaseSelector sel3 = locate_m_n(base_path(3));
    CHECK(sel3.m_index == 4);   // 110
    CHECK(sel3.n_index == 6);   // 001
    CHECK(sel3.case_id == 4);

    const CaseSelector sel4 = locate_m_n(base_path(4));
    CHECK(sel4.m_index == 10);  // 1110
    CHECK(sel4.n_index == 7);   // 0001
    CHECK(sel4.case_id == 1);

    const CaseSelector sel2 = locate_m_n(base_path(2));
    CHECK(sel2.m_index == 2);   // 10
    CHECK(sel2.n_index == 3);   // 01
    CHECK(sel2.case_id == 3);
}

TEST_CASE("anchor location rejects broken inner listings") {
    CHECK_THROWS_AS((void)locate_m_n(listing_of({"000", "010", "011", "111"})),
                    InvariantError);  // 110 never appears
    CHECK_THROWS_AS((void)locate_m_n(listing_of({"000", "110", "001", "010", "011",
                                                 "100", "101", "111"})),
                    InvariantError);  // anchors only one apart
}

TEST_CASE("segments for the length-5 construction") {
    const Listing inner = base_path(3);
    const CaseSegments seg = build_case_segments(inner, locate_m_n(inner));
    CHECK(seg.case_id == 4);
    CHECK(seg.p00 == listing_of({"00000", "10000", "01000", "11000", "10100", "00100",
                                 "01100", "11100"}));
    CHECK(seg.upper == listing_of({"11010", "01010", "10010", "00010", "00001", "10001",
                                   "01001", "11001"}));
    CHECK(seg.zigzag == listing_of({"10101", "10110"}));
    CHECK(seg.lower == listing_of({"00110", "01110", "11110", "11101", "01101",
                                   "00101"}));
    CHECK(seg.p11 == listing_of({"00011", "10011", "01011", "11011", "10111", "00111",
                                 "01111", "11111"}));
}

TEST_CASE("zigzag segments alternate suffixes in same-prefix pairs") {
    for (int n = 3; n <= 11; ++n) {
        const Listing inner = path_listing(n);
        const CaseSelector sel = locate_m_n(inner);
        const CaseSegments seg = build_case_segments(inner, sel);

        const std::size_t diff = (sel.m_index > sel.n_index)
                                     ? sel.m_index - sel.n_index
                                     : sel.n_index - sel.m_index;
        std::size_t expected = 2 * (diff - 1);
        if (sel.case_id == 3) {
            expected -= 1;  // the moved entry now ends the Lower block
        }
        CHECK(seg.zigzag.size() == expected);

        // Full pairs share their first n letters, carry suffixes 01 and 10
        // in one order or the other, and are one swap apart.
        for (std::size_t k = 0; k + 1 < seg.zigzag.size(); k += 2) {
            const Word a = seg.zigzag.at(k);
            const Word b = seg.zigzag.at(k + 1);
            CHECK((a.raw() >> 2) == (b.raw() >> 2));
            CHECK((a.raw() & 3) + (b.raw() & 3) == 3);  // {01, 10}
            CHECK(gap(a, b) == Gap::kOne);
        }
        // The two halves of each segment agree on the word count.
        CHECK(seg.p00.size() == inner.size());
        CHECK(seg.p11.size() == inner.size());
    }
}

TEST_CASE("case construction reproduces the length-5 reference") {
    const Listing inner = base_path(3);
    CHECK(build_case(inner, locate_m_n(inner)) ==
          fixtures::make_listing(fixtures::kPathWords5));
}

TEST_CASE("case construction validates its input") {
    // Reverse of a valid listing: complete, but starts at 111.
    Listing reversed(3);
    const auto& raw = base_path(3).raw();
    for (std::size_t k = raw.size(); k-- > 0;) {
        reversed.push_back_raw(raw[k]);
    }
    CHECK_THROWS_AS((void)build_case(reversed, locate_m_n(reversed)), InvariantError);

    // A tampered selector is rejected outright.
    const Listing inner = base_path(3);
    CaseSelector sel = locate_m_n(inner);
    sel.case_id = 1;
    CHECK_THROWS_AS((void)build_case_segments(inner, sel), std::invalid_argument);
}

TEST_CASE("full listings match the references up to length 5") {
    CHECK(path_listing(2) == fixtures::make_listing(fixtures::kPathWords2));
    CHECK(path_listing(3) == fixtures::make_listing(fixtures::kPathWords3));
    CHECK(path_listing(4) == fixtures::make_listing(fixtures::kPathWords4));
    CHECK(path_listing(5) == fixtures::make_listing(fixtures::kPathWords5));
    CHECK_THROWS_AS((void)path_listing(1), std::invalid_argument);
}

TEST_CASE("longer listings cover every word exactly once") {
    for (int n = 6; n <= 12; ++n) {
        const Listing listing = path_listing(n);
        REQUIRE(listing.size() == (std::size_t{1} << n));
        check_complete_by_sorting(listing);
    }
}

TEST_CASE("length-7 listing passes the path property bundle") {
    const Listing listing = path_listing(7);
    REQUIRE(listing.size() == 128);
    CHECK(check_coverage(listing).passed);
    CHECK(all_passed(check_binary_properties(listing, PropertySet::kC)));
}

TEST_CASE("validation level does not change the output") {
    CHECK(path_listing(9, ValidationMode::kEveryLevel) ==
          path_listing(9, ValidationMode::kFinalOnly));
    CHECK(path_listing(10, ValidationMode::kEveryLevel) ==
          path_listing(10, ValidationMode::kFinalOnly));
}

}  // TEST_SUITE
