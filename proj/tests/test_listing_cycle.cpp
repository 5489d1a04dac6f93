#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "graycode/errors.hpp"
#include "graycode/listing_cycle.hpp"
#include "graycode/verify.hpp"

using namespace graycode;

namespace {

// Coverage check by sorting, independent of the verify module's bitmap.
void check_complete_by_sorting(const Listing& listing) {
    std::vector<std::uint64_t> sorted = listing.raw();
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint64_t> expected(std::size_t{1} << listing.word_length());
    std::iota(expected.begin(), expected.end(), 0);
    CHECK(sorted == expected);
}

}  // namespace

TEST_SUITE("listing_cycle") {

TEST_CASE("base listings match the references") {
    CHECK(base_cycle(1).raw() == std::vector<std::uint64_t>{0, 1});
    CHECK(base_cycle(2) == fixtures::make_listing(fixtures::kCycleWords2));
    CHECK(base_cycle(3) == fixtures::make_listing(fixtures::kCycleWords3));
    CHECK_THROWS_AS((void)base_cycle(0), std::invalid_argument);
    CHECK_THROWS_AS((void)base_cycle(4), std::invalid_argument);
}

TEST_CASE("find_pair locates the required adjacent pair") {
    CHECK(find_pair(base_cycle(3), Word::parse("101"), Word::parse("001")) == 6);
    CHECK(find_pair(fixtures::make_listing(fixtures::kCycleWords4), Word::parse("1001"),
                    Word::parse("0011")) == 7);
    CHECK(find_pair(base_cycle(2), Word::parse("01"), Word::parse("11")) == 2);
    CHECK_THROWS_AS((void)find_pair(base_cycle(3), Word::parse("001"), Word::parse("101")),
                    InvariantError);
    CHECK_THROWS_AS(
        (void)find_pair(base_cycle(3), Word::parse("0011"), Word::parse("0001")),
        std::invalid_argument);
}

TEST_CASE("odd-to-even doubling reproduces the length-4 reference") {
    CHECK(extend_odd_to_even(base_cycle(3)) ==
          fixtures::make_listing(fixtures::kCycleWords4));
}

TEST_CASE("even-to-odd doubling reproduces the length-5 reference") {
    CHECK(extend_even_to_odd(fixtures::make_listing(fixtures::kCycleWords4)) ==
          fixtures::make_listing(fixtures::kCycleWords5));
}

TEST_CASE("doubling steps reject inputs of the wrong shape") {
    CHECK_THROWS_AS((void)extend_odd_to_even(base_cycle(2)), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)extend_odd_to_even(fixtures::make_listing(fixtures::kCycleWords4)),
        std::invalid_argument);
    CHECK_THROWS_AS((void)extend_even_to_odd(base_cycle(3)), std::invalid_argument);

    Listing partial(3);
    partial.push_back(Word::parse("000"));
    partial.push_back(Word::parse("100"));
    CHECK_THROWS_AS((void)extend_odd_to_even(partial), std::invalid_argument);
}

TEST_CASE("doubling steps validate the inductive properties of their input") {
    // Full and covering, but the endpoints are wrong: a rotation of the
    // length-3 base.
    Listing rotated(3);
    const Listing base = base_cycle(3);
    const auto& raw = base.raw();
    for (std::size_t k = 1; k <= raw.size(); ++k) {
        rotated.push_back_raw(raw[k % raw.size()]);
    }
    CHECK_THROWS_AS((void)extend_odd_to_even(rotated), InvariantError);
    CHECK_NOTHROW((void)extend_odd_to_even(base_cycle(3), false));
}

TEST_CASE("full listings match the references up to length 5") {
    CHECK(cycle_listing(1).raw() == std::vector<std::uint64_t>{0, 1});
    CHECK(cycle_listing(2) == fixtures::make_listing(fixtures::kCycleWords2));
    CHECK(cycle_listing(3) == fixtures::make_listing(fixtures::kCycleWords3));
    CHECK(cycle_listing(4) == fixtures::make_listing(fixtures::kCycleWords4));
    CHECK(cycle_listing(5) == fixtures::make_listing(fixtures::kCycleWords5));
    CHECK_THROWS_AS((void)cycle_listing(0), std::invalid_argument);
}

TEST_CASE("longer listings cover every word exactly once") {
    for (int n = 6; n <= 12; ++n) {
        const Listing listing = cycle_listing(n);
        REQUIRE(listing.size() == (std::size_t{1} << n));
        check_complete_by_sorting(listing);
    }
}

TEST_CASE("length-6 listing passes the even-length property bundle") {
    const Listing listing = cycle_listing(6);
    CHECK(all_passed(check_binary_properties(listing, PropertySet::kB)));
    CHECK(check_coverage(listing).passed);
}

TEST_CASE("validation level does not change the output") {
    CHECK(cycle_listing(9, ValidationMode::kEveryLevel) ==
          cycle_listing(9, ValidationMode::kFinalOnly));
    CHECK(cycle_listing(10, ValidationMode::kEveryLevel) ==
          cycle_listing(10, ValidationMode::kFinalOnly));
}

TEST_CASE("streamed entries equal the materialised listing") {
    for (int n = 1; n <= 9; ++n) {
        const CycleListingStream stream(n);
        const Listing listing = cycle_listing(n);
        REQUIRE(stream.size() == listing.size());
        CHECK(stream.word_length() == n);
        for (std::size_t i = 0; i < listing.size(); ++i) {
            CHECK(stream.at(i) == listing.at(i));
        }
        CHECK_THROWS_AS((void)stream.at(stream.size()), std::out_of_range);
    }
}

}  // TEST_SUITE
