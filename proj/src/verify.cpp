#include "graycode/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "graycode/errors.hpp"

namespace graycode {

namespace {

// --- target words the A/B/C sets are anchored at ------------------------

Word first_one_word(int n) {  // 10...0
    return Word(std::uint64_t{1} << (n - 1), n);
}

Word last_one_word(int n) {  // 0...01
    return Word(1, n);
}

Word ten_to_one_word(int n) {  // 10...01 (needs n >= 2)
    if (n < 2) {
        throw std::invalid_argument("word 10...01 needs length >= 2");
    }
    return Word((std::uint64_t{1} << (n - 1)) | 1, n);
}

Word third_one_word(int n) {  // 0010...0 (needs n >= 3)
    if (n < 3) {
        throw std::invalid_argument("word 0010...0 needs length >= 3");
    }
    return Word(std::uint64_t{1} << (n - 3), n);
}

Word third_and_last_one_word(int n) {  // 0010...01 (needs n >= 4)
    if (n < 4) {
        throw std::invalid_argument("word 0010...01 needs length >= 4");
    }
    return Word((std::uint64_t{1} << (n - 3)) | 1, n);
}

// --- report helpers ------------------------------------------------------

PropertyReport pass(std::string id) { return {std::move(id), true, std::nullopt}; }

PropertyReport fail(std::string id, std::size_t index, std::string details) {
    return {std::move(id), false, Counterexample{index, std::move(details)}};
}

// 1-based position of the word, or 0 when absent. Assumes at most one
// occurrence matters (listings are checked for coverage first).
std::size_t position_of(const Listing& listing, const Word& w) {
    const auto& raw = listing.raw();
    const auto it = std::find(raw.begin(), raw.end(), w.raw());
    if (it == raw.end()) {
        return 0;
    }
    return static_cast<std::size_t>(it - raw.begin()) + 1;
}

PropertyReport check_endpoints(const Listing& listing, std::string id,
                               const Word& want_first, const Word& want_last) {
    if (listing.empty()) {
        return fail(std::move(id), 0, "listing is empty");
    }
    if (listing.front() != want_first) {
        return fail(std::move(id), 1,
                    "first entry is " + listing.front().str() + ", expected " +
                        want_first.str());
    }
    if (listing.back() != want_last) {
        return fail(std::move(id), listing.size(),
                    "last entry is " + listing.back().str() + ", expected " +
                        want_last.str());
    }
    return pass(std::move(id));
}

// Gap bound and the no-consecutive-2 rule share one profile scan. The
// consecutive check looks at gap pairs (g_{i-1}, g_i) only, so nothing is
// read past either end of the listing.
PropertyReport check_gaps_bounded(const GapProfile& gaps, const Listing& listing,
                                  std::string id) {
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] != Gap::kOne && gaps[i] != Gap::kTwo) {
            return fail(std::move(id), i + 1,
                        "gap between " + listing.at(i).str() + " and " +
                            listing.at(i + 1).str() + " is " + to_string(gaps[i]) +
                            ", expected 1 or 2");
        }
    }
    return pass(std::move(id));
}

PropertyReport check_no_consecutive_twos(const GapProfile& gaps, const Listing& listing,
                                         std::string id) {
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
        if (gaps[i] == Gap::kTwo && gaps[i + 1] == Gap::kTwo) {
            return fail(std::move(id), i + 2,
                        "two gap-2 steps in a row around " + listing.at(i + 1).str());
        }
    }
    return pass(std::move(id));
}

// A2/B2 bundle both gap conditions under one label.
PropertyReport check_gaps_combined(const GapProfile& gaps, const Listing& listing,
                                   std::string id) {
    PropertyReport bounded = check_gaps_bounded(gaps, listing, id);
    if (!bounded.passed) {
        return bounded;
    }
    return check_no_consecutive_twos(gaps, listing, std::move(id));
}

PropertyReport check_pair(const Listing& listing, std::string id, const Word& first,
                          const Word& second, PairOrder order) {
    const std::size_t p = position_of(listing, first);
    if (p == 0) {
        return fail(std::move(id), 0, "word " + first.str() + " does not appear");
    }
    if (p < listing.size() && listing.at(p) == second) {
        return pass(std::move(id));
    }
    if (order == PairOrder::kEitherOrder && p >= 2 && listing.at(p - 2) == second) {
        return pass(std::move(id));
    }
    std::string expectation = "expected " + second.str() + " right after";
    if (order == PairOrder::kEitherOrder) {
        expectation += " or before";
    }
    return fail(std::move(id), p,
                first.str() + " at position " + std::to_string(p) + " is not next to " +
                    second.str() + " (" + expectation + ")");
}

PropertyReport check_second_to_last(const Listing& listing, std::string id,
                                    const Word& want) {
    if (listing.size() < 2) {
        return fail(std::move(id), 0, "listing has fewer than two entries");
    }
    const Word got = listing.at(listing.size() - 2);
    if (got != want) {
        return fail(std::move(id), listing.size() - 1,
                    "second-to-last entry is " + got.str() + ", expected " + want.str());
    }
    return pass(std::move(id));
}

PropertyReport check_path_endpoints(const Listing& listing) {
    const int n = listing.word_length();
    PropertyReport r = check_endpoints(listing, "C1", Word::zeros(n), Word::ones(n));
    if (!r.passed) {
        return r;
    }
    if (listing.size() < 2 || listing.at(1) != first_one_word(n)) {
        const std::string got = listing.size() < 2 ? "missing" : listing.at(1).str();
        return fail("C1", 2,
                    "second entry is " + got + ", expected " + first_one_word(n).str());
    }
    return pass("C1");
}

// The word 0...01 must follow its predecessor at distance exactly 1. The
// requirement is stated for positions up to 2^n - 1 only, so 0...01 in the
// last slot constrains nothing.
PropertyReport check_predecessor_of_last_one(const Listing& listing,
                                             const GapProfile& gaps) {
    const std::size_t t = position_of(listing, last_one_word(listing.word_length()));
    if (t == 0) {
        return fail("C4", 0,
                    "word " + last_one_word(listing.word_length()).str() +
                        " does not appear");
    }
    if (t == listing.size()) {
        return pass("C4");
    }
    if (t == 1) {
        return fail("C4", 1,
                    last_one_word(listing.word_length()).str() +
                        " is the first entry and has no predecessor");
    }
    if (gaps[t - 2] != Gap::kOne) {
        return fail("C4", t,
                    "gap between " + listing.at(t - 2).str() + " and " +
                        listing.at(t - 1).str() + " is " + to_string(gaps[t - 2]) +
                        ", expected 1");
    }
    return pass("C4");
}

}  // namespace

PropertySet property_set_from_name(std::string_view name) {
    if (name.size() == 1) {
        switch (name[0]) {
            case 'L': case 'l': return PropertySet::kL;
            case 'A': case 'a': return PropertySet::kA;
            case 'B': case 'b': return PropertySet::kB;
            case 'C': case 'c': return PropertySet::kC;
            case 'P': case 'p': return PropertySet::kP;
            case 'Q': case 'q': return PropertySet::kQ;
            default: break;
        }
    }
    throw std::invalid_argument("unknown property set \"" + std::string(name) +
                                "\" (expected one of L, A, B, C, P, Q)");
}

PropertyReport check_coverage(const Listing& listing) {
    const int n = listing.word_length();
    const std::size_t expected = std::size_t{1} << n;
    // Presence bitmap for small lengths, sort for anything bigger.
    if (n <= 28) {
        std::vector<bool> seen(expected, false);
        for (std::size_t i = 0; i < listing.raw().size(); ++i) {
            const std::uint64_t bits = listing.raw()[i];
            if (seen[bits]) {
                return fail("COVERAGE", i + 1,
                            "entry " + listing.at(i).str() + " appeared earlier");
            }
            seen[bits] = true;
        }
    } else {
        std::vector<std::uint64_t> sorted = listing.raw();
        std::sort(sorted.begin(), sorted.end());
        const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            const auto& raw = listing.raw();
            const auto second = std::find(std::find(raw.begin(), raw.end(), *dup) + 1,
                                          raw.end(), *dup);
            const std::size_t index = static_cast<std::size_t>(second - raw.begin()) + 1;
            return fail("COVERAGE", index,
                        "entry " + Word(*dup, n).str() + " appeared earlier");
        }
    }
    if (listing.size() != expected) {
        return fail("COVERAGE", 0,
                    "listing has " + std::to_string(listing.size()) + " entries, expected " +
                        std::to_string(expected));
    }
    return pass("COVERAGE");
}

std::vector<PropertyReport> check_binary_properties(const Listing& listing,
                                                    PropertySet set, PairOrder order) {
    const int n = listing.word_length();
    std::vector<PropertyReport> out;
    const GapProfile gaps = gap_profile(listing);

    switch (set) {
        case PropertySet::kL:
            out.push_back(check_endpoints(listing, "L1", Word::zeros(n), first_one_word(n)));
            out.push_back(check_gaps_bounded(gaps, listing, "L2"));
            out.push_back(check_no_consecutive_twos(gaps, listing, "L3"));
            break;
        case PropertySet::kA:
            if (n < 3 || n % 2 == 0) {
                throw std::invalid_argument(
                    "property set A applies to odd word lengths >= 3, not " +
                    std::to_string(n));
            }
            out.push_back(check_endpoints(listing, "A1", Word::zeros(n), first_one_word(n)));
            out.push_back(check_gaps_combined(gaps, listing, "A2"));
            out.push_back(check_pair(listing, "A3", ten_to_one_word(n), last_one_word(n),
                                     order));
            out.push_back(check_second_to_last(listing, "A4", third_one_word(n)));
            break;
        case PropertySet::kB:
            if (n < 4 || n % 2 == 1) {
                throw std::invalid_argument(
                    "property set B applies to even word lengths >= 4, not " +
                    std::to_string(n));
            }
            out.push_back(check_endpoints(listing, "B1", Word::zeros(n), first_one_word(n)));
            out.push_back(check_gaps_combined(gaps, listing, "B2"));
            out.push_back(check_pair(listing, "B3", ten_to_one_word(n),
                                     third_and_last_one_word(n), order));
            out.push_back(check_second_to_last(listing, "B4", third_one_word(n)));
            break;
        case PropertySet::kC:
            out.push_back(check_path_endpoints(listing));
            out.push_back(check_gaps_bounded(gaps, listing, "C2"));
            out.push_back(check_no_consecutive_twos(gaps, listing, "C3"));
            out.push_back(check_predecessor_of_last_one(listing, gaps));
            break;
        case PropertySet::kP:
        case PropertySet::kQ:
            throw std::invalid_argument(
                "sets P and Q apply to permutation listings; use check_perm_properties");
    }
    return out;
}

std::vector<PropertyReport> check_perm_properties(std::span<const Permutation> listing,
                                                  PropertySet set) {
    if (set != PropertySet::kP && set != PropertySet::kQ) {
        throw std::invalid_argument(
            "check_perm_properties handles sets P and Q only");
    }
    if (listing.empty()) {
        throw std::invalid_argument("empty permutation listing");
    }
    const int n = listing.front().size();
    for (const Permutation& p : listing) {
        if (p.size() != n) {
            throw std::invalid_argument("permutation sizes differ: " + std::to_string(n) +
                                        " vs " + std::to_string(p.size()));
        }
    }
    {
        std::vector<Permutation> sorted(listing.begin(), listing.end());
        std::sort(sorted.begin(), sorted.end());
        const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw std::invalid_argument("permutation " + dup->str() +
                                        " appears more than once");
        }
    }

    const bool cycle_flavour = (set == PropertySet::kP);
    const char* id1 = cycle_flavour ? "P1" : "Q1";
    const char* id2 = cycle_flavour ? "P2" : "Q2";
    const char* id3 = cycle_flavour ? "P3" : "Q3";

    std::vector<PropertyReport> out;

    // Endpoints: both flavours start at the identity; the cycle flavour ends
    // at 2134...n (first two values swapped), the path flavour at n...321.
    std::vector<int> last_values(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        last_values[static_cast<std::size_t>(i)] = cycle_flavour ? i + 1 : n - i;
    }
    if (cycle_flavour && n >= 2) {
        std::swap(last_values[0], last_values[1]);
    }
    const Permutation want_last{std::move(last_values)};
    const Permutation want_first = Permutation::identity(n);
    if (listing.front() != want_first) {
        out.push_back(fail(id1, 1,
                           "first entry is " + listing.front().str() + ", expected " +
                               want_first.str()));
    } else if (listing.back() != want_last) {
        out.push_back(fail(id1, listing.size(),
                           "last entry is " + listing.back().str() + ", expected " +
                               want_last.str()));
    } else {
        out.push_back(pass(id1));
    }

    std::vector<PermGap> gaps;
    gaps.reserve(listing.size() - 1);
    for (std::size_t i = 0; i + 1 < listing.size(); ++i) {
        gaps.push_back(perm_gap(listing[i], listing[i + 1]));
    }

    PropertyReport bounded = pass(id2);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] != PermGap::kOne && gaps[i] != PermGap::kTwo) {
            bounded = fail(id2, i + 1,
                           "gap between entries " + std::to_string(i + 1) + " and " +
                               std::to_string(i + 2) + " is " + to_string(gaps[i]) +
                               ", expected 1 or 2");
            break;
        }
    }
    out.push_back(std::move(bounded));

    PropertyReport spaced = pass(id3);
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
        if (gaps[i] == PermGap::kTwo && gaps[i + 1] == PermGap::kTwo) {
            spaced = fail(id3, i + 2,
                          "two gap-2 steps in a row around entry " + std::to_string(i + 2));
            break;
        }
    }
    out.push_back(std::move(spaced));

    return out;
}

GapProfile gap_profile(const Listing& listing) {
    GapProfile out;
    if (listing.size() < 2) {
        return out;
    }
    out.reserve(listing.size() - 1);
    for (std::size_t i = 0; i + 1 < listing.size(); ++i) {
        out.push_back(gap(listing.at(i), listing.at(i + 1)));
    }
    return out;
}

std::string render_reports(std::span<const PropertyReport> reports) {
    std::ostringstream out;
    for (const PropertyReport& r : reports) {
        out << r.property_id;
        if (r.passed) {
            out << " PASS";
        } else {
            out << " FAIL @index=" << r.counterexample->index << ' '
                << r.counterexample->details;
        }
        out << '\n';
    }
    return out.str();
}

bool all_passed(std::span<const PropertyReport> reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const PropertyReport& r) { return r.passed; });
}

void require_properties(const Listing& listing, PropertySet set,
                        std::string_view context) {
    std::vector<PropertyReport> reports;
    reports.push_back(check_coverage(listing));
    if (reports.front().passed) {
        auto more = check_binary_properties(listing, set);
        reports.insert(reports.end(), more.begin(), more.end());
    }
    for (const PropertyReport& r : reports) {
        if (!r.passed) {
            std::ostringstream msg;
            msg << context << ": " << r.property_id << " failed @index="
                << r.counterexample->index << ": " << r.counterexample->details;
            throw InvariantError(msg.str());
        }
    }
}

}  // namespace graycode
