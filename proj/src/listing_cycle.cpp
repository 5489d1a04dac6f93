#include "graycode/listing_cycle.hpp"

#include <stdexcept>
#include <string>

#include "graycode/errors.hpp"
#include "graycode/verify.hpp"

namespace graycode {

namespace {

Word ten_to_one_word(int n) {  // 10...01
    return Word((std::uint64_t{1} << (n - 1)) | 1, n);
}

Word last_one_word(int n) {  // 0...01
    return Word(1, n);
}

Word third_and_last_one_word(int n) {  // 0010...01
    return Word((std::uint64_t{1} << (n - 3)) | 1, n);
}

Listing from_strings(int n, std::initializer_list<const char*> words) {
    Listing out(n);
    out.reserve(words.size());
    for (const char* w : words) {
        out.push_back(Word::parse(w));
    }
    return out;
}

void require_full_odd(const Listing& listing, const char* who) {
    const int m = listing.word_length();
    if (m < 3 || m % 2 == 0) {
        throw std::invalid_argument(std::string(who) +
                                    " expects words of odd length >= 3, got length " +
                                    std::to_string(m));
    }
    if (listing.size() != (std::size_t{1} << m)) {
        throw std::invalid_argument(std::string(who) + " expects a full listing of 2^" +
                                    std::to_string(m) + " words, got " +
                                    std::to_string(listing.size()));
    }
}

void require_full_even(const Listing& listing, const char* who) {
    const int m = listing.word_length();
    if (m < 4 || m % 2 == 1) {
        throw std::invalid_argument(std::string(who) +
                                    " expects words of even length >= 4, got length " +
                                    std::to_string(m));
    }
    if (listing.size() != (std::size_t{1} << m)) {
        throw std::invalid_argument(std::string(who) + " expects a full listing of 2^" +
                                    std::to_string(m) + " words, got " +
                                    std::to_string(listing.size()));
    }
}

// Which property bundle a cycle listing of length n is expected to satisfy.
// Lengths 1 and 2 predate the inductive machinery, so only the generic
// endpoint/gap properties apply there.
PropertySet cycle_set_for(int n) {
    if (n >= 4 && n % 2 == 0) {
        return PropertySet::kB;
    }
    if (n >= 3) {
        return PropertySet::kA;
    }
    return PropertySet::kL;
}

}  // namespace

ValidationMode default_validation() {
#ifdef NDEBUG
    return ValidationMode::kFinalOnly;
#else
    return ValidationMode::kEveryLevel;
#endif
}

Listing base_cycle(int n) {
    switch (n) {
        case 1:
            return from_strings(1, {"0", "1"});
        case 2:
            return from_strings(2, {"00", "01", "11", "10"});
        case 3:
            return from_strings(3, {"000", "010", "110", "011", "111", "101", "001", "100"});
        default:
            throw std::invalid_argument("base_cycle covers lengths 1..3, got " +
                                        std::to_string(n));
    }
}

std::size_t find_pair(const Listing& listing, const Word& first, const Word& second) {
    if (first.length() != listing.word_length() ||
        second.length() != listing.word_length()) {
        throw std::invalid_argument("find_pair: word lengths do not match the listing");
    }
    const auto& raw = listing.raw();
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        if (raw[i] == first.raw() && raw[i + 1] == second.raw()) {
            return i + 1;
        }
    }
    throw InvariantError("find_pair: adjacent pair (" + first.str() + ", " +
                         second.str() + ") not present in the listing");
}

Listing extend_odd_to_even(const Listing& listing, bool validate_input) {
    require_full_odd(listing, "extend_odd_to_even");
    const int m = listing.word_length();
    if (validate_input) {
        require_properties(listing, PropertySet::kA, "extend_odd_to_even input");
    }
    const std::size_t i = find_pair(listing, ten_to_one_word(m), last_one_word(m));
    const auto& raw = listing.raw();
    const std::size_t count = raw.size();

    Listing out(m + 1);
    out.reserve(2 * count);
    // Entries 1..i keep their order and get a 0; then the whole inner
    // listing runs backwards with a 1; then entries i+1..2^m get a 0. The
    // seam entries (10...01)0 -> (0...01)1 and (10...0)1 -> (0...01)0 are
    // graph edges, which is what makes this a valid doubling.
    for (std::size_t k = 0; k < i; ++k) {
        out.push_back_raw(raw[k] << 1);
    }
    for (std::size_t k = count; k-- > 0;) {
        out.push_back_raw((raw[k] << 1) | 1);
    }
    for (std::size_t k = i; k < count; ++k) {
        out.push_back_raw(raw[k] << 1);
    }
    return out;
}

Listing extend_even_to_odd(const Listing& listing, bool validate_input) {
    require_full_even(listing, "extend_even_to_odd");
    const int m = listing.word_length();
    if (validate_input) {
        require_properties(listing, PropertySet::kB, "extend_even_to_odd input");
    }
    const std::size_t i =
        find_pair(listing, ten_to_one_word(m), third_and_last_one_word(m));
    const auto& raw = listing.raw();
    const std::size_t count = raw.size();

    Listing out(m + 1);
    out.reserve(2 * count);
    // Same sandwich as the odd step, except the middle block is the inner
    // listing rotated one step (last entry first) rather than reversed.
    for (std::size_t k = 0; k < i; ++k) {
        out.push_back_raw(raw[k] << 1);
    }
    out.push_back_raw((raw[count - 1] << 1) | 1);
    for (std::size_t k = 0; k + 1 < count; ++k) {
        out.push_back_raw((raw[k] << 1) | 1);
    }
    for (std::size_t k = i; k < count; ++k) {
        out.push_back_raw(raw[k] << 1);
    }
    return out;
}

Listing cycle_listing(int n, ValidationMode mode) {
    if (n < 1 || n > Word::kMaxLength) {
        throw std::invalid_argument("cycle_listing needs length in [1, 64], got " +
                                    std::to_string(n));
    }
    const bool every = (mode == ValidationMode::kEveryLevel);
    if (n <= 3) {
        Listing out = base_cycle(n);
        require_properties(out, cycle_set_for(n), "base cycle listing");
        return out;
    }
    // Lengths 4 and up all grow from the length-3 base: the even-to-odd
    // step needs an anchor word with 1s in positions 3 and n, which only
    // exists once words have at least four letters.
    Listing out = base_cycle(3);
    if (every) {
        require_properties(out, PropertySet::kA, "cycle listing at length 3");
    }
    for (int m = 3; m < n; ++m) {
        out = (m % 2 == 1) ? extend_odd_to_even(out, false)
                           : extend_even_to_odd(out, false);
        if (every || m + 1 == n) {
            require_properties(out, cycle_set_for(m + 1),
                               "cycle listing at length " + std::to_string(m + 1));
        }
    }
    return out;
}

CycleListingStream::CycleListingStream(int n, ValidationMode mode)
    : word_length_(n), below_(std::max(n - 1, 1)) {
    if (n < 1 || n > Word::kMaxLength) {
        throw std::invalid_argument("cycle listing needs length in [1, 64], got " +
                                    std::to_string(n));
    }
    if (n <= 3) {
        below_ = cycle_listing(n, mode);
        direct_ = true;
        return;
    }
    below_ = cycle_listing(n - 1, mode);
    odd_to_even_ = (below_.word_length() % 2 == 1);
    split_ = odd_to_even_
                 ? find_pair(below_, ten_to_one_word(n - 1), last_one_word(n - 1))
                 : find_pair(below_, ten_to_one_word(n - 1),
                             third_and_last_one_word(n - 1));
}

std::size_t CycleListingStream::size() const {
    return direct_ ? below_.size() : 2 * below_.size();
}

Word CycleListingStream::at(std::size_t index) const {
    if (index >= size()) {
        throw std::out_of_range("stream index " + std::to_string(index) +
                                " out of range (size " + std::to_string(size()) + ")");
    }
    if (direct_) {
        return below_.at(index);
    }
    const std::size_t count = below_.size();
    const std::size_t p = index + 1;  // 1-based position in the extended listing
    std::uint64_t bits = 0;
    std::uint64_t low = 0;
    if (p <= split_) {
        bits = below_.raw()[p - 1];
    } else if (p <= split_ + count) {
        const std::size_t q = p - split_;  // position within the middle block
        low = 1;
        if (odd_to_even_) {
            bits = below_.raw()[count - q];  // reversed inner listing
        } else {
            bits = below_.raw()[q == 1 ? count - 1 : q - 2];  // rotated inner listing
        }
    } else {
        bits = below_.raw()[p - count - 1];
    }
    return Word((bits << 1) | low, word_length_);
}

}  // namespace graycode
