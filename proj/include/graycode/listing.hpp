// listing.hpp -- ordered listings of equal-length binary words

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "graycode/bitword.hpp"

namespace graycode {

/// An ordered sequence of binary words that all share one length. Stored as
/// raw bit values so a listing of 2^24 words fits in ~134 MB. Entry
/// uniqueness and coverage are properties of the generated listings, checked
/// by the verify module rather than enforced on every push.
class Listing {
  public:
    explicit Listing(int word_length);
    Listing(int word_length, std::vector<std::uint64_t> raw_entries);

    [[nodiscard]] int word_length() const { return word_length_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] bool empty() const { return entries_.empty(); }

    /// Entry at 0-based index.
    [[nodiscard]] Word at(std::size_t index) const;
    [[nodiscard]] Word front() const { return at(0); }
    [[nodiscard]] Word back() const { return at(size() - 1); }

    void push_back(const Word& w);
    void push_back_raw(std::uint64_t bits) { entries_.push_back(bits); }
    void reserve(std::size_t capacity) { entries_.reserve(capacity); }

    [[nodiscard]] const std::vector<std::uint64_t>& raw() const { return entries_; }

    friend bool operator==(const Listing&, const Listing&) = default;

  private:
    int word_length_;
    std::vector<std::uint64_t> entries_;
};

/// One word per line, no trailing blank line beyond the final newline.
void write_lines(std::ostream& out, const Listing& listing);
[[nodiscard]] std::string to_lines(const Listing& listing);

/// Parses one word per line (blank lines at the end are tolerated). All
/// words must share a length; an empty stream is an error.
[[nodiscard]] Listing listing_from_lines(std::istream& in);

}  // namespace graycode
