#include "graycode/listing.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace graycode {

Listing::Listing(int word_length) : word_length_(word_length) {
    if (word_length < 1 || word_length > Word::kMaxLength) {
        throw std::invalid_argument("listing word length must be in [1, 64], got " +
                                    std::to_string(word_length));
    }
}

Listing::Listing(int word_length, std::vector<std::uint64_t> raw_entries)
    : Listing(word_length) {
    entries_ = std::move(raw_entries);
    // Re-run the Word range check on each entry so a raw constructor cannot
    // smuggle in bits beyond the stated length.
    for (std::uint64_t bits : entries_) {
        (void)Word(bits, word_length_);
    }
}

Word Listing::at(std::size_t index) const {
    if (index >= entries_.size()) {
        throw std::out_of_range("listing index " + std::to_string(index) +
                                " out of range (size " + std::to_string(size()) + ")");
    }
    return Word(entries_[index], word_length_);
}

void Listing::push_back(const Word& w) {
    if (w.length() != word_length_) {
        throw std::invalid_argument("cannot push a length-" + std::to_string(w.length()) +
                                    " word into a length-" + std::to_string(word_length_) +
                                    " listing");
    }
    entries_.push_back(w.raw());
}

void write_lines(std::ostream& out, const Listing& listing) {
    for (std::size_t i = 0; i < listing.size(); ++i) {
        out << listing.at(i).str() << '\n';
    }
}

std::string to_lines(const Listing& listing) {
    std::ostringstream out;
    write_lines(out, listing);
    return out.str();
}

Listing listing_from_lines(std::istream& in) {
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;  // tolerate blank lines, typically a trailing one
        }
        words.push_back(Word::parse(line));
    }
    if (words.empty()) {
        throw std::invalid_argument("no words found in input");
    }
    Listing listing(words.front().length());
    listing.reserve(words.size());
    for (const Word& w : words) {
        if (w.length() != listing.word_length()) {
            throw std::invalid_argument("mixed word lengths in input: expected " +
                                        std::to_string(listing.word_length()) +
                                        ", got \"" + w.str() + "\"");
        }
        listing.push_back_raw(w.raw());
    }
    return listing;
}

}  // namespace graycode
