// fixtures.hpp -- frozen expected sequences the generators must reproduce
//
// The word listings are the hand-checked reference listings for small
// lengths; the permutation listings are their images under the bijection.
// Tests compare generator output against these bit for bit.

#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "graycode/bitword.hpp"
#include "graycode/gilbreath.hpp"
#include "graycode/listing.hpp"

namespace fixtures {

inline const std::vector<const char*> kCycleWords2 = {"00", "01", "11", "10"};

inline const std::vector<const char*> kCycleWords3 = {"000", "010", "110", "011",
                                                      "111", "101", "001", "100"};

inline const std::vector<const char*> kCycleWords4 = {
    "0000", "0100", "1100", "0110", "1110", "1010", "1001", "0011",
    "1011", "1111", "0111", "1101", "0101", "0001", "0010", "1000"};

inline const std::vector<const char*> kCycleWords5 = {
    "00000", "01000", "11000", "01100", "11100", "10100", "10010", "10001",
    "00001", "01001", "11001", "01101", "11101", "10101", "10011", "00111",
    "10111", "11111", "01111", "11011", "01011", "00011", "00101", "00110",
    "10110", "11110", "01110", "11010", "01010", "00010", "00100", "10000"};

inline const std::vector<const char*> kPathWords2 = {"00", "10", "01", "11"};

inline const std::vector<const char*> kPathWords3 = {"000", "100", "010", "110",
                                                     "101", "001", "011", "111"};

inline const std::vector<const char*> kPathWords4 = {
    "0000", "1000", "0100", "1100", "1010", "0010", "0001", "1001",
    "0110", "1110", "1101", "0101", "0011", "1011", "0111", "1111"};

inline const std::vector<const char*> kPathWords5 = {
    "00000", "10000", "01000", "11000", "10100", "00100", "01100", "11100",
    "11010", "01010", "10010", "00010", "00001", "10001", "01001", "11001",
    "10101", "10110", "00110", "01110", "11110", "11101", "01101", "00101",
    "00011", "10011", "01011", "11011", "10111", "00111", "01111", "11111"};

// Size-6 permutation Gray codes, compact digit form.
inline const std::vector<const char*> kPermCycle6 = {
    "123456", "231456", "321456", "342156", "432156", "324156", "324516", "324561",
    "234561", "342561", "432561", "453261", "543261", "435261", "435621", "456321",
    "546321", "654321", "564321", "543621", "453621", "345621", "345261", "345216",
    "435216", "543216", "453216", "432516", "342516", "234516", "234156", "213456"};

inline const std::vector<const char*> kPermPath6 = {
    "123456", "213456", "231456", "321456", "324156", "234156", "342156", "432156",
    "432516", "342516", "324516", "234516", "234561", "324561", "342561", "432561",
    "435261", "435216", "345216", "453216", "543216", "543261", "453261", "345261",
    "345621", "435621", "453621", "543621", "546321", "456321", "564321", "654321"};

inline graycode::Listing make_listing(std::span<const char* const> words) {
    graycode::Listing out(static_cast<int>(std::char_traits<char>::length(words[0])));
    out.reserve(words.size());
    for (const char* w : words) {
        out.push_back(graycode::Word::parse(w));
    }
    return out;
}

inline std::vector<graycode::Permutation> make_perms(std::span<const char* const> perms) {
    std::vector<graycode::Permutation> out;
    out.reserve(perms.size());
    for (const char* p : perms) {
        out.push_back(graycode::Permutation::parse(p));
    }
    return out;
}

}  // namespace fixtures
