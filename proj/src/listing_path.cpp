#include "graycode/listing_path.hpp"

#include <stdexcept>
#include <string>

#include "graycode/errors.hpp"
#include "graycode/verify.hpp"

namespace graycode {

namespace {

constexpr std::uint64_t kSuffix00 = 0;
constexpr std::uint64_t kSuffix01 = 1;
constexpr std::uint64_t kSuffix10 = 2;
constexpr std::uint64_t kSuffix11 = 3;

Listing from_strings(int n, std::initializer_list<const char*> words) {
    Listing out(n);
    out.reserve(words.size());
    for (const char* w : words) {
        out.push_back(Word::parse(w));
    }
    return out;
}

void append_with_suffix(Listing& out, const Listing& inner, std::size_t index_1based,
                        std::uint64_t suffix) {
    out.push_back_raw((inner.raw()[index_1based - 1] << 2) | suffix);
}

// Appends inner[from..to] (1-based, inclusive, either direction) with one
// fixed two-letter suffix.
void append_run(Listing& out, const Listing& inner, std::size_t from, std::size_t to,
                std::uint64_t suffix) {
    if (from <= to) {
        for (std::size_t k = from; k <= to; ++k) {
            append_with_suffix(out, inner, k, suffix);
        }
    } else {
        for (std::size_t k = from; k >= to; --k) {
            append_with_suffix(out, inner, k, suffix);
        }
    }
}

void append_all(Listing& out, const Listing& segment) {
    for (std::uint64_t bits : segment.raw()) {
        out.push_back_raw(bits);
    }
}

}  // namespace

Listing base_path(int n) {
    switch (n) {
        case 2:
            return from_strings(2, {"00", "10", "01", "11"});
        case 3:
            return from_strings(3, {"000", "100", "010", "110", "101", "001", "011", "111"});
        case 4:
            return from_strings(4, {"0000", "1000", "0100", "1100", "1010", "0010",
                                    "0001", "1001", "0110", "1110", "1101", "0101",
                                    "0011", "1011", "0111", "1111"});
        default:
            throw std::invalid_argument("base_path covers lengths 2..4, got " +
                                        std::to_string(n));
    }
}

CaseSelector locate_m_n(const Listing& inner) {
    const int m = inner.word_length();
    if (m < 2) {
        throw std::invalid_argument("locate_m_n needs word length >= 2, got " +
                                    std::to_string(m));
    }
    const std::uint64_t ones_zero = (Word::ones(m).raw()) & ~std::uint64_t{1};  // 1...10
    const std::uint64_t zeros_one = 1;                                          // 0...01

    CaseSelector sel;
    const auto& raw = inner.raw();
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == ones_zero) {
            sel.m_index = k + 1;
        } else if (raw[k] == zeros_one) {
            sel.n_index = k + 1;
        }
    }
    if (sel.m_index == 0 || sel.n_index == 0) {
        throw InvariantError("locate_m_n: anchor word " +
                             Word(sel.m_index == 0 ? ones_zero : zeros_one, m).str() +
                             " not present in the inner listing");
    }
    const std::size_t lo = std::min(sel.m_index, sel.n_index);
    const std::size_t hi = std::max(sel.m_index, sel.n_index);
    if (m >= 3 && hi - lo < 2) {
        throw InvariantError("locate_m_n: anchor positions " +
                             std::to_string(sel.m_index) + " and " +
                             std::to_string(sel.n_index) +
                             " are closer than 2 apart");
    }
    const bool odd = ((hi - lo) % 2 == 1);
    if (sel.m_index > sel.n_index) {
        sel.case_id = odd ? 1 : 2;
    } else {
        sel.case_id = odd ? 3 : 4;
    }
    return sel;
}

CaseSegments build_case_segments(const Listing& inner, const CaseSelector& sel) {
    const int m = inner.word_length();
    const std::size_t count = inner.size();
    const std::size_t M = sel.m_index;
    const std::size_t N = sel.n_index;
    if (M == 0 || N == 0 || M > count || N > count || M == N) {
        throw std::invalid_argument("case selector indices out of range");
    }
    const std::size_t lo = std::min(M, N);
    const std::size_t hi = std::max(M, N);
    if (hi - lo < 2) {
        throw InvariantError("case construction needs |M - N| >= 2, got M=" +
                             std::to_string(M) + ", N=" + std::to_string(N));
    }
    const bool odd = ((hi - lo) % 2 == 1);
    const int expected_case = (M > N) ? (odd ? 1 : 2) : (odd ? 3 : 4);
    if (sel.case_id != expected_case) {
        throw std::invalid_argument("case id " + std::to_string(sel.case_id) +
                                    " does not match indices (expected " +
                                    std::to_string(expected_case) + ")");
    }

    CaseSegments seg{Listing(m + 2), Listing(m + 2), Listing(m + 2), Listing(m + 2),
                     Listing(m + 2), sel.case_id};

    seg.p00.reserve(count);
    append_run(seg.p00, inner, 1, count, kSuffix00);
    seg.p11.reserve(count);
    append_run(seg.p11, inner, 1, count, kSuffix11);

    // The zigzag walks the inner entries strictly between M and N, away
    // from M, pairing suffixes (01, 10) on odd steps and (10, 01) on even
    // ones so that neighbouring entries always share a suffix letter.
    const std::size_t between = hi - lo - 1;
    seg.zigzag.reserve(2 * between);
    for (std::size_t j = 1; j <= between; ++j) {
        const std::size_t idx = (M > N) ? M - j : M + j;
        const bool odd_step = (j % 2 == 1);
        append_with_suffix(seg.zigzag, inner, idx, odd_step ? kSuffix01 : kSuffix10);
        append_with_suffix(seg.zigzag, inner, idx, odd_step ? kSuffix10 : kSuffix01);
    }

    if (M > N) {
        // Cases 1 and 2: Lower sweeps from M out to the end and back;
        // Upper sweeps from N down to the start and back, with the suffix
        // order flipped between the two cases.
        seg.lower.reserve(2 * (count - M + 1));
        append_run(seg.lower, inner, M, count, kSuffix10);
        append_run(seg.lower, inner, count, M, kSuffix01);
        seg.upper.reserve(2 * N);
        if (sel.case_id == 1) {
            append_run(seg.upper, inner, N, 1, kSuffix01);
            append_run(seg.upper, inner, 1, N, kSuffix10);
        } else {
            append_run(seg.upper, inner, N, 1, kSuffix10);
            append_run(seg.upper, inner, 1, N, kSuffix01);
        }
    } else {
        // Cases 3 and 4: Upper sweeps from M down to the start and back;
        // Lower sweeps from N out to the end and back. In case 3 the
        // zigzag's very last entry moves to the end of Lower, keeping the
        // zigzag/Lower seam walkable.
        seg.upper.reserve(2 * M);
        append_run(seg.upper, inner, M, 1, kSuffix10);
        append_run(seg.upper, inner, 1, M, kSuffix01);
        seg.lower.reserve(2 * (count - N + 1) + 1);
        append_run(seg.lower, inner, N, count, kSuffix10);
        append_run(seg.lower, inner, count, N, kSuffix01);
        if (sel.case_id == 3) {
            const std::uint64_t moved = seg.zigzag.raw().back();
            Listing trimmed(m + 2);
            trimmed.reserve(seg.zigzag.size() - 1);
            for (std::size_t k = 0; k + 1 < seg.zigzag.size(); ++k) {
                trimmed.push_back_raw(seg.zigzag.raw()[k]);
            }
            seg.zigzag = std::move(trimmed);
            seg.lower.push_back_raw(moved);
        }
    }
    return seg;
}

Listing build_case(const Listing& inner, const CaseSelector& sel, bool validate_input) {
    if (validate_input) {
        require_properties(inner, PropertySet::kC, "build_case input");
    }
    CaseSegments seg = build_case_segments(inner, sel);
    Listing out(inner.word_length() + 2);
    out.reserve(4 * inner.size());
    append_all(out, seg.p00);
    if (sel.case_id <= 2) {
        append_all(out, seg.lower);
        append_all(out, seg.zigzag);
        append_all(out, seg.upper);
    } else {
        append_all(out, seg.upper);
        append_all(out, seg.zigzag);
        append_all(out, seg.lower);
    }
    append_all(out, seg.p11);
    return out;
}

Listing path_listing(int n, ValidationMode mode) {
    if (n < 2 || n > Word::kMaxLength) {
        throw std::invalid_argument("path_listing needs length in [2, 64], got " +
                                    std::to_string(n));
    }
    const bool every = (mode == ValidationMode::kEveryLevel);
    if (n <= 4) {
        Listing out = base_path(n);
        require_properties(out, PropertySet::kC, "base path listing");
        return out;
    }
    const int start = (n % 2 == 0) ? 4 : 3;
    Listing out = base_path(start);
    if (every) {
        require_properties(out, PropertySet::kC,
                           "path listing at length " + std::to_string(start));
    }
    for (int m = start; m < n; m += 2) {
        out = build_case(out, locate_m_n(out), false);
        if (every || m + 2 == n) {
            require_properties(out, PropertySet::kC,
                               "path listing at length " + std::to_string(m + 2));
        }
    }
    return out;
}

}  // namespace graycode
