// errors.hpp -- error type for broken construction invariants

#pragma once

#include <stdexcept>

namespace graycode {

/// Raised when a listing fails a structural property that the construction
/// is supposed to guarantee. Input validation errors use
/// std::invalid_argument instead.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace graycode
