#pragma once

#include <stdexcept>

namespace nilmult {

/// Exact arithmetic left the representable range. Never silently wraps.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generated collection would exceed its configured element cap.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a defect, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace nilmult
