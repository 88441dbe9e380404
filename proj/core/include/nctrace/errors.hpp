#pragma once

#include <stdexcept>

namespace nctrace {

/// Thrown when an operation would exceed its configured combinatorial budget
/// (enumeration size, tuple count, word length). Distinct from
/// std::invalid_argument so callers can map the two to different exit codes.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nctrace
