#pragma once

#include <stdexcept>

namespace errors {

// Malformed input text: graph files, word strings, subset lists.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A stated precondition of an operation does not hold.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured search bound was exceeded (group enumeration, orbit search).
// Bounds fail loudly; results are never silently truncated.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace errors
