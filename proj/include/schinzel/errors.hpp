#ifndef SCHINZEL_ERRORS_HPP
#define SCHINZEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schinzel {

// An instance exceeded a desk-scale bound (order bound, brute-force degree).
struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed (e.g. a search the theory guarantees
// to succeed came back empty).
struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace schinzel

#endif
