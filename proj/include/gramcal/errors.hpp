#ifndef GRAMCAL_ERRORS_HPP
#define GRAMCAL_ERRORS_HPP

#include <stdexcept>

namespace gramcal {

// Malformed input: bad file syntax, dimension mismatch, unknown indeterminate.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input the library refuses to process: unsupported
// genericity class, enumeration size limits, retry exhaustion.
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The hyperplane arrangement would exceed the configured cap; callers can
// fall back to random_point_check.
class cell_cap_exceeded : public unsupported_error {
 public:
  using unsupported_error::unsupported_error;
};

}  // namespace gramcal

#endif
