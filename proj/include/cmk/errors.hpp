#pragma once

#include <stdexcept>
#include <string>

namespace cmk {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data: bad presentation files, size bounds exceeded,
// incompatible operands, unsupported families.
struct input_error : error {
  using error::error;
};

// Text that failed to parse; carries a 1-based line number when known.
struct parse_error : error {
  explicit parse_error(const std::string& msg, long line = 0)
      : error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_no(line) {}
  long line_no;
};

// Inversion of a non-unit (zero constant term, zero field element, ...).
struct not_a_unit_error : error {
  using error::error;
};

// A matrix that fails the diagonal-units elimination criterion.
struct not_invertible_error : error {
  using error::error;
};

// A checked mathematical hypothesis does not hold for the given input.
struct hypothesis_error : error {
  using error::error;
};

// An internal cross-check failed; signals a bug, never expected.
struct internal_error : error {
  using error::error;
};

}  // namespace cmk
