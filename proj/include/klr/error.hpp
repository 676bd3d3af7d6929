#pragma once

#include <stdexcept>
#include <string>

namespace klr {

// Bad input: malformed config, unknown label, invalid datum. CLI exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed quantity disagrees with an independent oracle or a proven
// statement. CLI exit code 1.
class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace klr
