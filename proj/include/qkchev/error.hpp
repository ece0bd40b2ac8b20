#pragma once

#include <stdexcept>
#include <string>

namespace qkchev {

// Bad input: invalid type, element not in the expected coset, etc.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Something the mathematics guarantees did not happen. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail_internal(const std::string& what) { throw InternalError("internal: " + what); }

}  // namespace qkchev
