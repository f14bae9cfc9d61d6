#pragma once

#include <stdexcept>
#include <string>

namespace peri {

/// Malformed input: bad digits, unparsable payloads, out-of-range indices.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition does not hold (composability, truncation,
/// degree restrictions, membership).
class PreconditionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A configured size bound would be exceeded.
class ResourceError : public std::length_error {
public:
  using std::length_error::length_error;
};

}  // namespace peri
