#pragma once

#include <stdexcept>
#include <string>

namespace pcat {

/// Malformed or out-of-contract arguments (size mismatch, unknown block, bad text).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& message)
      : std::invalid_argument(message) {}
};

/// A configured size or step budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& message)
      : std::runtime_error(message) {}
};

/// An operation was called on a value that fails a stated precondition,
/// e.g. a word/projection check on a model violating the relations.
class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& message)
      : std::logic_error(message) {}
};

/// Three-valued answer used by semi-decision procedures.
enum class Membership { no, yes, unknown };

inline const char* to_string(Membership m) {
  switch (m) {
    case Membership::no:
      return "no";
    case Membership::yes:
      return "yes";
    case Membership::unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace pcat
