#pragma once

#include <stdexcept>
#include <string>

namespace sqscope {

/// Input outside an operation's domain (empty word, m < 1, i >= j, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structured precondition failed; the message names the violated clause.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `position()` is 1-based, 0 when not applicable.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position = 0)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when an engine invariant that must hold for every word is broken
/// (a digit above 2, a missing FS factorization). Always a bug.
class EngineInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sqscope
