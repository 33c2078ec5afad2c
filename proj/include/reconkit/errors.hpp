#ifndef RECONKIT_ERRORS_HPP
#define RECONKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reconkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad vertex, bad c, mismatched decks, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but exceeds a documented size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 or deck-file text. `offset()` is the byte offset inside the line.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : InputError(message + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace reconkit

#endif  // RECONKIT_ERRORS_HPP
