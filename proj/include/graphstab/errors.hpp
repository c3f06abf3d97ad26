#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphstab {

// Bad vertex label, missing edge, malformed parameter.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// graph6 / edge-list decoding failure. `offset` is the byte index in the record.
class CodecError : public std::runtime_error {
 public:
  CodecError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), message_(what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }
  /// The description without the offset suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

// Invariant undefined on this graph (class and class' on edgeless graphs).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A subset search would exceed the configured candidate cap.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Should be unreachable; e.g. an edge colouring search contradicting Vizing.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace graphstab
