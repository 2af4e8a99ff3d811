#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burnside {

/// Raised for invalid mathematical input: bad parameters, caps exceeded,
/// operations applied outside their domain (e.g. a non-p-group).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the text parsers; carries the zero-based column of the failure.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace burnside
