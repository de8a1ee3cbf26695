#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyarc {

// Malformed textual input. `position` is the 0-based character offset of the
// first offending character (or the input length for premature end).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An argument outside the mathematical domain of an operation
// (non-positive radicand, odd n for the convex family, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Lookup of an irrational symbol that the approximation context does not define.
class MissingSurrogate : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace polyarc
