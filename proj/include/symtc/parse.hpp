#pragma once

#include <stdexcept>
#include <string>

#include "symtc/catalog.hpp"

namespace symtc {

/// Syntax or range error in a space expression; `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Space := Term ("x" Term)*      Term := Atom ("^" INT)*
/// Atom  := "S(" INT ")" | "SP(" INT "," Surf ")" | Surf | "(" Space ")"
/// Surf  := "M(" INT ")" | "N(" INT ")"
/// Whitespace is insignificant. Mixed orientable / non-orientable leaves are rejected.
Space parse_space(const std::string& text);

}  // namespace symtc
