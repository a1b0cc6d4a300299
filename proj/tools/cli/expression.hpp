#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ctsum/rational_function.hpp"

namespace ctsum::cli {

/// Syntax or evaluation error at a character offset of the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a rational function of the single variable j:
///
///   expr   := term (("+" | "-") term)*
///   term   := factor (("*" | "/") factor)*
///   factor := base ("^" uint)?
///   base   := "j" | int | "(" expr ")"
///   int    := "-"? digit+
///
/// Whitespace is insignificant. The result is in reduced normal form.
RationalFunction parse_ratfun(std::string_view text);

/// Text that parse_ratfun maps back to the same function.
inline std::string render(const RationalFunction& r) { return r.to_string('j'); }

}  // namespace ctsum::cli
