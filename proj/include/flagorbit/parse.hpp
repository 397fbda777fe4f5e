#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "flagorbit/shapes.hpp"

namespace flagorbit {

/// Reports where in the input the problem sits; `position` is a 0-based
/// byte offset suitable for a caret diagnostic.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message), position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Grammar (whitespace between tokens is ignored):
///   product := factor (('x' | '*' | U+00D7) factor)*
///   factor  := base ('^' count)?
///   base    := 'F(' [int (',' int)*] ';' int ')'  |  'Gr(' int ',' int ')'
/// "Gr(k,n)" abbreviates "F(k;n)"; "F(;n)" is the point variety.  Dimension
/// vectors must be strictly increasing within the ambient, counts positive,
/// and all factors must share one ambient dimension; violations throw
/// ParseError pointing at the offending factor.
[[nodiscard]] ProductSpec parse_product(std::string_view text);

}  // namespace flagorbit
