#pragma once

#include <string>
#include <string_view>

#include "lag2/continued_fraction.hpp"

namespace lag2 {

// Text form of an eventually periodic continued fraction:
//
//   cf   := "[" int ";" seq "]"
//   seq  := item ("," item)*
//   item := posint | "(" posint ("," posint)* ")" rep
//   rep  := "^" posint | "*"
//
// "^k" repeats a group k times, "*" repeats it forever. Exactly one "*" group
// is required and it must be the last item. Inside a "*" group, "^" groups
// may nest one level deep. Whitespace is ignored. Throws ParseError.
PeriodicCF parse_cf(std::string_view text);

// Canonical text, e.g. "[2;(1,1,3)*]" or "[0;1,(2,1)*]".
std::string format_cf(const PeriodicCF& cf);

}  // namespace lag2
