#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "csd/diagram.hpp"

namespace csd {

// Text document:
//
//   csd n=<n> t=<t>
//   <level> <maximal 0|1> <v0> <v1> ...
//
// one line per star, ordered by (level, simplex, maximal). Labels are not
// written; reading re-keys them. Blank lines and '#' comments are skipped on
// input.

void write_diagram(std::ostream& os, const CriticalSimplexDiagram& diagram);
std::string to_text(const CriticalSimplexDiagram& diagram);

/// Throws ParseError with the offending line and column.
CriticalSimplexDiagram read_diagram(std::istream& is);
CriticalSimplexDiagram from_text(std::string_view text);

}  // namespace csd
