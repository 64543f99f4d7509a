#pragma once

#include <string>
#include <string_view>

#include "oddfactor/graph.hpp"

namespace oddfactor {

// graph6 text encoding (order header offset 63, upper-triangle bits packed
// column-wise into 6-bit groups, zero padding).  Orders up to 62 use the
// single-byte header, 63..258 the '~' long form.  parse accepts an optional
// trailing newline; everything else malformed throws std::invalid_argument.
// emit(parse(x)) == x byte-exactly for every accepted line.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

}  // namespace oddfactor
