#pragma once

#include <string>
#include <string_view>

#include "folkman/graph.hpp"

namespace folkman {

/// Standard graph6 text (printable bytes offset by 63, 6 bits per byte,
/// upper triangle in column order). An optional ">>graph6<<" prefix and
/// trailing whitespace are accepted. Throws ParseError on a malformed
/// header or a short or overlong bit stream, CapacityError when n > 64.
Graph parse_graph6(std::string_view text);

std::string emit_graph6(const Graph& g);

}  // namespace folkman
