#pragma once

#include <string>
#include <string_view>

#include "gallai/graph.hpp"

namespace gallai {

/// Decodes one graph6 record. A leading ">>graph6<<" header and trailing
/// line terminators are ignored. Throws Graph6Error (with byte offset) on a
/// malformed record and UnsupportedFormatError on sparse6/digraph6 input.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding (no header, no newline).
std::string to_graph6(const Graph& g);

}  // namespace gallai
