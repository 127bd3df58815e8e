#pragma once

#include <string>
#include <string_view>

#include "trd/graph.hpp"

namespace trd {

// graph6, short form only (orders 1..62). The upper triangle is read
// column by column, (0,1),(0,2),(1,2),(0,3),..., packed big-endian into
// 6-bit groups and offset by 63.

/// Throws TooLarge for graphs the short form cannot hold.
std::string graph6_encode(const Graph& g);

/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
/// Throws MalformedGraph6 on anything else that is not a valid short-form line.
Graph graph6_decode(std::string_view text);

}  // namespace trd
