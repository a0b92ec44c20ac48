#pragma once

#include <string>

#include "qsl/graph.hpp"

namespace qsl {

// graph6 interchange format, short form only (n <= 62): one header byte
// n+63, then the column-wise upper triangle of the adjacency matrix packed
// big-endian into 6-bit chunks, each offset by 63. Encoding is bit-exact so
// external tools can re-verify outputs independently.
std::string encode_graph6(const Graph& g);

// Strict decoder: rejects out-of-range bytes, truncated input, trailing
// bytes, nonzero padding bits, and the long forms; errors carry the byte
// offset of the first offending byte.
Graph decode_graph6(const std::string& s);

// DOT rendering for visualization; vertex labels are the ids, isolated
// vertices are listed explicitly, no styling attributes.
std::string to_dot(const Graph& g);

}  // namespace qsl
