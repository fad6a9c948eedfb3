#pragma once

// The standard symmetric generating set of a numbered graph product and words
// over it.  Shared vocabulary only: no geodesic logic lives here.

#include <string>
#include <string_view>
#include <vector>

#include "geogrowth/graph.hpp"

namespace geogrowth {

/// v (sign +1) or v^-1 (sign -1).  v^-1 does not exist when N(v) = 2.
struct Generator {
  Vertex vertex = 0;
  int sign = 1;
  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;
};

using Word = std::vector<Generator>;

/// Throws PreconditionError for an unknown vertex, a sign other than +-1, or
/// v^-1 with N(v) = 2.
Generator make_generator(const NumberedGraph& g, Vertex v, int sign);

/// Document order of vertices, v before v^-1; v^-1 omitted when N(v) = 2.
std::vector<Generator> generators(const NumberedGraph& g);

/// "v" or "v^-1".
std::string to_string(const NumberedGraph& g, const Generator& s);
/// Space-separated letters; "ε" for the empty word.
std::string to_string(const NumberedGraph& g, const Word& w);

/// Parses whitespace-separated letters "v", "v^-1" (also "v^1").  Throws
/// PreconditionError on unknown vertices or forbidden inverses.
Word parse_word(const NumberedGraph& g, std::string_view text);

}  // namespace geogrowth
