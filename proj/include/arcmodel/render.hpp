#pragma once

// Diagram output: the occurring endpoints on a line, arcs as chords above it
// (ascii) or as edges of an undirected graph (dot). -inf renders as a marked
// leftmost node.

#include "arcmodel/arc.hpp"
#include "arcmodel/exceptional.hpp"

#include <string>

namespace arcmodel {

std::string render_ascii(const ArcSet& s);
std::string render_dot(const ArcSet& s);

// One text line per chain, arrows along each linearly oriented chain, plus a
// closing line with the product-of-type-A shape.
std::string quiver_text(const ChainQuiver& q);
std::string quiver_dot(const ChainQuiver& q);

} // namespace arcmodel
