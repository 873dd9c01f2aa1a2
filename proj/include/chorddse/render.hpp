#ifndef CHORDDSE_RENDER_HPP
#define CHORDDSE_RENDER_HPP

#include <string>

#include "chorddse/diagram.hpp"
#include "chorddse/tree.hpp"

namespace chorddse {

// DOT digraph of a tree; leaf labels as node text.
std::string tree_to_dot(const LabeledTree& t);

// Static SVG of a chord diagram: points on a circle, chords as lines,
// intersection-order labels and non-trivial decorations as text.
std::string diagram_to_svg(const ChordDiagram& c);

}  // namespace chorddse

#endif
