#ifndef DESING_EMIT_HPP
#define DESING_EMIT_HPP

#include <string>

#include "desing/tree.hpp"

namespace desing {

// Deterministic JSON: stable key order, every number a decimal string.
std::string emit_json(const DesingTree& tree);

// Graphviz text: one node per tree node, one labelled edge per arc.
std::string emit_dot(const DesingTree& tree);

// Plain-text table, one line per node.
std::string emit_text(const DesingTree& tree);

}  // namespace desing

#endif
