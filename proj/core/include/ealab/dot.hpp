#pragma once

#include <string>

#include "ealab/table.hpp"

namespace ealab {

enum class Graph { kHasse, kCompat };

/// "hasse" or "compat"; throws Error(kInvalidArgument).
Graph parse_graph(const std::string& s);

/// Graphviz description: Hasse covers as a digraph drawn bottom-up, or the
/// compatibility relation (lattice effect algebras only) as an undirected
/// graph without loops.
std::string to_dot(const EffectAlgebraTable& t, Graph g);

}  // namespace ealab
