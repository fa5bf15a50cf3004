#pragma once

#include <string>
#include <string_view>

#include "layrec/graph.hpp"

namespace layrec {

/// Reads a network from the GML subset this tool exchanges: a top-level
/// `graph [...]` block whose `node` entries carry an integer `id` and a
/// string `label`, and whose `edge` entries carry `source`/`target` ids.
/// An optional `kind` (or `relationship`) string attribute on nodes and
/// edges maps onto ElementKind/EdgeKind; anything unrecognized is kept as
/// `unknown`. All graphs are interpreted as directed.
///
/// Throws ParseError (with line number) on malformed syntax, UnknownNodeError
/// when an edge references a missing id, DuplicateNodeError on repeated node
/// ids and SelfDependencyError on self-loops.
DependencyNetwork parse_gml(std::string_view text);

/// Deterministic writer: node ids are renumbered densely from 0 in natural
/// id order (identity is carried by the label), edges are sorted by
/// (source, target). Output re-parses to an isomorphic network.
std::string emit_gml(const DependencyNetwork& network);

}  // namespace layrec
