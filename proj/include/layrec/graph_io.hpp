#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "layrec/graph.hpp"
#include "layrec/layer_types.hpp"

namespace layrec {

/// Reads the plain edge-list format: one `source target [kind]` record per
/// line, fields separated by spaces or tabs, `#` starting a comment. Nodes
/// are created on first mention with kind `unknown`. A record with fewer
/// than two fields raises ParseError with its line number.
DependencyNetwork parse_edge_list(std::string_view text);

/// Renders the network as a DOT digraph. When an assignment is given it
/// must cover every node (IncompleteAssignmentError otherwise) and nodes are
/// grouped into three ranked clusters, upper on top.
std::string emit_dot(const DependencyNetwork& network,
                     const std::optional<LayerAssignment>& assignment = std::nullopt);

}  // namespace layrec
