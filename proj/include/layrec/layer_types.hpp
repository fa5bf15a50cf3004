#pragma once

#include <map>
#include <string>
#include <string_view>

#include "layrec/errors.hpp"
#include "layrec/graph.hpp"

namespace layrec {

// The three architectural layers, numerically encoded 1..3 from bottom to top.
enum class LayerLabel : int { Lower = 1, Middle = 2, Upper = 3 };

inline int to_int(LayerLabel label) { return static_cast<int>(label); }

LayerLabel layer_label_from_int(int value);  // throws Error for values outside 1..3
std::string_view to_string(LayerLabel label);

// How an assignment was produced: the rule-driven algorithm, a trained
// classifier, or externally supplied reference labels (ground truth).
enum class Provenance { Rule, Model, Reference };

std::string_view to_string(Provenance provenance);

// Total mapping node -> layer for some network, with provenance and a
// free-form reference to the config or model that produced it.
struct LayerAssignment {
    std::map<NodeId, LayerLabel> labels;
    Provenance provenance = Provenance::Reference;
    std::string source;

    bool covers(const DependencyNetwork& network) const;

    // Throws IncompleteAssignmentError when the node is unlabeled.
    LayerLabel at(const NodeId& id) const;
};

}  // namespace layrec
