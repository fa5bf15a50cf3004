#include "layrec/layer_types.hpp"

namespace layrec {

LayerLabel layer_label_from_int(int value) {
    switch (value) {
        case 1: return LayerLabel::Lower;
        case 2: return LayerLabel::Middle;
        case 3: return LayerLabel::Upper;
        default: break;
    }
    throw Error("layer label out of range: " + std::to_string(value));
}

std::string_view to_string(LayerLabel label) {
    switch (label) {
        case LayerLabel::Lower: return "lower";
        case LayerLabel::Middle: return "middle";
        case LayerLabel::Upper: return "upper";
    }
    return "unknown";
}

std::string_view to_string(Provenance provenance) {
    switch (provenance) {
        case Provenance::Rule: return "rule";
        case Provenance::Model: return "model";
        case Provenance::Reference: return "reference";
    }
    return "unknown";
}

bool LayerAssignment::covers(const DependencyNetwork& network) const {
    for (const auto& node : network.nodes()) {
        if (!labels.contains(node.id)) return false;
    }
    return true;
}

LayerLabel LayerAssignment::at(const NodeId& id) const {
    auto it = labels.find(id);
    if (it == labels.end()) {
        throw IncompleteAssignmentError("no layer assigned to node '" + id + "'");
    }
    return it->second;
}

}  // namespace layrec
