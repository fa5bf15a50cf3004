#include "layrec/graph.hpp"

#include <algorithm>
#include <cctype>

namespace layrec {

std::string_view to_string(ElementKind kind) {
    switch (kind) {
        case ElementKind::Class: return "class";
        case ElementKind::Interface: return "interface";
        case ElementKind::Package: return "package";
        case ElementKind::Layer: return "layer";
        case ElementKind::Unknown: break;
    }
    return "unknown";
}

std::string_view to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Extends: return "extends";
        case EdgeKind::Implements: return "implements";
        case EdgeKind::Imports: return "imports";
        case EdgeKind::Unknown: break;
    }
    return "unknown";
}

ElementKind element_kind_from_string(std::string_view text) {
    if (text == "class") return ElementKind::Class;
    if (text == "interface") return ElementKind::Interface;
    if (text == "package") return ElementKind::Package;
    if (text == "layer") return ElementKind::Layer;
    return ElementKind::Unknown;
}

EdgeKind edge_kind_from_string(std::string_view text) {
    if (text == "extends") return EdgeKind::Extends;
    if (text == "implements") return EdgeKind::Implements;
    if (text == "imports") return EdgeKind::Imports;
    return EdgeKind::Unknown;
}

void DependencyNetwork::add_node(ProgramElement element) {
    if (element.id.empty()) {
        throw Error("node id must be non-empty");
    }
    if (element.name.empty()) {
        throw Error("node name must be non-empty (id '" + element.id + "')");
    }
    if (index_by_id_.contains(element.id)) {
        throw DuplicateNodeError("duplicate node id '" + element.id + "'");
    }
    index_by_id_.emplace(element.id, nodes_.size());
    nodes_.push_back(std::move(element));
    out_.emplace_back();
    in_.emplace_back();
}

void DependencyNetwork::add_edge(DependencyEdge edge) {
    if (edge.source == edge.target) {
        throw SelfDependencyError("self-dependency on node '" + edge.source + "'");
    }
    const std::size_t u = index_of(edge.source);
    const std::size_t v = index_of(edge.target);
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
    if (!edge_keys_.insert(key).second) {
        return;  // parallel edge: keep the first-seen kind
    }
    out_[u].push_back(v);
    in_[v].push_back(u);
    edges_.push_back(std::move(edge));
}

bool DependencyNetwork::has_edge(const NodeId& source, const NodeId& target) const {
    auto su = index_by_id_.find(source);
    auto sv = index_by_id_.find(target);
    if (su == index_by_id_.end() || sv == index_by_id_.end()) return false;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(su->second) << 32) | sv->second;
    return edge_keys_.contains(key);
}

std::size_t DependencyNetwork::index_of(const NodeId& id) const {
    auto it = index_by_id_.find(id);
    if (it == index_by_id_.end()) {
        throw UnknownNodeError("unknown node id '" + id + "'");
    }
    return it->second;
}

bool natural_id_less(const NodeId& a, const NodeId& b) {
    auto all_digits = [](const NodeId& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        });
    };
    if (all_digits(a) && all_digits(b)) {
        if (a.size() != b.size()) return a.size() < b.size();
    }
    return a < b;
}

}  // namespace layrec
