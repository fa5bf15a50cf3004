#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "layrec/errors.hpp"

namespace layrec {

// Opaque stable identifier of a program element, unique within a network.
using NodeId = std::string;

enum class ElementKind { Class, Interface, Package, Layer, Unknown };
enum class EdgeKind { Extends, Implements, Imports, Unknown };

std::string_view to_string(ElementKind kind);
std::string_view to_string(EdgeKind kind);
ElementKind element_kind_from_string(std::string_view text);
EdgeKind edge_kind_from_string(std::string_view text);

struct ProgramElement {
    NodeId id;
    std::string name;  // fully-qualified element name
    ElementKind kind = ElementKind::Unknown;
};

struct DependencyEdge {
    NodeId source;
    NodeId target;
    EdgeKind kind = EdgeKind::Unknown;
};

/// Directed dependency network over program elements.
///
/// Parallel edges are collapsed to a simple edge set (the kind of the
/// first-seen edge is kept) and self-dependencies are rejected, so every
/// stored edge is an inter-element dependency. Networks are meant to be
/// built once and treated as immutable afterwards; all const accessors are
/// safe to call concurrently.
class DependencyNetwork {
public:
    // Throws DuplicateNodeError if the id is already present.
    void add_node(ProgramElement element);

    // Dedups repeated (source, target) pairs silently. Throws
    // UnknownNodeError for a missing endpoint and SelfDependencyError when
    // source == target.
    void add_edge(DependencyEdge edge);

    bool has_node(const NodeId& id) const { return index_by_id_.contains(id); }
    bool has_edge(const NodeId& source, const NodeId& target) const;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return nodes_.empty(); }

    // Index of a node within nodes(); throws UnknownNodeError.
    std::size_t index_of(const NodeId& id) const;

    const ProgramElement& node_at(std::size_t index) const { return nodes_[index]; }
    const std::vector<ProgramElement>& nodes() const { return nodes_; }
    const std::vector<DependencyEdge>& edges() const { return edges_; }

    std::span<const std::size_t> out_neighbors(std::size_t index) const {
        return out_[index];
    }
    std::span<const std::size_t> in_neighbors(std::size_t index) const {
        return in_[index];
    }

private:
    std::vector<ProgramElement> nodes_;
    std::vector<DependencyEdge> edges_;
    std::unordered_map<std::string, std::size_t> index_by_id_;
    std::unordered_set<std::uint64_t> edge_keys_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<std::vector<std::size_t>> in_;
};

// Orders ids numerically when both are pure digit strings, otherwise
// lexicographically. Used wherever output must be deterministic.
bool natural_id_less(const NodeId& a, const NodeId& b);

}  // namespace layrec
