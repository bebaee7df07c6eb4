#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pointdec/errors.hpp"

namespace pointdec {

using NodeId = std::string;

// Rooted tree given by a parent map; the root is the unique node without a
// parent. t1 <_T t2 iff t1 is a strict descendant of t2.
struct RootedTree {
    std::set<NodeId> nodes;
    std::map<NodeId, NodeId> parent; // defined for every node except the root
    NodeId root;

    void validate() const;

    bool has_node(const NodeId& t) const { return nodes.count(t) != 0; }
    std::set<NodeId> children(const NodeId& t) const;
    std::vector<NodeId> leaves() const;

    // Strict descendant test: a <_T b.
    bool strictly_below(const NodeId& a, const NodeId& b) const;
    bool adjacent(const NodeId& a, const NodeId& b) const;

    // Root-to-node ancestor chain including the node itself.
    std::vector<NodeId> ancestors_inclusive(const NodeId& t) const;

    // Unique tree path between two nodes, endpoints included.
    std::vector<NodeId> path(const NodeId& a, const NodeId& b) const;

    // Least element of a nonempty set under <_T, if one element is below
    // all others; nullopt when the set has no comparable minimum.
    std::optional<NodeId> least(const std::set<NodeId>& s) const;

    // Post-order with lexicographic child order; a topological order
    // extending <_T (children before parents).
    std::vector<NodeId> postorder() const;

    bool operator==(const RootedTree&) const = default;
};

} // namespace pointdec
