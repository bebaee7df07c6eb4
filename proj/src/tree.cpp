#include "pointdec/tree.hpp"

#include <algorithm>

namespace pointdec {

void RootedTree::validate() const {
    if (nodes.empty()) throw InputError("tree has no nodes");
    if (!nodes.count(root)) throw InputError("root '" + root + "' is not a node");
    if (parent.count(root)) throw InputError("root '" + root + "' has a parent");
    for (const auto& t : nodes) {
        if (t == root) continue;
        if (!parent.count(t)) throw InputError("node '" + t + "' has no parent");
    }
    for (const auto& [c, p] : parent) {
        if (!nodes.count(c)) throw InputError("parent map mentions unknown node '" + c + "'");
        if (!nodes.count(p)) throw InputError("unknown parent '" + p + "' of node '" + c + "'");
    }
    // Acyclicity: every node must reach the root without revisiting.
    for (const auto& t : nodes) {
        std::set<NodeId> seen;
        NodeId cur = t;
        while (cur != root) {
            if (!seen.insert(cur).second)
                throw InputError("cycle in parent map through node '" + cur + "'");
            cur = parent.at(cur);
        }
    }
}

std::set<NodeId> RootedTree::children(const NodeId& t) const {
    std::set<NodeId> out;
    for (const auto& [c, p] : parent)
        if (p == t) out.insert(c);
    return out;
}

std::vector<NodeId> RootedTree::leaves() const {
    std::vector<NodeId> out;
    for (const auto& t : nodes)
        if (children(t).empty()) out.push_back(t);
    return out;
}

bool RootedTree::strictly_below(const NodeId& a, const NodeId& b) const {
    if (a == b) return false;
    NodeId cur = a;
    while (cur != root) {
        cur = parent.at(cur);
        if (cur == b) return true;
    }
    return false;
}

bool RootedTree::adjacent(const NodeId& a, const NodeId& b) const {
    auto ia = parent.find(a);
    if (ia != parent.end() && ia->second == b) return true;
    auto ib = parent.find(b);
    return ib != parent.end() && ib->second == a;
}

std::vector<NodeId> RootedTree::ancestors_inclusive(const NodeId& t) const {
    std::vector<NodeId> up;
    NodeId cur = t;
    up.push_back(cur);
    while (cur != root) {
        cur = parent.at(cur);
        up.push_back(cur);
    }
    std::reverse(up.begin(), up.end());
    return up;
}

std::vector<NodeId> RootedTree::path(const NodeId& a, const NodeId& b) const {
    auto ca = ancestors_inclusive(a);
    auto cb = ancestors_inclusive(b);
    std::size_t i = 0;
    while (i < ca.size() && i < cb.size() && ca[i] == cb[i]) ++i;
    // ca[i-1] is the lowest common ancestor.
    std::vector<NodeId> out(ca.begin() + static_cast<long>(i) - 1, ca.end());
    std::reverse(out.begin(), out.end());
    out.insert(out.end(), cb.begin() + static_cast<long>(i), cb.end());
    return out;
}

std::optional<NodeId> RootedTree::least(const std::set<NodeId>& s) const {
    if (s.empty()) return std::nullopt;
    for (const auto& cand : s) {
        bool ok = true;
        for (const auto& other : s) {
            if (other == cand) continue;
            if (!strictly_below(cand, other)) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    return std::nullopt;
}

std::vector<NodeId> RootedTree::postorder() const {
    std::vector<NodeId> out;
    std::vector<std::pair<NodeId, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [t, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            out.push_back(t);
            continue;
        }
        stack.emplace_back(t, true);
        auto cs = children(t);
        // Push in reverse so the lexicographically first child is visited first.
        for (auto it = cs.rbegin(); it != cs.rend(); ++it) stack.emplace_back(*it, false);
    }
    return out;
}

} // namespace pointdec
