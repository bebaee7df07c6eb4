#include "pointdec/mim.hpp"

#include <algorithm>

#include "pointdec/graph_algos.hpp"

namespace pointdec {

void BranchDecomposition::validate(const Hypergraph& h) const {
    tree.validate();
    std::set<GraphVertexId> targets;
    for (const auto& t : tree.nodes) {
        auto cs = tree.children(t);
        if (cs.empty()) {
            auto it = leaves.find(t);
            if (it == leaves.end()) throw InputError("leaf " + t + " has no label");
            const LeafLabel& lab = it->second;
            if (lab.kind == LeafKind::Vertex) {
                if (!h.vertices().count(lab.id))
                    throw InputError("leaf " + t + " labels unknown vertex " + lab.id);
                if (!targets.insert(inc_vertex_id(lab.id)).second)
                    throw InputError("vertex " + lab.id + " labelled twice");
            } else {
                if (!h.has_edge(lab.id))
                    throw InputError("leaf " + t + " labels unknown edge " + lab.id);
                if (!targets.insert(inc_edge_id(lab.id)).second)
                    throw InputError("edge " + lab.id + " labelled twice");
            }
        } else {
            if (cs.size() != 2)
                throw InputError("internal node " + t + " has " + std::to_string(cs.size()) +
                                 " children");
            if (leaves.count(t)) throw InputError("internal node " + t + " carries a label");
        }
    }
    if (targets.size() != h.vertices().size() + h.edge_count())
        throw InputError("leaf labels do not cover V(inc(H))");
}

std::set<GraphVertexId> branch_side(const BranchDecomposition& bd, const NodeId& t) {
    std::set<GraphVertexId> out;
    std::vector<NodeId> stack{t};
    while (!stack.empty()) {
        NodeId cur = stack.back();
        stack.pop_back();
        auto it = bd.leaves.find(cur);
        if (it != bd.leaves.end()) {
            out.insert(it->second.kind == LeafKind::Vertex ? inc_vertex_id(it->second.id)
                                                           : inc_edge_id(it->second.id));
        }
        for (const auto& c : bd.tree.children(cur)) stack.push_back(c);
    }
    return out;
}

std::size_t mim_width_of_branch(const Hypergraph& h, const BranchDecomposition& bd,
                                const Limits& limits) {
    Graph inc = incidence_graph(h);
    std::size_t best = 0;
    for (const auto& t : bd.tree.nodes) {
        std::set<GraphVertexId> side = branch_side(bd, t);
        std::set<GraphVertexId> rest;
        for (const auto& v : inc.vertices())
            if (!side.count(v)) rest.insert(v);
        best = std::max(best, mim_cut(inc, side, rest, limits));
    }
    return best;
}

PointSet cut_points(const Hypergraph& h, const BranchDecomposition& bd, const NodeId& t) {
    std::set<GraphVertexId> side = branch_side(bd, t);
    PointSet out;
    for (const auto& [e, vs] : h.edges()) {
        bool e_in = side.count(inc_edge_id(e)) != 0;
        for (const auto& v : vs) {
            bool v_in = side.count(inc_vertex_id(v)) != 0;
            if (v_in != e_in) out.insert(Point{v, e});
        }
    }
    return out;
}

SimplifiedPointDecomposition build_simplified_from_branch(const Hypergraph& h,
                                                          const BranchDecomposition& bd) {
    bd.validate(h);
    SimplifiedPointDecomposition spd;
    spd.tree = bd.tree;
    std::map<NodeId, PointSet> cuts;
    for (const auto& t : bd.tree.nodes) cuts[t] = cut_points(h, bd, t);
    for (const auto& t : bd.tree.nodes) {
        auto cs = bd.tree.children(t);
        PointSet bag = cuts[t];
        if (!cs.empty()) {
            auto it = cs.begin();
            const PointSet& c1 = cuts[*it++];
            const PointSet& c2 = cuts[*it];
            for (const auto& p : c1)
                if (c2.count(p)) bag.insert(p);
        }
        spd.bags[t] = std::move(bag);
    }
    return spd;
}

bool consistent_subbags(const SimplifiedPointDecomposition& spd, const Hypergraph& h,
                        const SubBag& child, const SubBag& parent, std::size_t k,
                        ConsistencyMode mode, const Limits& limits) {
    if (spd.tree.parent.find(child.first) == spd.tree.parent.end() ||
        spd.tree.parent.at(child.first) != parent.first)
        throw InputError("consistency check requires a parent-child node pair");
    const PointSet& bt = spd.bag(child.first);
    const PointSet& bp = spd.bag(parent.first);
    if (mode == ConsistencyMode::Oracle) {
        for (const auto& sub : all_subhypergraphs(h, limits)) {
            if (restricted_vertices(h, sub, bt) == child.second &&
                restricted_vertices(h, sub, bp) == parent.second)
                return true;
        }
        return false;
    }
    // Two independent witness searches over subhypergraphs of <= 2k edges:
    // H1 with V(H1|B_t) = S1 and V(H1|B_t') ⊆ S2, and symmetrically H2.
    auto witness = [&](const PointSet& own_bag, const VertexSet& own_set,
                       const PointSet& other_bag, const VertexSet& other_set) {
        std::vector<EdgeId> candidates;
        for (const auto& [e, vs] : h.edges()) {
            VertexSet own = restrict_edge(h, e, own_bag);
            if (own.empty()) continue;
            bool own_ok = std::includes(own_set.begin(), own_set.end(), own.begin(), own.end());
            if (!own_ok) continue;
            candidates.push_back(e);
        }
        std::size_t cap = std::min(candidates.size(), 2 * k);
        Subhypergraph pick;
        auto recurse = [&](auto&& self, std::size_t start) -> bool {
            VertexSet own = restricted_vertices(h, pick, own_bag);
            VertexSet other = restricted_vertices(h, pick, other_bag);
            if (own == own_set &&
                std::includes(other_set.begin(), other_set.end(), other.begin(), other.end()))
                return true;
            if (pick.size() == cap) return false;
            for (std::size_t i = start; i < candidates.size(); ++i) {
                pick.insert(candidates[i]);
                if (self(self, i + 1)) return true;
                pick.erase(candidates[i]);
            }
            return false;
        };
        return recurse(recurse, 0);
    };
    return witness(bt, child.second, bp, parent.second) &&
           witness(bp, parent.second, bt, child.second);
}

PointDecomposition flatten(const SimplifiedPointDecomposition& spd, const Hypergraph& h,
                           std::size_t k, const Limits& limits) {
    PointDecomposition pd;
    pd.tree = spd.tree;
    pd.bags = spd.bags;
    bool exhaustive = h.edge_count() <= limits.cover_subset_edges;
    for (const auto& [t, p] : spd.tree.parent) {
        auto child_sets = enumerate_subbags_of_bag(
            h, spd.bag(t), k, exhaustive ? SubbagMode::Exhaustive : SubbagMode::Bounded,
            limits);
        auto parent_sets = enumerate_subbags_of_bag(
            h, spd.bag(p), k, exhaustive ? SubbagMode::Exhaustive : SubbagMode::Bounded,
            limits);
        for (const auto& s1 : child_sets) {
            for (const auto& s2 : parent_sets) {
                SubBag c{t, s1}, q{p, s2};
                if (consistent_subbags(spd, h, c, q, k, ConsistencyMode::Fast, limits))
                    pd.arcs.insert({c, q});
            }
        }
    }
    return pd;
}

std::set<EdgeId> reachable_edges_cover(const Hypergraph& h, const CoverOrder& order,
                                       const VertexId& x) {
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    if (!pos.count(x)) throw InputError("vertex " + x + " not in order");
    // Vertices reachable from x through edges, moving only over vertices <= x.
    VertexSet reached{x};
    std::vector<VertexId> frontier{x};
    std::set<EdgeId> out;
    while (!frontier.empty()) {
        VertexId cur = frontier.back();
        frontier.pop_back();
        for (const auto& [e, vs] : h.edges()) {
            if (!vs.count(cur)) continue;
            out.insert(e);
            for (const auto& v : vs) {
                if (pos.at(v) <= pos.at(x) && !reached.count(v)) {
                    reached.insert(v);
                    frontier.push_back(v);
                }
            }
        }
    }
    return out;
}

Hypergraph cover_slice(const Hypergraph& h, const CoverOrder& order, const VertexId& x) {
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::set<EdgeId> hx = reachable_edges_cover(h, order, x);
    VertexSet vhx;
    for (const auto& e : hx) vhx.insert(h.edge(e).begin(), h.edge(e).end());
    VertexSet keep;
    for (const auto& v : vhx)
        if (pos.at(v) >= pos.at(x)) keep.insert(v);
    SetSystem sets;
    for (const auto& e : hx) {
        VertexSet r;
        for (const auto& v : h.edge(e))
            if (keep.count(v)) r.insert(v);
        if (!r.empty()) sets.insert(std::move(r));
    }
    return hypergraph_from_sets(sets);
}

std::size_t coverwidth_of_order(const Hypergraph& h, const CoverOrder& order,
                                const Limits& limits) {
    VertexSet check(order.begin(), order.end());
    if (check != h.vertices() || check.size() != order.size())
        throw InputError("order is not a permutation of V(H)");
    std::size_t best = 0;
    for (const auto& x : order) {
        Hypergraph slice = cover_slice(h, order, x);
        best = std::max(best, beta_cover_number(slice, BetaCnMode::ViaMim, limits));
    }
    return best;
}

std::size_t min_coverwidth_exhaustive(const Hypergraph& h, const Limits& limits) {
    CoverOrder order(h.vertices().begin(), h.vertices().end());
    if (order.size() > limits.coverwidth_order_vertices)
        throw SizeLimitError("exhaustive coverwidth over " + std::to_string(order.size()) +
                             " vertices exceeds cap");
    std::size_t best = 0;
    bool have = false;
    do {
        std::size_t cw = coverwidth_of_order(h, order, limits);
        if (!have || cw < best) {
            best = cw;
            have = true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

SimplifiedPointDecomposition build_spd_from_order(const Hypergraph& h,
                                                  const CoverOrder& order) {
    VertexSet check(order.begin(), order.end());
    if (check != h.vertices() || check.size() != order.size())
        throw InputError("order is not a permutation of V(H)");
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    const VertexId& xmax = order.back();
    SimplifiedPointDecomposition spd;
    spd.tree.root = "t:" + xmax;
    for (const auto& x : h.vertices()) spd.tree.nodes.insert("t:" + x);
    for (const auto& x : h.vertices()) {
        std::set<EdgeId> hx = reachable_edges_cover(h, order, x);
        // Bag: points (y,e) with e in H^x, y in e, y >= x.
        PointSet bag;
        VertexSet vslice;
        for (const auto& e : hx) {
            for (const auto& y : h.edge(e)) {
                if (pos.at(y) >= pos.at(x)) {
                    bag.insert(Point{y, e});
                    vslice.insert(y);
                }
            }
        }
        spd.bags["t:" + x] = std::move(bag);
        if (x == xmax) continue;
        if (vslice.size() >= 2) {
            VertexSet rest = vslice;
            rest.erase(x);
            VertexId y = *std::min_element(rest.begin(), rest.end(),
                                           [&](const VertexId& a, const VertexId& b) {
                                               return pos.at(a) < pos.at(b);
                                           });
            spd.tree.parent["t:" + x] = "t:" + y;
        } else {
            spd.tree.parent["t:" + x] = "t:" + xmax;
        }
    }
    spd.tree.validate();
    return spd;
}

HnFamily gen_hn(unsigned n) {
    if (n == 0) throw InputError("n must be positive");
    HnFamily out;
    auto xi = [](unsigned i) { return "x" + std::to_string(i); };
    auto yi = [](unsigned i) { return "y" + std::to_string(i); };
    std::map<EdgeId, VertexSet> edges;
    for (unsigned i = 1; i <= n; ++i) {
        VertexSet ex, ey;
        for (unsigned j = 1; j <= n; ++j) {
            ex.insert(yi(j));
            ey.insert(xi(j));
        }
        ex.insert(xi(i));
        ey.insert(yi(i));
        if (n == 1) {
            // e_{x1} and e_{y1} are the same set; keep one.
            edges.emplace("ex1", ex);
            out.collapsed = true;
            break;
        }
        edges.emplace("ex" + std::to_string(i), ex);
        edges.emplace("ey" + std::to_string(i), ey);
    }
    out.hypergraph = Hypergraph(std::move(edges));

    BranchDecomposition bd;
    if (n == 1) {
        bd.tree.root = "r";
        bd.tree.nodes = {"r", "a", "b", "c", "d"};
        bd.tree.parent = {{"a", "r"}, {"b", "r"}, {"c", "b"}, {"d", "b"}};
        bd.leaves = {{"a", {LeafKind::Vertex, "x1"}},
                     {"c", {LeafKind::Vertex, "y1"}},
                     {"d", {LeafKind::Edge, "ex1"}}};
        bd.validate(out.hypergraph);
        out.branch = std::move(bd);
        return out;
    }
    // Rooted path t_{1,1}, t_{1,2}, ..., t_{n,1}, t_{n,2}, s_{1,1}, s_{1,2},
    // ..., s_{n,1}, s_{n,2}; each spine node except the last hangs one leaf.
    std::vector<NodeId> spine;
    for (unsigned i = 1; i <= n; ++i) {
        spine.push_back("t" + std::to_string(i) + ".1");
        spine.push_back("t" + std::to_string(i) + ".2");
    }
    for (unsigned i = 1; i <= n; ++i) {
        spine.push_back("s" + std::to_string(i) + ".1");
        spine.push_back("s" + std::to_string(i) + ".2");
    }
    bd.tree.root = spine.front();
    for (std::size_t i = 0; i < spine.size(); ++i) {
        bd.tree.nodes.insert(spine[i]);
        if (i > 0) bd.tree.parent[spine[i]] = spine[i - 1];
    }
    auto hang = [&](const NodeId& at, const NodeId& leaf, LeafKind kind, const std::string& id) {
        bd.tree.nodes.insert(leaf);
        bd.tree.parent[leaf] = at;
        bd.leaves[leaf] = {kind, id};
    };
    for (unsigned i = 1; i <= n; ++i) {
        hang("t" + std::to_string(i) + ".1", "t" + std::to_string(i) + ".1'",
             LeafKind::Vertex, xi(i));
        hang("t" + std::to_string(i) + ".2", "t" + std::to_string(i) + ".2'",
             LeafKind::Edge, "ex" + std::to_string(i));
    }
    for (unsigned i = 1; i + 1 <= n; ++i) {
        hang("s" + std::to_string(i) + ".1", "s" + std::to_string(i) + ".1'",
             LeafKind::Vertex, yi(i));
        hang("s" + std::to_string(i) + ".2", "s" + std::to_string(i) + ".2'",
             LeafKind::Edge, "ey" + std::to_string(i));
    }
    hang("s" + std::to_string(n) + ".1", "s" + std::to_string(n) + ".1'",
         LeafKind::Vertex, yi(n));
    bd.leaves["s" + std::to_string(n) + ".2"] = {LeafKind::Edge, "ey" + std::to_string(n)};
    bd.validate(out.hypergraph);
    out.branch = std::move(bd);
    return out;
}

} // namespace pointdec
