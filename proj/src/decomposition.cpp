#include "pointdec/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <unordered_map>

namespace pointdec {

namespace {

std::string subbag_str(const SubBag& s) {
    std::string out = "(" + s.first + ",{";
    bool first = true;
    for (const auto& v : s.second) {
        if (!first) out += ",";
        out += v;
        first = false;
    }
    return out + "})";
}

std::string arc_str(const Arc& a) { return subbag_str(a.first) + "->" + subbag_str(a.second); }

} // namespace

std::set<VertexSet> enumerate_subbags_of_bag(const Hypergraph& h, const PointSet& bag,
                                             std::size_t k, SubbagMode mode,
                                             const Limits& limits) {
    std::set<VertexSet> out;
    out.insert(VertexSet{});
    if (mode == SubbagMode::Exhaustive) {
        for (const auto& sub : all_subhypergraphs(h, limits))
            out.insert(restricted_vertices(h, sub, bag));
        return out;
    }
    // Bounded mode: every realizable S is a union of at most k nonempty
    // restricted edges (a guard has at most k edges when β-cn(H|_B) <= k).
    std::vector<VertexSet> restricted;
    {
        std::set<VertexSet> distinct;
        for (const auto& [e, vs] : h.edges()) {
            VertexSet r = restrict_edge(h, e, bag);
            if (!r.empty() && distinct.insert(r).second) restricted.push_back(std::move(r));
        }
    }
    const std::size_t n = restricted.size();
    std::vector<std::size_t> pick;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (!pick.empty()) {
            VertexSet u;
            for (std::size_t i : pick)
                u.insert(restricted[i].begin(), restricted[i].end());
            out.insert(std::move(u));
        }
        if (pick.size() == k) return;
        for (std::size_t i = start; i < n; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

std::set<VertexSet> enumerate_subbags(const Hypergraph& h, const PointDecomposition& pd,
                                      const NodeId& t, std::size_t k, SubbagMode mode,
                                      const Limits& limits) {
    return enumerate_subbags_of_bag(h, pd.bag(t), k, mode, limits);
}

DecomposabilityResult check_decomposable(const Hypergraph&, const PointDecomposition& pd,
                                         const Limits&) {
    // Reverse reachability over the arc graph: reach_to[x] = sub-bags with a
    // directed path to x (including x itself).
    std::set<SubBag> verts;
    for (const auto& [a, b] : pd.arcs) {
        verts.insert(a);
        verts.insert(b);
    }
    std::map<SubBag, std::set<SubBag>> reach_to;
    for (const auto& x : verts) reach_to[x].insert(x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : pd.arcs) {
            auto& rb = reach_to[b];
            for (const auto& s : reach_to[a])
                if (rb.insert(s).second) changed = true;
        }
    }
    auto reach_nodes = [&](const SubBag& x) {
        std::set<NodeId> out;
        for (const auto& s : reach_to[x]) out.insert(s.first);
        return out;
    };
    // Arcs grouped by head.
    std::map<SubBag, std::vector<SubBag>> heads;
    for (const auto& [a, b] : pd.arcs) heads[b].push_back(a);
    for (const auto& [s, tails] : heads) {
        for (std::size_t i = 0; i < tails.size(); ++i) {
            for (std::size_t j = i + 1; j < tails.size(); ++j) {
                const SubBag& s1 = tails[i];
                const SubBag& s2 = tails[j];
                if (s1.first == s2.first) continue;
                std::set<NodeId> n1 = reach_nodes(s1);
                std::set<NodeId> n2 = reach_nodes(s2);
                bool common = std::any_of(n1.begin(), n1.end(),
                                          [&](const NodeId& t) { return n2.count(t); });
                if (!common) continue;
                if (pd.arcs.count({s1, s2}) || pd.arcs.count({s2, s1})) continue;
                return DecomposabilityResult{false, std::make_tuple(s, s1, s2)};
            }
        }
    }
    return DecomposabilityResult{};
}

SubBagGraph restrict_tstructure(const PointDecomposition& pd, const Hypergraph& h,
                                const Subhypergraph& sub) {
    std::set<SubBag> verts;
    for (const auto& t : pd.tree.nodes)
        verts.insert({t, restricted_vertices(h, sub, pd.bag(t))});
    std::set<Arc> arcs;
    for (const auto& a : pd.arcs)
        if (verts.count(a.first) && verts.count(a.second)) arcs.insert(a);
    // Weakly connected components; keep those containing the root sub-bag or
    // any nonempty sub-bag.
    std::map<SubBag, std::set<SubBag>> adj;
    for (const auto& [a, b] : arcs) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    SubBagGraph out;
    std::set<SubBag> seen;
    for (const auto& v : verts) {
        if (seen.count(v)) continue;
        std::vector<SubBag> component{v};
        seen.insert(v);
        for (std::size_t i = 0; i < component.size(); ++i) {
            for (const auto& nb : adj[component[i]]) {
                if (seen.insert(nb).second) component.push_back(nb);
            }
        }
        bool keep = std::any_of(component.begin(), component.end(), [&](const SubBag& s) {
            return s.first == pd.tree.root || !s.second.empty();
        });
        if (keep) out.sub_bags.insert(component.begin(), component.end());
    }
    for (const auto& a : arcs)
        if (out.sub_bags.count(a.first) && out.sub_bags.count(a.second)) out.arcs.insert(a);
    return out;
}

bool is_realisation(const PointDecomposition& pd, const std::set<SubBag>& sub_bags) {
    std::set<NodeId> nodes;
    for (const auto& [t, s] : sub_bags)
        if (!nodes.insert(t).second) return false;
    std::set<SubBag> sinks;
    for (const auto& s : sub_bags) {
        bool has_out = false;
        for (const auto& s2 : sub_bags) {
            if (pd.arcs.count({s, s2})) {
                has_out = true;
                break;
            }
        }
        if (!has_out) sinks.insert(s);
    }
    return sinks.size() == 1 && sinks.begin()->first == pd.tree.root;
}

RootedTree tree_of(const PointDecomposition& pd, const std::set<SubBag>& sub_bags) {
    RootedTree out;
    std::map<NodeId, SubBag> at;
    for (const auto& s : sub_bags) {
        out.nodes.insert(s.first);
        at.emplace(s.first, s);
    }
    std::vector<NodeId> roots;
    for (const auto& s : sub_bags) {
        std::set<NodeId> candidates;
        for (const auto& s2 : sub_bags)
            if (pd.arcs.count({s, s2})) candidates.insert(s2.first);
        if (candidates.empty()) {
            roots.push_back(s.first);
            continue;
        }
        auto least = pd.tree.least(candidates);
        if (!least)
            throw InputError("no least parent candidate for sub-bag " + subbag_str(s));
        out.parent[s.first] = *least;
    }
    if (roots.size() != 1)
        throw InputError("sub-bag set has " + std::to_string(roots.size()) + " sinks");
    out.root = roots.front();
    out.validate();
    return out;
}

namespace {

// Connectivity of a node subset inside an undirected tree.
bool connected_in_tree(const RootedTree& tree, const std::set<NodeId>& nodes) {
    if (nodes.size() <= 1) return true;
    std::set<NodeId> seen;
    std::vector<NodeId> stack{*nodes.begin()};
    seen.insert(*nodes.begin());
    while (!stack.empty()) {
        NodeId cur = stack.back();
        stack.pop_back();
        std::set<NodeId> nb = tree.children(cur);
        auto it = tree.parent.find(cur);
        if (it != tree.parent.end()) nb.insert(it->second);
        for (const auto& n : nb) {
            if (nodes.count(n) && seen.insert(n).second) stack.push_back(n);
        }
    }
    return seen == nodes;
}

// Condition (iii) for one realisation; reports violations in place.
void check_connectivity_iii(const PointDecomposition& pd, const std::set<SubBag>& real,
                            const std::string& label, ValidationReport& report) {
    RootedTree ta;
    try {
        ta = tree_of(pd, real);
    } catch (const InputError& ex) {
        report.violations.push_back("realisation " + label + ": " + ex.what());
        return;
    }
    VertexSet all;
    for (const auto& [t, s] : real) all.insert(s.begin(), s.end());
    for (const auto& v : all) {
        std::set<NodeId> holding;
        for (const auto& [t, s] : real)
            if (s.count(v)) holding.insert(t);
        if (!connected_in_tree(ta, holding)) {
            report.violations.push_back("condition (iii): vertex " + v +
                                        " disconnected in realisation " + label);
            return;
        }
    }
}

std::map<NodeId, std::vector<VertexSet>> node_subbags(const Hypergraph& h,
                                                      const PointDecomposition& pd,
                                                      const Limits& limits) {
    std::map<NodeId, std::vector<VertexSet>> out;
    bool exhaustive = h.edge_count() <= limits.cover_subset_edges;
    for (const auto& t : pd.tree.nodes) {
        std::set<VertexSet> ss;
        if (exhaustive) {
            ss = enumerate_subbags_of_bag(h, pd.bag(t), 0, SubbagMode::Exhaustive, limits);
        } else {
            std::size_t k = beta_cover_number_sets(collapse_sets(restrict_hypergraph(h, pd.bag(t))),
                                                   BetaCnMode::ViaMim, limits);
            ss = enumerate_subbags_of_bag(h, pd.bag(t), k, SubbagMode::Bounded, limits);
        }
        out.emplace(t, std::vector<VertexSet>(ss.begin(), ss.end()));
    }
    return out;
}

} // namespace

std::optional<std::vector<std::set<SubBag>>>
enumerate_realisations(const Hypergraph& h, const PointDecomposition& pd,
                       const Limits& limits) {
    auto lattice = node_subbags(h, pd, limits);
    std::uint64_t product = 1;
    for (const auto& [t, ss] : lattice) {
        if (product > limits.realisation_product / (ss.size() + 1)) return std::nullopt;
        product *= ss.size() + 1;
    }
    std::vector<NodeId> nodes(pd.tree.nodes.begin(), pd.tree.nodes.end());
    std::vector<std::set<SubBag>> out;
    std::set<SubBag> current;
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == nodes.size()) {
            if (is_realisation(pd, current)) out.push_back(current);
            return;
        }
        self(self, i + 1); // node absent
        for (const auto& s : lattice.at(nodes[i])) {
            SubBag sb{nodes[i], s};
            current.insert(sb);
            self(self, i + 1);
            current.erase(sb);
        }
    };
    recurse(recurse, 0);
    return out;
}

void check_subbags_achievable(const Hypergraph& h, const PointDecomposition& pd,
                              const Limits& limits) {
    auto lattice = node_subbags(h, pd, limits);
    auto check = [&](const SubBag& s) {
        if (!pd.tree.has_node(s.first))
            throw InputError("arc references unknown node " + s.first);
        const auto& ss = lattice.at(s.first);
        if (std::find(ss.begin(), ss.end(), s.second) == ss.end())
            throw InputError("arc references unachievable sub-bag " + subbag_str(s));
    };
    for (const auto& [a, b] : pd.arcs) {
        check(a);
        check(b);
    }
}

namespace {

// Integer-indexed engine for the exhaustive condition (ii)/(iii) sweeps.
// Vertex sets become uint64 bitmasks and sub-bags small ids, which makes the
// 2^|H| subhypergraph loop cheap enough for desk-scale exhaustive runs.
// Usable when |V(H)| <= 64; validate_pd falls back to the generic path
// otherwise.
class FastEngine {
public:
    FastEngine(const Hypergraph& h, const PointDecomposition& pd,
               const std::map<NodeId, std::vector<VertexSet>>& lattice) {
        nodes_.assign(pd.tree.nodes.begin(), pd.tree.nodes.end());
        for (std::size_t i = 0; i < nodes_.size(); ++i) node_idx_[nodes_[i]] = (int)i;
        root_ = node_idx_.at(pd.tree.root);
        below_.assign(nodes_.size(), std::vector<bool>(nodes_.size(), false));
        for (std::size_t a = 0; a < nodes_.size(); ++a)
            for (std::size_t b = 0; b < nodes_.size(); ++b)
                below_[a][b] = pd.tree.strictly_below(nodes_[a], nodes_[b]);
        for (const auto& [e, vs] : h.edges()) edge_names_.push_back(e);
        int vi = 0;
        for (const auto& v : h.vertices()) vert_idx_[v] = vi++;
        vert_names_.assign(h.vertices().begin(), h.vertices().end());
        rmask_.assign(nodes_.size(), std::vector<std::uint64_t>(edge_names_.size(), 0));
        for (std::size_t t = 0; t < nodes_.size(); ++t)
            for (std::size_t e = 0; e < edge_names_.size(); ++e)
                rmask_[t][e] = mask_of(restrict_edge(h, edge_names_[e], pd.bag(nodes_[t])));
        id_at_.resize(nodes_.size());
        lattice_ids_.resize(nodes_.size());
        for (std::size_t t = 0; t < nodes_.size(); ++t) {
            for (const auto& s : lattice.at(nodes_[t])) {
                std::uint64_t m = mask_of(s);
                if (id_at_[t].count(m)) continue;
                int id = (int)sb_node_.size();
                sb_node_.push_back((int)t);
                sb_mask_.push_back(m);
                id_at_[t][m] = id;
                lattice_ids_[t].push_back(id);
            }
        }
        arc_.assign(sb_node_.size(), std::vector<bool>(sb_node_.size(), false));
        for (const auto& [a, b] : pd.arcs) {
            int ia = id_at_[node_idx_.at(a.first)].at(mask_of(a.second));
            int ib = id_at_[node_idx_.at(b.first)].at(mask_of(b.second));
            arc_[ia][ib] = true;
        }
    }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t lattice_size(std::size_t t) const { return lattice_ids_[t].size(); }

    // A[H']_∅ for an edge bitmask; ids of the kept sub-bags, one per node or
    // dropped with its all-empty non-root component.
    std::vector<int> restrict_ids(std::uint64_t sub) const {
        std::vector<int> present(nodes_.size());
        for (std::size_t t = 0; t < nodes_.size(); ++t) {
            std::uint64_t m = 0;
            std::uint64_t rest = sub;
            while (rest) {
                int e = std::countr_zero(rest);
                rest &= rest - 1;
                m |= rmask_[t][e];
            }
            present[t] = id_at_[t].at(m);
        }
        // weak components via union-find over the node slots
        std::vector<int> rep(nodes_.size());
        for (std::size_t t = 0; t < nodes_.size(); ++t) rep[t] = (int)t;
        auto find = [&](int x) {
            while (rep[x] != x) x = rep[x] = rep[rep[x]];
            return x;
        };
        for (std::size_t a = 0; a < nodes_.size(); ++a)
            for (std::size_t b = 0; b < nodes_.size(); ++b)
                if (a != b && arc_[present[a]][present[b]]) rep[find((int)a)] = find((int)b);
        std::vector<bool> keep_comp(nodes_.size(), false);
        for (std::size_t t = 0; t < nodes_.size(); ++t)
            if ((int)t == root_ || sb_mask_[present[t]] != 0) keep_comp[find((int)t)] = true;
        std::vector<int> kept;
        for (std::size_t t = 0; t < nodes_.size(); ++t)
            if (keep_comp[find((int)t)]) kept.push_back(present[t]);
        return kept;
    }

    bool is_realisation_ids(const std::vector<int>& ids) const {
        int sinks = 0;
        int sink = -1;
        for (int a : ids) {
            bool has_out = false;
            for (int b : ids)
                if (a != b && arc_[a][b]) {
                    has_out = true;
                    break;
                }
            if (!has_out) {
                ++sinks;
                sink = a;
            }
        }
        return sinks == 1 && sb_node_[sink] == root_;
    }

    // Condition (iii) on one realisation: derived tree + per-vertex
    // connectivity. Returns an empty string on success.
    std::string check_iii_ids(const std::vector<int>& ids) const {
        // T_{A'}: parent = least arc-target node
        std::vector<int> slot(nodes_.size(), -1); // node -> position in ids
        for (std::size_t i = 0; i < ids.size(); ++i) slot[sb_node_[ids[i]]] = (int)i;
        std::vector<int> parent(ids.size(), -1);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            std::vector<int> cand;
            for (int b : ids)
                if (arc_[ids[i]][b]) cand.push_back(sb_node_[b]);
            if (cand.empty()) continue;
            int least = -1;
            for (int c : cand) {
                bool minimal = true;
                for (int o : cand)
                    if (o != c && !below_[c][o]) minimal = false;
                if (minimal) {
                    least = c;
                    break;
                }
            }
            if (least < 0) return "no least parent candidate in derived tree";
            parent[i] = slot[least];
        }
        // per-vertex holding sets must be connected in the derived tree
        std::uint64_t all = 0;
        for (int a : ids) all |= sb_mask_[a];
        while (all) {
            int v = std::countr_zero(all);
            all &= all - 1;
            std::uint64_t bit = 1ull << v;
            std::vector<char> holds(ids.size(), 0);
            int count = 0;
            int start = -1;
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (sb_mask_[ids[i]] & bit) {
                    holds[i] = 1;
                    ++count;
                    start = (int)i;
                }
            if (count <= 1) continue;
            // undirected DFS within the holding set
            std::vector<std::vector<int>> adj(ids.size());
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (parent[i] >= 0) {
                    adj[i].push_back(parent[i]);
                    adj[parent[i]].push_back((int)i);
                }
            std::vector<char> seen(ids.size(), 0);
            std::vector<int> stack{start};
            seen[start] = 1;
            int reached = 1;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                for (int nb : adj[cur])
                    if (holds[nb] && !seen[nb]) {
                        seen[nb] = 1;
                        ++reached;
                        stack.push_back(nb);
                    }
            }
            if (reached != count)
                return "condition (iii): vertex " + vert_names_[v] + " disconnected";
        }
        return {};
    }

    std::string subset_label(std::uint64_t sub) const {
        std::string label = "A[{";
        while (sub) {
            int e = std::countr_zero(sub);
            sub &= sub - 1;
            label += edge_names_[e] + ",";
        }
        return label + "}]";
    }

    // All realisations, visiting each through the callback; the callback
    // returns false to stop early.
    template <typename F>
    void for_each_realisation(F&& f) const {
        std::vector<int> chosen;
        std::vector<int> per_node(nodes_.size(), -1);
        auto rec = [&](auto&& self, std::size_t t) -> bool {
            if (t == nodes_.size()) {
                if (is_realisation_ids(chosen)) return f(chosen);
                return true;
            }
            if (!self(self, t + 1)) return false;
            for (int id : lattice_ids_[t]) {
                chosen.push_back(id);
                bool go = self(self, t + 1);
                chosen.pop_back();
                if (!go) return false;
            }
            return true;
        };
        rec(rec, 0);
    }

private:
    std::uint64_t mask_of(const VertexSet& s) const {
        std::uint64_t m = 0;
        for (const auto& v : s) m |= 1ull << vert_idx_.at(v);
        return m;
    }

    std::vector<NodeId> nodes_;
    std::map<NodeId, int> node_idx_;
    int root_ = 0;
    std::vector<std::vector<bool>> below_;
    std::vector<EdgeId> edge_names_;
    std::vector<VertexId> vert_names_;
    std::map<VertexId, int> vert_idx_;
    std::vector<std::vector<std::uint64_t>> rmask_;
    std::vector<int> sb_node_;
    std::vector<std::uint64_t> sb_mask_;
    std::vector<std::unordered_map<std::uint64_t, int>> id_at_;
    std::vector<std::vector<int>> lattice_ids_;
    std::vector<std::vector<bool>> arc_;
};

} // namespace

ValidationReport validate_pd(const Hypergraph& h, const PointDecomposition& pd,
                             ValidationMode mode, const Limits& limits, std::uint64_t seed) {
    ValidationReport report;
    try {
        pd.tree.validate();
    } catch (const InputError& ex) {
        report.violations.push_back(std::string("tree: ") + ex.what());
        return report;
    }
    PointSet all_points = h.points();
    for (const auto& t : pd.tree.nodes) {
        auto it = pd.bags.find(t);
        if (it == pd.bags.end()) {
            report.violations.push_back("node " + t + " has no bag");
            return report;
        }
        for (const auto& p : it->second) {
            if (!all_points.count(p))
                report.violations.push_back("bag of " + t + " holds point (" + p.vertex + "," +
                                            p.edge + ") outside P(H)");
        }
    }
    if (!report.ok()) return report;

    // T-structure: arcs from strict descendants, endpoints achievable.
    auto lattice = node_subbags(h, pd, limits);
    for (const auto& a : pd.arcs) {
        if (!pd.tree.has_node(a.first.first) || !pd.tree.has_node(a.second.first)) {
            report.violations.push_back("arc " + arc_str(a) + " references unknown node");
            continue;
        }
        if (!pd.tree.strictly_below(a.first.first, a.second.first))
            report.violations.push_back("arc " + arc_str(a) + " does not go to a strict ancestor");
        for (const SubBag& s : {a.first, a.second}) {
            const auto& ss = lattice.at(s.first);
            if (std::find(ss.begin(), ss.end(), s.second) == ss.end())
                report.violations.push_back("arc endpoint " + subbag_str(s) +
                                            " is not an achievable sub-bag");
        }
    }
    if (!report.ok()) return report;

    // Condition (i).
    for (const auto& [e, vs] : h.edges()) {
        bool found = false;
        for (const auto& t : pd.tree.nodes) {
            const PointSet& bag = pd.bag(t);
            bool all_in = std::all_of(vs.begin(), vs.end(), [&](const VertexId& v) {
                return bag.count(Point{v, e}) != 0;
            });
            if (all_in) {
                found = true;
                break;
            }
        }
        if (!found)
            report.violations.push_back("condition (i): no bag holds all points of edge " + e);
    }

    auto dec = check_decomposable(h, pd, limits);
    if (!dec.ok) {
        const auto& [s, s1, s2] = *dec.counterexample;
        report.violations.push_back("not decomposable at head " + subbag_str(s) + " with tails " +
                                    subbag_str(s1) + ", " + subbag_str(s2));
    }

    // Condition (ii): A[H']_∅ is a realisation for every subhypergraph; its
    // realisations also feed condition (iii). The bitmask engine covers the
    // common case; huge vertex sets fall back to the generic structures.
    std::optional<FastEngine> fast;
    if (h.vertices().size() <= 64 && h.edge_count() <= limits.cover_subset_edges)
        fast.emplace(h, pd, lattice);
    if (fast) {
        const std::uint64_t total = 1ull << h.edge_count();
        for (std::uint64_t sub = 0; sub < total && report.ok(); ++sub) {
            std::vector<int> ids = fast->restrict_ids(sub);
            if (!fast->is_realisation_ids(ids)) {
                report.violations.push_back("condition (ii): " + fast->subset_label(sub) +
                                            " is not a realisation");
                continue;
            }
            std::string err = fast->check_iii_ids(ids);
            if (!err.empty())
                report.violations.push_back(err + " in " + fast->subset_label(sub));
        }
    } else if (h.edge_count() <= limits.cover_subset_edges) {
        for (const auto& sub : all_subhypergraphs(h, limits)) {
            SubBagGraph r = restrict_tstructure(pd, h, sub);
            std::string label = "A[{";
            for (const auto& e : sub) label += e + ",";
            label += "}]";
            if (!is_realisation(pd, r.sub_bags)) {
                report.violations.push_back("condition (ii): " + label +
                                            " is not a realisation");
                continue;
            }
            check_connectivity_iii(pd, r.sub_bags, label, report);
        }
    } else {
        report.exhaustive = false;
    }

    // Condition (iii) over all realisations when enumerable, otherwise a
    // seeded sample on top of the A[H']_∅ family above.
    bool full = false;
    if (mode == ValidationMode::Exhaustive && report.ok()) {
        std::uint64_t product = 1;
        bool enumerable = true;
        for (const auto& [t, ss] : lattice) {
            if (product > limits.realisation_product / (ss.size() + 1)) {
                enumerable = false;
                break;
            }
            product *= ss.size() + 1;
        }
        if (enumerable && fast) {
            full = true;
            fast->for_each_realisation([&](const std::vector<int>& ids) {
                std::string err = fast->check_iii_ids(ids);
                if (!err.empty()) {
                    report.violations.push_back(err + " in an enumerated realisation");
                    return false;
                }
                return true;
            });
        } else if (enumerable) {
            auto reals = enumerate_realisations(h, pd, limits);
            if (reals) {
                full = true;
                std::size_t i = 0;
                for (const auto& real : *reals) {
                    check_connectivity_iii(pd, real, "#" + std::to_string(i++), report);
                    if (!report.ok()) break;
                }
            }
        }
    }
    if (!full) {
        report.exhaustive = false;
        std::mt19937_64 rng(seed);
        std::vector<NodeId> nodes(pd.tree.nodes.begin(), pd.tree.nodes.end());
        for (std::size_t trial = 0; trial < limits.sampled_realisations && report.ok();
             ++trial) {
            std::set<SubBag> cand;
            for (const auto& t : nodes) {
                const auto& ss = lattice.at(t);
                std::size_t pick = rng() % (ss.size() + 1);
                if (pick > 0) cand.insert({t, ss[pick - 1]});
            }
            if (is_realisation(pd, cand))
                check_connectivity_iii(pd, cand, "sampled #" + std::to_string(trial), report);
        }
    }
    return report;
}

ValidationReport validate_spd(const Hypergraph& h, const SimplifiedPointDecomposition& spd,
                              const Limits& limits) {
    ValidationReport report;
    try {
        spd.tree.validate();
    } catch (const InputError& ex) {
        report.violations.push_back(std::string("tree: ") + ex.what());
        return report;
    }
    PointSet all_points = h.points();
    for (const auto& t : spd.tree.nodes) {
        auto it = spd.bags.find(t);
        if (it == spd.bags.end()) {
            report.violations.push_back("node " + t + " has no bag");
            return report;
        }
        for (const auto& p : it->second) {
            if (!all_points.count(p))
                report.violations.push_back("bag of " + t + " holds point (" + p.vertex + "," +
                                            p.edge + ") outside P(H)");
        }
    }
    if (!report.ok()) return report;

    // Condition (1).
    for (const auto& [e, vs] : h.edges()) {
        bool found = false;
        for (const auto& t : spd.tree.nodes) {
            const PointSet& bag = spd.bag(t);
            bool all_in = std::all_of(vs.begin(), vs.end(), [&](const VertexId& v) {
                return bag.count(Point{v, e}) != 0;
            });
            if (all_in) {
                found = true;
                break;
            }
        }
        if (!found)
            report.violations.push_back("condition (1): no bag holds all points of edge " + e);
    }

    // Necessary per-point filter: {t: (v,e) ∈ B_t} must be connected
    // (condition (2) with H' = {e}), likewise pairwise unions.
    for (const auto& p : all_points) {
        std::set<NodeId> holding;
        for (const auto& t : spd.tree.nodes)
            if (spd.bag(t).count(p)) holding.insert(t);
        if (!connected_in_tree(spd.tree, holding)) {
            report.violations.push_back("condition (2): point (" + p.vertex + "," + p.edge +
                                        ") spans a disconnected node set");
        }
    }
    if (!report.ok()) return report;

    // Full condition (2) over all subhypergraphs.
    if (h.edge_count() > limits.cover_subset_edges) {
        report.exhaustive = false;
        return report;
    }
    for (const auto& sub : all_subhypergraphs(h, limits)) {
        VertexSet verts;
        for (const auto& e : sub) verts.insert(h.edge(e).begin(), h.edge(e).end());
        for (const auto& v : verts) {
            std::set<NodeId> holding;
            for (const auto& t : spd.tree.nodes) {
                if (restricted_vertices(h, sub, spd.bag(t)).count(v)) holding.insert(t);
            }
            if (!connected_in_tree(spd.tree, holding)) {
                std::string label;
                for (const auto& e : sub) label += e + ",";
                report.violations.push_back("condition (2): vertex " + v +
                                            " disconnected for subhypergraph {" + label + "}");
                return report;
            }
        }
    }
    return report;
}

namespace {

std::size_t width_of_bags(const Hypergraph& h, const std::map<NodeId, PointSet>& bags,
                          const Limits& limits) {
    std::size_t best = 0;
    for (const auto& [t, bag] : bags) {
        auto sets = collapse_sets(restrict_hypergraph(h, bag));
        best = std::max(best, beta_cover_number_sets(sets, BetaCnMode::ViaMim, limits));
    }
    return best;
}

} // namespace

std::size_t width_of_pd(const Hypergraph& h, const PointDecomposition& pd,
                        const Limits& limits) {
    return width_of_bags(h, pd.bags, limits);
}

std::size_t width_of_spd(const Hypergraph& h, const SimplifiedPointDecomposition& spd,
                         const Limits& limits) {
    return width_of_bags(h, spd.bags, limits);
}

bool is_flat(const PointDecomposition& pd) {
    return std::all_of(pd.arcs.begin(), pd.arcs.end(), [&](const Arc& a) {
        return pd.tree.adjacent(a.first.first, a.second.first);
    });
}

} // namespace pointdec
