#include "pointdec/beta.hpp"

#include <algorithm>
#include <map>

namespace pointdec {

bool is_beta_elimination_order(const Hypergraph& h, const BetaOrder& order) {
    VertexSet seen(order.begin(), order.end());
    if (seen != h.vertices() || seen.size() != order.size()) return false;
    std::vector<EdgeId> ids;
    for (const auto& [e, vs] : h.edges()) ids.push_back(e);
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexSet suffix(order.begin() + static_cast<long>(i), order.end());
        const VertexId& x = order[i];
        for (std::size_t a = 0; a < ids.size(); ++a) {
            const VertexSet& e1 = h.edge(ids[a]);
            if (!e1.count(x)) continue;
            for (std::size_t b = a + 1; b < ids.size(); ++b) {
                const VertexSet& e2 = h.edge(ids[b]);
                if (!e2.count(x)) continue;
                auto suffix_subset = [&](const VertexSet& from, const VertexSet& into) {
                    return std::all_of(from.begin(), from.end(), [&](const VertexId& v) {
                        return !suffix.count(v) || into.count(v);
                    });
                };
                if (!suffix_subset(e1, e2) && !suffix_subset(e2, e1)) return false;
            }
        }
    }
    return true;
}

std::optional<BetaOrder> beta_elimination_order(const Hypergraph& h) {
    VertexSet remaining = h.vertices();
    BetaOrder order;
    while (!remaining.empty()) {
        std::optional<VertexId> nest;
        for (const auto& x : remaining) {
            // x is a nest point when its incident edges, restricted to the
            // remaining vertices, form an inclusion chain.
            std::vector<VertexSet> incident;
            for (const auto& [e, vs] : h.edges()) {
                if (!vs.count(x)) continue;
                VertexSet r;
                std::set_intersection(vs.begin(), vs.end(), remaining.begin(),
                                      remaining.end(), std::inserter(r, r.end()));
                incident.push_back(std::move(r));
            }
            std::sort(incident.begin(), incident.end(),
                      [](const VertexSet& a, const VertexSet& b) {
                          return a.size() < b.size();
                      });
            bool chain = true;
            for (std::size_t i = 0; i + 1 < incident.size() && chain; ++i) {
                chain = std::includes(incident[i + 1].begin(), incident[i + 1].end(),
                                      incident[i].begin(), incident[i].end());
            }
            if (chain) {
                nest = x;
                break;
            }
        }
        if (!nest) return std::nullopt;
        order.push_back(*nest);
        remaining.erase(*nest);
    }
    if (!is_beta_elimination_order(h, order)) return std::nullopt;
    return order;
}

namespace {

std::map<VertexId, std::size_t> positions(const BetaOrder& beta) {
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < beta.size(); ++i) pos[beta[i]] = i;
    return pos;
}

} // namespace

EdgeOrder edge_order(const Hypergraph& h, const BetaOrder& beta) {
    auto pos = positions(beta);
    EdgeOrder order;
    for (const auto& [e, vs] : h.edges()) order.push_back(e);
    auto less = [&](const EdgeId& a, const EdgeId& b) {
        const VertexSet& e1 = h.edge(a);
        const VertexSet& e2 = h.edge(b);
        VertexSet sym;
        std::set_symmetric_difference(e1.begin(), e1.end(), e2.begin(), e2.end(),
                                      std::inserter(sym, sym.end()));
        if (sym.empty()) throw InputError("equal edge sets in edge order");
        VertexId best = *sym.begin();
        for (const auto& v : sym)
            if (pos.at(v) > pos.at(best)) best = v;
        return e2.count(best) != 0;
    };
    std::sort(order.begin(), order.end(), less);
    return order;
}

std::set<EdgeId> reachable_edges(const Hypergraph& h, const BetaOrder& beta,
                                 const VertexId& x, const EdgeId& e) {
    auto pos = positions(beta);
    EdgeOrder eo = edge_order(h, beta);
    std::map<EdgeId, std::size_t> epos;
    for (std::size_t i = 0; i < eo.size(); ++i) epos[eo[i]] = i;
    std::set<EdgeId> allowed;
    for (const auto& [id, vs] : h.edges())
        if (epos[id] <= epos[e]) allowed.insert(id);
    std::set<EdgeId> reached{e};
    std::vector<EdgeId> frontier{e};
    while (!frontier.empty()) {
        EdgeId cur = frontier.back();
        frontier.pop_back();
        for (const auto& next : allowed) {
            if (reached.count(next)) continue;
            bool linked = false;
            for (const auto& v : h.edge(cur)) {
                if (pos.at(v) <= pos.at(x) && h.edge(next).count(v)) {
                    linked = true;
                    break;
                }
            }
            if (linked) {
                reached.insert(next);
                frontier.push_back(next);
            }
        }
    }
    return reached;
}

PointDecomposition build_beta_pd(const Hypergraph& h, const BetaOrder& beta) {
    if (!is_beta_elimination_order(h, beta)) throw InputError("not a beta elimination order");
    auto pos = positions(beta);
    PointDecomposition pd;
    pd.tree.root = beta_root_node();
    pd.tree.nodes.insert(pd.tree.root);
    pd.bags[pd.tree.root] = {};
    for (std::size_t i = 0; i < beta.size(); ++i) {
        NodeId t = beta_node(beta[i]);
        pd.tree.nodes.insert(t);
        pd.tree.parent[t] = i + 1 < beta.size() ? beta_node(beta[i + 1]) : pd.tree.root;
    }
    // B_{t_x}: all points (y,e) with x in e and x <=_beta y.
    for (const auto& x : beta) {
        PointSet bag;
        for (const auto& [e, vs] : h.edges()) {
            if (!vs.count(x)) continue;
            for (const auto& y : vs)
                if (pos.at(y) >= pos.at(x)) bag.insert(Point{y, e});
        }
        pd.bags[beta_node(x)] = std::move(bag);
    }
    // Nonempty sub-bags of t_x are the sets e ∩ V(H)_{>=x} for x in e;
    // remember one witness edge list per (x, S).
    auto suffix_part = [&](const VertexSet& vs, const VertexId& x) {
        VertexSet out;
        for (const auto& y : vs)
            if (pos.at(y) >= pos.at(x)) out.insert(y);
        return out;
    };
    std::map<VertexId, std::map<VertexSet, std::vector<EdgeId>>> forms;
    for (const auto& x : beta) {
        for (const auto& [e, vs] : h.edges())
            if (vs.count(x)) forms[x][suffix_part(vs, x)].push_back(e);
    }
    for (const auto& x : beta) {
        for (const auto& [sx, ex_list] : forms[x]) {
            if (sx.size() == 1)
                pd.arcs.insert({{beta_node(x), sx}, {pd.tree.root, VertexSet{}}});
            for (const auto& y : beta) {
                if (pos.at(y) <= pos.at(x)) continue;
                // Rule (††) demands y <=_beta min(S_x \ {x}).
                if (sx.size() > 1) {
                    VertexId z = *std::min_element(
                        sx.begin(), sx.end(), [&](const VertexId& a, const VertexId& b) {
                            return pos.at(a) < pos.at(b);
                        });
                    if (z == x) {
                        VertexSet rest = sx;
                        rest.erase(x);
                        z = *std::min_element(rest.begin(), rest.end(),
                                              [&](const VertexId& a, const VertexId& b) {
                                                  return pos.at(a) < pos.at(b);
                                              });
                    }
                    if (pos.at(y) > pos.at(z)) continue;
                }
                for (const auto& [sy, f_list] : forms[y]) {
                    bool arc = false;
                    for (const auto& f : f_list) {
                        std::set<EdgeId> reach = reachable_edges(h, beta, y, f);
                        for (const auto& e : ex_list) {
                            if (reach.count(e)) {
                                arc = true;
                                break;
                            }
                        }
                        if (arc) break;
                    }
                    if (arc) pd.arcs.insert({{beta_node(x), sx}, {beta_node(y), sy}});
                }
            }
        }
    }
    return pd;
}

} // namespace pointdec
