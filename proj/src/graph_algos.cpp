#include "pointdec/graph_algos.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

namespace pointdec {

namespace {

// Branch-and-bound maximum independent set over adjacency bitmasks.
std::size_t mis_masks(const std::vector<std::uint64_t>& adj, std::uint64_t alive,
                      std::size_t chosen, std::size_t& best) {
    if (alive == 0) {
        best = std::max(best, chosen);
        return best;
    }
    std::size_t alive_count = static_cast<std::size_t>(__builtin_popcountll(alive));
    if (chosen + alive_count <= best) return best;
    // Branch on the alive vertex with the most alive neighbors.
    std::size_t pivot = 0, pivot_deg = 0;
    bool found = false;
    for (std::size_t i = 0; i < adj.size(); ++i) {
        if (!(alive & (std::uint64_t{1} << i))) continue;
        std::size_t deg = static_cast<std::size_t>(__builtin_popcountll(adj[i] & alive));
        if (!found || deg > pivot_deg) {
            pivot = i;
            pivot_deg = deg;
            found = true;
        }
    }
    if (pivot_deg == 0) {
        best = std::max(best, chosen + alive_count);
        return best;
    }
    std::uint64_t bit = std::uint64_t{1} << pivot;
    mis_masks(adj, alive & ~(adj[pivot] | bit), chosen + 1, best);
    mis_masks(adj, alive & ~bit, chosen, best);
    return best;
}

std::size_t max_independent_set(const std::vector<std::uint64_t>& adj) {
    std::size_t best = 0;
    std::uint64_t alive = adj.size() == 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << adj.size()) - 1;
    return mis_masks(adj, alive, 0, best);
}

} // namespace

std::size_t max_induced_matching(const Graph& g, const Limits& limits) {
    std::vector<GraphEdge> es(g.edges().begin(), g.edges().end());
    if (es.size() > limits.mim_edges)
        throw SizeLimitError("induced matching over " + std::to_string(es.size()) +
                             " edges exceeds cap");
    // Conflict masks: two edges conflict when they share an endpoint or an
    // edge of G joins their endpoints.
    std::vector<std::uint64_t> adj(es.size(), 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto& [a, b] = es[i];
            const auto& [c, d] = es[j];
            bool conflict = a == c || a == d || b == c || b == d ||
                            g.has_edge(a, c) || g.has_edge(a, d) ||
                            g.has_edge(b, c) || g.has_edge(b, d);
            if (conflict) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
        }
    }
    return max_independent_set(adj);
}

std::size_t mim_cut(const Graph& g, const std::set<GraphVertexId>& v1,
                    const std::set<GraphVertexId>& v2, const Limits& limits) {
    for (const auto& v : v1)
        if (v2.count(v)) throw InputError("cut sides overlap at " + v);
    Graph cut;
    for (const auto& v : v1) cut.add_vertex(v);
    for (const auto& v : v2) cut.add_vertex(v);
    for (const auto& [a, b] : g.edges()) {
        if ((v1.count(a) && v2.count(b)) || (v2.count(a) && v1.count(b)))
            cut.add_edge(a, b);
    }
    return max_induced_matching(cut, limits);
}

std::size_t distance2_independent_max(const Graph& g, const Limits& limits) {
    std::vector<GraphVertexId> vs(g.vertices().begin(), g.vertices().end());
    if (vs.size() > limits.d2_vertices)
        throw SizeLimitError("distance-2 independent set over " + std::to_string(vs.size()) +
                             " vertices exceeds cap");
    std::map<GraphVertexId, std::size_t> index;
    for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = i;
    std::vector<std::uint64_t> adj(vs.size(), 0);
    auto link = [&](std::size_t i, std::size_t j) {
        adj[i] |= std::uint64_t{1} << j;
        adj[j] |= std::uint64_t{1} << i;
    };
    for (const auto& [a, b] : g.edges()) link(index[a], index[b]);
    for (const auto& v : vs) {
        auto nb = g.neighbors(v);
        for (auto it = nb.begin(); it != nb.end(); ++it) {
            auto jt = it;
            for (++jt; jt != nb.end(); ++jt) link(index[*it], index[*jt]);
        }
    }
    return max_independent_set(adj);
}

namespace {

// Shortest path from x to y in G avoiding `blocked`; empty when none.
std::vector<GraphVertexId> shortest_avoiding(const Graph& g, const GraphVertexId& x,
                                             const GraphVertexId& y,
                                             const std::set<GraphVertexId>& blocked) {
    std::map<GraphVertexId, GraphVertexId> pred;
    std::deque<GraphVertexId> queue{x};
    std::set<GraphVertexId> seen{x};
    while (!queue.empty()) {
        GraphVertexId cur = queue.front();
        queue.pop_front();
        if (cur == y) {
            std::vector<GraphVertexId> path{y};
            while (path.back() != x) path.push_back(pred.at(path.back()));
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (const auto& nb : g.neighbors(cur)) {
            if (blocked.count(nb) || seen.count(nb)) continue;
            seen.insert(nb);
            pred[nb] = cur;
            queue.push_back(nb);
        }
    }
    return {};
}

// Chordless cycle of length >= 4 in a non-chordal graph. For a hole
// v1 v2 ... vk, taking v = v1, x = v2, y = vk yields a shortest (hence
// induced) x-y path avoiding N[v] \ {x,y}, and v + path is chordless.
std::vector<GraphVertexId> find_hole(const Graph& g) {
    for (const auto& v : g.vertices()) {
        auto nb = g.neighbors(v);
        for (auto it = nb.begin(); it != nb.end(); ++it) {
            auto jt = it;
            for (++jt; jt != nb.end(); ++jt) {
                if (g.has_edge(*it, *jt)) continue;
                std::set<GraphVertexId> blocked = nb;
                blocked.erase(*it);
                blocked.erase(*jt);
                blocked.insert(v);
                blocked.erase(*it); // x is the BFS start, never blocked
                auto path = shortest_avoiding(g, *it, *jt, blocked);
                if (path.size() >= 3) {
                    std::vector<GraphVertexId> hole{v};
                    hole.insert(hole.end(), path.begin(), path.end());
                    return hole;
                }
            }
        }
    }
    return {};
}

} // namespace

bool is_valid_peo(const Graph& g, const std::vector<GraphVertexId>& order) {
    if (order.size() != g.vertices().size()) return false;
    std::set<GraphVertexId> seen(order.begin(), order.end());
    if (seen != g.vertices()) return false;
    std::map<GraphVertexId, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::vector<GraphVertexId> later;
        for (const auto& nb : g.neighbors(order[i]))
            if (pos[nb] > i) later.push_back(nb);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

PeoResult peo(const Graph& g) {
    // Maximum cardinality search; the reverse of the visit order is a PEO
    // iff the graph is chordal.
    std::vector<GraphVertexId> visit;
    std::map<GraphVertexId, std::size_t> weight;
    std::set<GraphVertexId> remaining = g.vertices();
    for (const auto& v : remaining) weight[v] = 0;
    while (!remaining.empty()) {
        GraphVertexId pick = *remaining.begin();
        for (const auto& v : remaining)
            if (weight[v] > weight[pick]) pick = v;
        visit.push_back(pick);
        remaining.erase(pick);
        for (const auto& nb : g.neighbors(pick))
            if (remaining.count(nb)) ++weight[nb];
    }
    PeoResult res;
    res.order.assign(visit.rbegin(), visit.rend());
    if (is_valid_peo(g, res.order)) {
        res.chordal = true;
        return res;
    }
    res.chordal = false;
    res.order.clear();
    res.hole = find_hole(g);
    return res;
}

MwisResult chordal_mwis(const WeightedGraph& g, const std::vector<GraphVertexId>& order) {
    if (!is_valid_peo(g.graph, order)) throw InputError("order is not a PEO");
    std::map<GraphVertexId, Rational> residual;
    for (const auto& v : g.graph.vertices()) {
        Rational w = g.weight.at(v);
        if (w < 0) throw InputError("negative weight on " + v);
        residual[v] = w;
    }
    std::map<GraphVertexId, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    // Forward pass: saturate residuals along the elimination order.
    std::vector<GraphVertexId> marked;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& v = order[i];
        if (residual[v] <= 0) continue;
        marked.push_back(v);
        Rational delta = residual[v];
        for (const auto& nb : g.graph.neighbors(v)) {
            if (pos[nb] <= i) continue;
            residual[nb] = residual[nb] > delta ? residual[nb] - delta : Rational(0);
        }
    }
    // Backward pass: greedy selection among marked vertices.
    MwisResult res;
    for (auto it = marked.rbegin(); it != marked.rend(); ++it) {
        bool blocked = false;
        for (const auto& nb : g.graph.neighbors(*it)) {
            if (res.chosen.count(nb)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            res.chosen.insert(*it);
            res.weight += g.weight.at(*it);
        }
    }
    return res;
}

MwisResult brute_mwis(const WeightedGraph& g, const Limits& limits) {
    std::vector<GraphVertexId> vs(g.graph.vertices().begin(), g.graph.vertices().end());
    if (vs.size() > limits.brute_mwis_vertices)
        throw SizeLimitError("brute MWIS over " + std::to_string(vs.size()) +
                             " vertices exceeds cap");
    MwisResult best;
    bool have = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
        std::set<GraphVertexId> chosen;
        for (std::size_t i = 0; i < vs.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) chosen.insert(vs[i]);
        bool indep = true;
        for (auto it = chosen.begin(); it != chosen.end() && indep; ++it) {
            auto jt = it;
            for (++jt; jt != chosen.end(); ++jt) {
                if (g.graph.has_edge(*it, *jt)) {
                    indep = false;
                    break;
                }
            }
        }
        if (!indep) continue;
        Rational w = 0;
        for (const auto& v : chosen) w += g.weight.at(v);
        if (!have || w > best.weight || (w == best.weight && chosen < best.chosen)) {
            best.weight = w;
            best.chosen = chosen;
            have = true;
        }
    }
    return best;
}

} // namespace pointdec
