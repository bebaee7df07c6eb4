#include "pointdec/hypergraph.hpp"

#include <algorithm>

#include "pointdec/graph.hpp"
#include "pointdec/graph_algos.hpp"

namespace pointdec {

Hypergraph::Hypergraph(std::map<EdgeId, VertexSet> edges) : edges_(std::move(edges)) {
    std::set<VertexSet> seen;
    for (const auto& [id, vs] : edges_) {
        if (vs.empty()) throw InputError("edge '" + id + "' is empty");
        if (!seen.insert(vs).second)
            throw InputError("duplicate vertex set for edge '" + id + "'");
        vertices_.insert(vs.begin(), vs.end());
    }
}

const VertexSet& Hypergraph::edge(const EdgeId& e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw InputError("unknown edge '" + e + "'");
    return it->second;
}

PointSet Hypergraph::points() const {
    PointSet out;
    for (const auto& [id, vs] : edges_)
        for (const auto& v : vs) out.insert(Point{v, id});
    return out;
}

SetSystem Hypergraph::as_sets() const {
    SetSystem out;
    for (const auto& [id, vs] : edges_) out.insert(vs);
    return out;
}

Hypergraph hypergraph_from_sets(const SetSystem& sets) {
    std::map<EdgeId, VertexSet> edges;
    std::size_t i = 0;
    for (const auto& s : sets) edges.emplace("s" + std::to_string(i++), s);
    return Hypergraph(std::move(edges));
}

std::vector<Subhypergraph> all_subhypergraphs(const Hypergraph& h, const Limits& limits) {
    if (h.edge_count() > limits.cover_subset_edges)
        throw SizeLimitError("subhypergraph enumeration over " +
                             std::to_string(h.edge_count()) + " edges exceeds cap");
    std::vector<EdgeId> ids;
    for (const auto& [id, vs] : h.edges()) ids.push_back(id);
    std::vector<Subhypergraph> out;
    const std::size_t n = ids.size();
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Subhypergraph sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) sub.insert(ids[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

VertexSet restrict_edge(const Hypergraph& h, const EdgeId& e, const PointSet& points) {
    const VertexSet& vs = h.edge(e);
    VertexSet out;
    for (const auto& v : vs)
        if (points.count(Point{v, e})) out.insert(v);
    return out;
}

std::map<EdgeId, VertexSet> restrict_hypergraph(const Hypergraph& h, const PointSet& points) {
    for (const auto& p : points) {
        if (!h.has_edge(p.edge) || !h.edge(p.edge).count(p.vertex))
            throw InputError("point (" + p.vertex + "," + p.edge + ") not in P(H)");
    }
    std::map<EdgeId, VertexSet> out;
    for (const auto& [id, vs] : h.edges()) {
        VertexSet r = restrict_edge(h, id, points);
        if (!r.empty()) out.emplace(id, std::move(r));
    }
    return out;
}

std::map<EdgeId, VertexSet> restrict_subhypergraph(const Hypergraph& h,
                                                   const Subhypergraph& sub,
                                                   const PointSet& points) {
    std::map<EdgeId, VertexSet> out;
    for (const auto& id : sub) {
        VertexSet r = restrict_edge(h, id, points);
        if (!r.empty()) out.emplace(id, std::move(r));
    }
    return out;
}

VertexSet restricted_vertices(const Hypergraph& h, const Subhypergraph& sub,
                              const PointSet& points) {
    VertexSet out;
    for (const auto& id : sub) {
        VertexSet r = restrict_edge(h, id, points);
        out.insert(r.begin(), r.end());
    }
    return out;
}

SetSystem collapse_sets(const std::map<EdgeId, VertexSet>& edges) {
    SetSystem out;
    for (const auto& [id, vs] : edges) out.insert(vs);
    return out;
}

Hypergraph induced(const Hypergraph& h, const VertexSet& x) {
    SetSystem sets;
    for (const auto& [id, vs] : h.edges()) {
        VertexSet inter;
        std::set_intersection(vs.begin(), vs.end(), x.begin(), x.end(),
                              std::inserter(inter, inter.end()));
        if (!inter.empty()) sets.insert(std::move(inter));
    }
    return hypergraph_from_sets(sets);
}

std::size_t cover_number(const SetSystem& sets, const Limits& limits) {
    if (sets.empty()) return 0;
    if (sets.size() > limits.cover_subset_edges)
        throw SizeLimitError("cover_number over " + std::to_string(sets.size()) +
                             " edges exceeds cap");
    std::vector<const VertexSet*> edges;
    VertexSet all;
    for (const auto& s : sets) {
        edges.push_back(&s);
        all.insert(s.begin(), s.end());
    }
    const std::size_t n = edges.size();
    // Subsets in increasing size order; first hit is the minimum.
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
        // Enumerate k-subsets via prev_permutation on the indicator vector.
        do {
            VertexSet covered;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i]) covered.insert(edges[i]->begin(), edges[i]->end());
            if (covered == all) return k;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return n; // unreachable: all edges always cover
}

std::size_t beta_cover_number_sets(const SetSystem& sets, BetaCnMode mode,
                                   const Limits& limits) {
    if (sets.empty()) return 0;
    Hypergraph h = hypergraph_from_sets(sets);
    if (mode == BetaCnMode::ViaMim) {
        return max_induced_matching(incidence_graph(h), limits);
    }
    std::size_t best = 0;
    for (const auto& sub : all_subhypergraphs(h, limits)) {
        SetSystem subsets;
        for (const auto& id : sub) subsets.insert(h.edge(id));
        best = std::max(best, cover_number(subsets, limits));
    }
    return best;
}

std::size_t beta_cover_number(const Hypergraph& h, BetaCnMode mode, const Limits& limits) {
    return beta_cover_number_sets(h.as_sets(), mode, limits);
}

} // namespace pointdec
