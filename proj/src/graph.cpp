#include "pointdec/graph.hpp"

namespace pointdec {

void Graph::add_edge(const GraphVertexId& a, const GraphVertexId& b) {
    GraphEdge e = make_graph_edge(a, b);
    vertices_.insert(e.first);
    vertices_.insert(e.second);
    edges_.insert(e);
}

std::set<GraphVertexId> Graph::neighbors(const GraphVertexId& v) const {
    std::set<GraphVertexId> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.insert(b);
        else if (b == v) out.insert(a);
    }
    return out;
}

Graph Graph::induced(const std::set<GraphVertexId>& x) const {
    Graph g;
    for (const auto& v : x)
        if (vertices_.count(v)) g.add_vertex(v);
    for (const auto& [a, b] : edges_)
        if (x.count(a) && x.count(b)) g.add_edge(a, b);
    return g;
}

Graph incidence_graph(const Hypergraph& h) {
    Graph g;
    for (const auto& v : h.vertices()) g.add_vertex(inc_vertex_id(v));
    for (const auto& [e, vs] : h.edges()) {
        g.add_vertex(inc_edge_id(e));
        for (const auto& v : vs) g.add_edge(inc_vertex_id(v), inc_edge_id(e));
    }
    return g;
}

Graph point_graph(const Hypergraph& h) {
    Graph g;
    PointSet ps = h.points();
    for (const auto& p : ps) g.add_vertex(point_vertex_id(p));
    for (auto it = ps.begin(); it != ps.end(); ++it) {
        auto jt = it;
        for (++jt; jt != ps.end(); ++jt) {
            if (it->vertex == jt->vertex || it->edge == jt->edge)
                g.add_edge(point_vertex_id(*it), point_vertex_id(*jt));
        }
    }
    return g;
}

Graph line_graph(const Graph& g) {
    Graph out;
    for (const auto& e : g.edges()) out.add_vertex(line_vertex_id(e));
    for (auto it = g.edges().begin(); it != g.edges().end(); ++it) {
        auto jt = it;
        for (++jt; jt != g.edges().end(); ++jt) {
            if (it->first == jt->first || it->first == jt->second ||
                it->second == jt->first || it->second == jt->second)
                out.add_edge(line_vertex_id(*it), line_vertex_id(*jt));
        }
    }
    return out;
}

} // namespace pointdec
