#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pointdec/errors.hpp"
#include "pointdec/hypergraph.hpp"

namespace pointdec {

using GraphVertexId = std::string;
using GraphEdge = std::pair<GraphVertexId, GraphVertexId>; // normalized: first < second

inline GraphEdge make_graph_edge(const GraphVertexId& a, const GraphVertexId& b) {
    if (a == b) throw InputError("self-loop on graph vertex " + a);
    return a < b ? GraphEdge{a, b} : GraphEdge{b, a};
}

// Simple undirected graph over string ids; deterministic iteration order.
class Graph {
public:
    void add_vertex(const GraphVertexId& v) { vertices_.insert(v); }
    void add_edge(const GraphVertexId& a, const GraphVertexId& b);

    const std::set<GraphVertexId>& vertices() const { return vertices_; }
    const std::set<GraphEdge>& edges() const { return edges_; }

    bool has_vertex(const GraphVertexId& v) const { return vertices_.count(v) != 0; }
    bool has_edge(const GraphVertexId& a, const GraphVertexId& b) const {
        return edges_.count(make_graph_edge(a, b)) != 0;
    }

    std::set<GraphVertexId> neighbors(const GraphVertexId& v) const;

    Graph induced(const std::set<GraphVertexId>& x) const;

    bool operator==(const Graph&) const = default;

private:
    std::set<GraphVertexId> vertices_;
    std::set<GraphEdge> edges_;
};

// Tagged ids for the incidence graph of a hypergraph.
inline GraphVertexId inc_vertex_id(const VertexId& v) { return "v:" + v; }
inline GraphVertexId inc_edge_id(const EdgeId& e) { return "e:" + e; }

// Id of the point (v,e) as a point-graph vertex.
inline GraphVertexId point_vertex_id(const Point& p) { return p.vertex + "|" + p.edge; }

// inc(H): bipartite graph on V(H) ∪ H with {v,e} iff v ∈ e.
Graph incidence_graph(const Hypergraph& h);

// pointgraph(H): vertex set P(H); (v,e) ~ (v',e') iff v=v' or e=e'.
Graph point_graph(const Hypergraph& h);

// L(G): vertices are edges of G, adjacent iff they share an endpoint.
// Vertex ids are "a+b" with the endpoint ids joined by '+', a < b.
Graph line_graph(const Graph& g);
inline GraphVertexId line_vertex_id(const GraphEdge& e) { return e.first + "+" + e.second; }

} // namespace pointdec
