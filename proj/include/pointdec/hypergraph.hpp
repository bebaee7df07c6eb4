#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pointdec/errors.hpp"
#include "pointdec/limits.hpp"

namespace pointdec {

using VertexId = std::string;
using EdgeId = std::string;
using VertexSet = std::set<VertexId>;

// A point (v,e): vertex v seen through edge e.
struct Point {
    VertexId vertex;
    EdgeId edge;

    auto operator<=>(const Point&) const = default;
};

using PointSet = std::set<Point>;

// Collapsed "set of sets" view, used by the cover-number computations.
using SetSystem = std::set<VertexSet>;

// A hypergraph with named edges. The names link constraints and points to
// edges; the underlying mathematical object is the set of vertex sets, so
// duplicate vertex sets under different names are rejected.
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(std::map<EdgeId, VertexSet> edges);

    const std::map<EdgeId, VertexSet>& edges() const { return edges_; }
    const VertexSet& vertices() const { return vertices_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    bool has_edge(const EdgeId& e) const { return edges_.count(e) != 0; }
    const VertexSet& edge(const EdgeId& e) const;

    // P(H): all points (v,e) with v in e.
    PointSet points() const;

    SetSystem as_sets() const;

    bool operator==(const Hypergraph&) const = default;

private:
    std::map<EdgeId, VertexSet> edges_;
    VertexSet vertices_;
};

// Synthesizes a hypergraph from a collapsed set view; edge ids are "s0",
// "s1", ... in lexicographic order of the sets.
Hypergraph hypergraph_from_sets(const SetSystem& sets);

// A subhypergraph is a subset of the edge ids.
using Subhypergraph = std::set<EdgeId>;

std::vector<Subhypergraph> all_subhypergraphs(const Hypergraph& h,
                                              const Limits& limits = default_limits());

// e|_P = {v in e : (v,e) in P}.
VertexSet restrict_edge(const Hypergraph& h, const EdgeId& e, const PointSet& points);

// H|_P as a named map; edges with empty restriction are dropped. Duplicate
// restricted sets are kept (collapse with collapse_sets when needed).
std::map<EdgeId, VertexSet> restrict_hypergraph(const Hypergraph& h, const PointSet& points);

// Restriction of a subhypergraph: only the named edges take part.
std::map<EdgeId, VertexSet> restrict_subhypergraph(const Hypergraph& h,
                                                   const Subhypergraph& sub,
                                                   const PointSet& points);

// V(H'|_P) for a subhypergraph H'.
VertexSet restricted_vertices(const Hypergraph& h, const Subhypergraph& sub,
                              const PointSet& points);

SetSystem collapse_sets(const std::map<EdgeId, VertexSet>& edges);

// H[X] = {e ∩ X : e ∈ H, e ∩ X ≠ ∅}, set-collapsed.
Hypergraph induced(const Hypergraph& h, const VertexSet& x);

// Minimum number of edges whose union covers all vertices; exhaustive over
// subsets in increasing size order. Empty system -> 0.
std::size_t cover_number(const SetSystem& sets, const Limits& limits = default_limits());

enum class BetaCnMode {
    ViaMim,      // mim(inc(H)), the default
    Exhaustive,  // max of cover_number over all subhypergraphs, for cross-checks
};

std::size_t beta_cover_number(const Hypergraph& h, BetaCnMode mode = BetaCnMode::ViaMim,
                              const Limits& limits = default_limits());
std::size_t beta_cover_number_sets(const SetSystem& sets,
                                   BetaCnMode mode = BetaCnMode::ViaMim,
                                   const Limits& limits = default_limits());

} // namespace pointdec
