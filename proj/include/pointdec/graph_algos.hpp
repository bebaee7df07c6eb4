#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pointdec/graph.hpp"
#include "pointdec/limits.hpp"
#include "pointdec/rational.hpp"

namespace pointdec {

// Exact maximum induced matching via branch and bound over the edge list.
std::size_t max_induced_matching(const Graph& g, const Limits& limits = default_limits());

// mim of the bipartite cut graph G[V1,V2]; V1, V2 must be disjoint.
std::size_t mim_cut(const Graph& g, const std::set<GraphVertexId>& v1,
                    const std::set<GraphVertexId>& v2,
                    const Limits& limits = default_limits());

// α²(G): largest set of vertices pairwise at distance > 2.
std::size_t distance2_independent_max(const Graph& g, const Limits& limits = default_limits());

// Outcome of the chordality test. On success `order` is a perfect
// elimination ordering (first vertex eliminated first); on failure `hole`
// is a chordless cycle of length >= 4 in cyclic order.
struct PeoResult {
    bool chordal = false;
    std::vector<GraphVertexId> order;
    std::vector<GraphVertexId> hole;
};

// Maximum cardinality search with lexicographic tie-breaking, then the
// standard elimination check.
PeoResult peo(const Graph& g);

bool is_valid_peo(const Graph& g, const std::vector<GraphVertexId>& order);

struct WeightedGraph {
    Graph graph;
    std::map<GraphVertexId, Rational> weight; // one entry per vertex, all >= 0
};

struct MwisResult {
    Rational weight;
    std::set<GraphVertexId> chosen;
};

// Frank's two-phase greedy over a perfect elimination ordering: forward
// residual saturation, backward selection. Exact on chordal graphs.
MwisResult chordal_mwis(const WeightedGraph& g, const std::vector<GraphVertexId>& order);

// Enumeration oracle; ties broken toward the lexicographically least set.
MwisResult brute_mwis(const WeightedGraph& g, const Limits& limits = default_limits());

} // namespace pointdec
