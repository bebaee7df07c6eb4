#pragma once

#include <optional>
#include <set>
#include <vector>

#include "pointdec/decomposition.hpp"
#include "pointdec/hypergraph.hpp"

namespace pointdec {

// Vertex order, first eliminated first.
using BetaOrder = std::vector<VertexId>;
// Total order on edge ids, least first.
using EdgeOrder = std::vector<EdgeId>;

// Quantifier-explicit check of the defining property: for every vertex and
// every two incident edges, the suffix restrictions are inclusion-comparable.
bool is_beta_elimination_order(const Hypergraph& h, const BetaOrder& order);

// Greedy nest-point elimination with lexicographic tie-breaking; the result
// is re-verified against the definition before being returned. nullopt iff
// H is not β-acyclic.
std::optional<BetaOrder> beta_elimination_order(const Hypergraph& h);

// e1 < e2 iff the <_β-maximum of the symmetric difference lies in e2.
EdgeOrder edge_order(const Hypergraph& h, const BetaOrder& beta);

// H^x_e: edges reachable from e through walks using only vertices <=_β x
// and edges <=_H e.
std::set<EdgeId> reachable_edges(const Hypergraph& h, const BetaOrder& beta,
                                 const VertexId& x, const EdgeId& e);

// Tree node ids used by the construction.
inline NodeId beta_node(const VertexId& x) { return "t:" + x; }
inline NodeId beta_root_node() { return "root"; }

// The width-1 point decomposition for a β-acyclic hypergraph: a path of
// per-vertex nodes below a root with empty bag, arcs from the two
// reachability rules.
PointDecomposition build_beta_pd(const Hypergraph& h, const BetaOrder& beta);

} // namespace pointdec
