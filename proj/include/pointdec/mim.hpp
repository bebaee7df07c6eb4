#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "pointdec/decomposition.hpp"
#include "pointdec/graph.hpp"
#include "pointdec/hypergraph.hpp"

namespace pointdec {

enum class LeafKind { Vertex, Edge };

struct LeafLabel {
    LeafKind kind;
    std::string id; // vertex or edge id of H

    auto operator<=>(const LeafLabel&) const = default;
};

// Binary rooted tree whose leaves are in bijection with V(inc(H)).
struct BranchDecomposition {
    RootedTree tree;
    std::map<NodeId, LeafLabel> leaves;

    // Structural and bijection checks against a hypergraph.
    void validate(const Hypergraph& h) const;

    bool operator==(const BranchDecomposition&) const = default;
};

// Incidence-graph vertices mapped to leaves of the subtree rooted at t.
std::set<GraphVertexId> branch_side(const BranchDecomposition& bd, const NodeId& t);

std::size_t mim_width_of_branch(const Hypergraph& h, const BranchDecomposition& bd,
                                const Limits& limits = default_limits());

// Points whose vertex leaf and edge leaf fall on opposite sides of the cut
// at t (the incidence edges of the cut graph).
PointSet cut_points(const Hypergraph& h, const BranchDecomposition& bd, const NodeId& t);

// The bag construction B_t = C_t (leaf) / C_t ∪ (C_{t1} ∩ C_{t2}) on the
// branch tree; width <= 2 * mim-width of bd.
SimplifiedPointDecomposition build_simplified_from_branch(const Hypergraph& h,
                                                          const BranchDecomposition& bd);

enum class ConsistencyMode {
    Fast,   // two-witness check over <= 2k-edge subhypergraphs
    Oracle, // exhaustive over all subhypergraphs
};

// Whether S1 at t and S2 at the parent t' arise from a common subhypergraph.
bool consistent_subbags(const SimplifiedPointDecomposition& spd, const Hypergraph& h,
                        const SubBag& child, const SubBag& parent, std::size_t k,
                        ConsistencyMode mode = ConsistencyMode::Fast,
                        const Limits& limits = default_limits());

// Flat point decomposition on the same tree and bags; arcs between
// consistent parent-child sub-bag pairs.
PointDecomposition flatten(const SimplifiedPointDecomposition& spd, const Hypergraph& h,
                           std::size_t k, const Limits& limits = default_limits());

using CoverOrder = std::vector<VertexId>;

// H^x: edges reachable from x through walks using only vertices <= x.
std::set<EdgeId> reachable_edges_cover(const Hypergraph& h, const CoverOrder& order,
                                       const VertexId& x);

// H^x[>= x] as a collapsed hypergraph.
Hypergraph cover_slice(const Hypergraph& h, const CoverOrder& order, const VertexId& x);

std::size_t coverwidth_of_order(const Hypergraph& h, const CoverOrder& order,
                                const Limits& limits = default_limits());

// Minimum coverwidth over all |V|! orderings; capped by limits.
std::size_t min_coverwidth_exhaustive(const Hypergraph& h,
                                      const Limits& limits = default_limits());

// The per-vertex-node construction from an ordering; width <= coverwidth.
SimplifiedPointDecomposition build_spd_from_order(const Hypergraph& h, const CoverOrder& order);

struct HnFamily {
    Hypergraph hypergraph;
    BranchDecomposition branch;
    bool collapsed = false; // n = 1 merges the two duplicate edge sets
};

// The separating family: 2n vertices, edges X ∪ {y} and Y ∪ {x}, with the
// path-shaped branch decomposition of MIM-width <= 2.
HnFamily gen_hn(unsigned n);

} // namespace pointdec
