#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pointdec/hypergraph.hpp"
#include "pointdec/limits.hpp"
#include "pointdec/tree.hpp"

namespace pointdec {

// Sub-bag (t,S): a tree node together with a vertex set realizable as
// V(H'|_{B_t}) for some subhypergraph H'.
using SubBag = std::pair<NodeId, VertexSet>;
using Arc = std::pair<SubBag, SubBag>;

struct PointDecomposition {
    RootedTree tree;
    std::map<NodeId, PointSet> bags; // one entry per node (may be empty)
    std::set<Arc> arcs;

    const PointSet& bag(const NodeId& t) const { return bags.at(t); }

    bool operator==(const PointDecomposition&) const = default;
};

struct SimplifiedPointDecomposition {
    RootedTree tree;
    std::map<NodeId, PointSet> bags;

    const PointSet& bag(const NodeId& t) const { return bags.at(t); }

    bool operator==(const SimplifiedPointDecomposition&) const = default;
};

// A set of sub-bags together with the arcs of A they induce.
struct SubBagGraph {
    std::set<SubBag> sub_bags;
    std::set<Arc> arcs;

    bool operator==(const SubBagGraph&) const = default;
};

enum class SubbagMode {
    Bounded,    // unions over <= k edge restrictions; complete when β-cn(H|_B) <= k
    Exhaustive, // all 2^|H| subhypergraphs, for cross-validation
};

// L(H|_{B_t}): the realizable vertex sets at a bag. Always contains ∅.
std::set<VertexSet> enumerate_subbags_of_bag(const Hypergraph& h, const PointSet& bag,
                                             std::size_t k,
                                             SubbagMode mode = SubbagMode::Bounded,
                                             const Limits& limits = default_limits());

std::set<VertexSet> enumerate_subbags(const Hypergraph& h, const PointDecomposition& pd,
                                      const NodeId& t, std::size_t k,
                                      SubbagMode mode = SubbagMode::Bounded,
                                      const Limits& limits = default_limits());

struct DecomposabilityResult {
    bool ok = true;
    // Violating triple (s, s1, s2): arcs (s1,s),(s2,s) exist, condition (ii)
    // holds, but neither (s1,s2) nor (s2,s1) is an arc.
    std::optional<std::tuple<SubBag, SubBag, SubBag>> counterexample;
};

DecomposabilityResult check_decomposable(const Hypergraph& h, const PointDecomposition& pd,
                                         const Limits& limits = default_limits());

// A[H']_∅: the sub-bag graph induced by {(t, V(H'|_{B_t}))} with the
// all-empty non-root components removed.
SubBagGraph restrict_tstructure(const PointDecomposition& pd, const Hypergraph& h,
                                const Subhypergraph& sub);

// Definition of realisations: at most one sub-bag per node, exactly one
// sink, and that sink is a sub-bag of the root.
bool is_realisation(const PointDecomposition& pd, const std::set<SubBag>& sub_bags);

// T_{A'} for a (partial) realisation. Throws InputError when the parent
// rule yields no comparable minimum.
RootedTree tree_of(const PointDecomposition& pd, const std::set<SubBag>& sub_bags);

enum class ValidationMode { Fast, Exhaustive };

struct ValidationReport {
    // True when every applicable check ran to completion (no sampling
    // fallback); false means "partially validated".
    bool exhaustive = true;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

ValidationReport validate_pd(const Hypergraph& h, const PointDecomposition& pd,
                             ValidationMode mode = ValidationMode::Exhaustive,
                             const Limits& limits = default_limits(),
                             std::uint64_t seed = 0);

ValidationReport validate_spd(const Hypergraph& h, const SimplifiedPointDecomposition& spd,
                              const Limits& limits = default_limits());

std::size_t width_of_pd(const Hypergraph& h, const PointDecomposition& pd,
                        const Limits& limits = default_limits());
std::size_t width_of_spd(const Hypergraph& h, const SimplifiedPointDecomposition& spd,
                         const Limits& limits = default_limits());

bool is_flat(const PointDecomposition& pd);

// All realisations of A, or nullopt when the node-wise product of
// (sub-bag count + 1) exceeds the configured cap.
std::optional<std::vector<std::set<SubBag>>>
enumerate_realisations(const Hypergraph& h, const PointDecomposition& pd,
                       const Limits& limits = default_limits());

// Loader-side check that every sub-bag referenced by an arc is a genuine
// member of the bag's lattice; throws InputError otherwise.
void check_subbags_achievable(const Hypergraph& h, const PointDecomposition& pd,
                              const Limits& limits = default_limits());

} // namespace pointdec
