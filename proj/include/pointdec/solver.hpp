#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pointdec/decomposition.hpp"
#include "pointdec/maxcsp.hpp"

namespace pointdec {

// All inclusion-minimal subhypergraphs H' with V(H'|_{B_t}) = S, each of
// size <= k. S = ∅ yields the single empty guard.
std::vector<Subhypergraph> guards(const Hypergraph& h, const PointDecomposition& pd,
                                  const SubBag& s, std::size_t k);

// Assignments ψ : S -> D satisfying some guard of s, deterministically
// ordered.
std::vector<Assignment> valid_assignments(const MaxCspInstance& inst, const Hypergraph& h,
                                          const PointDecomposition& pd, const SubBag& s,
                                          std::size_t k);

struct SolveOptions {
    // Guard/sub-bag enumeration bound; defaults to the computed width.
    std::optional<std::size_t> width_bound;
    bool want_witness = false;
};

struct SolveResult {
    Rational opt;
    std::optional<Assignment> witness; // total assignment achieving opt
};

using Cell = std::pair<SubBag, Assignment>;

struct SolveDetail {
    SolveResult result;
    std::map<Cell, Rational> cells; // val(s,ψ) for every computed cell
};

// Bottom-up dynamic programming of the tractability algorithm: per-cell
// vertex-weighted chordal graph, MWIS via the PEO greedy. A PEO failure on
// a cell graph raises InvalidDecompositionError.
SolveDetail solve_detailed(const MaxCspInstance& inst, const PointDecomposition& pd,
                           const SolveOptions& opts = {},
                           const Limits& limits = default_limits());

SolveResult solve(const MaxCspInstance& inst, const PointDecomposition& pd,
                  const SolveOptions& opts = {}, const Limits& limits = default_limits());

// Partial realisation: at most one sub-bag per node, a unique sink with a
// (possibly empty) directed path in A to a root sub-bag.
struct PartialRealisation {
    SubBagGraph graph;
    SubBag sink;
};

using ConsistentAssignment = std::map<SubBag, Assignment>;

// Exhaustive enumeration of (partial realisation, consistent assignment)
// pairs; test-scale only, guarded by the limit.
std::vector<std::pair<PartialRealisation, ConsistentAssignment>>
enumerate_partial_realisations(const MaxCspInstance& inst, const PointDecomposition& pd,
                               std::size_t k, const Limits& limits = default_limits());

// Glued assignment of a consistent assignment (throws on conflict) and the
// value tvalue(φ, A').
Assignment glue_assignment(const ConsistentAssignment& phi);
Rational tvalue_of(const MaxCspInstance& inst, const PartialRealisation& pr,
                   const ConsistentAssignment& phi);

} // namespace pointdec
