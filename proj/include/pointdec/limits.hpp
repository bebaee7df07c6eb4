#pragma once

#include <cstddef>
#include <cstdint>

namespace pointdec {

// Size caps for the exhaustive searches. Everything here is NP-hard in
// general; the caps keep the exact searches at desk scale and make an
// over-budget call fail loudly instead of hanging.
struct Limits {
    std::size_t cover_subset_edges = 20;     // cover_number / subhypergraph search
    std::size_t mim_edges = 32;              // max_induced_matching branch and bound
    std::size_t d2_vertices = 32;            // distance-2 independent set
    std::size_t brute_mwis_vertices = 20;    // brute-force MWIS oracle
    std::uint64_t brute_opt_assignments = 10'000'000; // |D|^|X| cap
    std::uint64_t realisation_product = 1'000'000;    // exhaustive realisation enumeration
    std::size_t sampled_realisations = 10'000;        // fallback sampling in validators
    std::size_t coverwidth_order_vertices = 8;        // exhaustive search over all orderings
    std::uint64_t partial_realisation_limit = 200'000;
};

inline const Limits& default_limits() {
    static const Limits l{};
    return l;
}

} // namespace pointdec
