#include "doctest.h"

#include <algorithm>

#include "pointdec/graph_algos.hpp"
#include "pointdec/mim.hpp"
#include "pointdec/solver.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace pointdec;

namespace {

// second, definitional mim-width: raw cut bipartite graphs + subset oracle
std::size_t mim_width_by_oracle(const Hypergraph& h, const BranchDecomposition& bd) {
    Graph inc = incidence_graph(h);
    std::size_t best = 0;
    for (const auto& t : bd.tree.nodes) {
        std::set<GraphVertexId> side = branch_side(bd, t);
        Graph cut;
        for (const auto& v : inc.vertices()) cut.add_vertex(v);
        for (const auto& [a, b] : inc.edges())
            if (side.count(a) != side.count(b)) cut.add_edge(a, b);
        best = std::max(best, oracles::mim_by_subsets(cut));
    }
    return best;
}

} // namespace

TEST_CASE("generated separating families") {
    HnFamily f2 = gen_hn(2);
    CHECK(f2.hypergraph.edge_count() == 4);
    CHECK(f2.hypergraph.vertices().size() == 4);
    CHECK_FALSE(f2.collapsed);
    f2.branch.validate(f2.hypergraph);
    CHECK(mim_width_of_branch(f2.hypergraph, f2.branch) <= 2);

    HnFamily f1 = gen_hn(1);
    CHECK(f1.collapsed);
    CHECK(f1.hypergraph.edge_count() == 1);
    f1.branch.validate(f1.hypergraph);

    HnFamily f3 = gen_hn(3);
    CHECK(f3.hypergraph.edge_count() == 6);
    CHECK(f3.hypergraph.vertices().size() == 6);
    CHECK(f3.branch.leaves.size() == 12);
    CHECK(mim_width_of_branch(f3.hypergraph, f3.branch) <= 2);
}

TEST_CASE("mim width of random branch decompositions matches the oracle") {
    generators::Rng rng(601);
    Hypergraph flower = fixtures::flower();
    for (int i = 0; i < 5; ++i) {
        BranchDecomposition bd = generators::random_branch_decomposition(rng, flower);
        CHECK(mim_width_of_branch(flower, bd) == mim_width_by_oracle(flower, bd));
    }
    for (int i = 0; i < 10; ++i) {
        Hypergraph h = generators::random_hypergraph(rng, 4, 3);
        BranchDecomposition bd = generators::random_branch_decomposition(rng, h);
        CHECK(mim_width_of_branch(h, bd) == mim_width_by_oracle(h, bd));
    }
}

TEST_CASE("cut points") {
    HnFamily f2 = gen_hn(2);
    const Hypergraph& h = f2.hypergraph;
    const BranchDecomposition& bd = f2.branch;
    CHECK(cut_points(h, bd, bd.tree.root).empty());
    for (const auto& [t, lab] : bd.leaves) {
        if (lab.kind != LeafKind::Vertex) continue;
        PointSet expect;
        for (const auto& [e, vs] : h.edges())
            if (vs.count(lab.id)) expect.insert(Point{lab.id, e});
        CHECK(cut_points(h, bd, t) == expect);
    }
}

TEST_CASE("bag construction from the branch tree") {
    HnFamily f2 = gen_hn(2);
    SimplifiedPointDecomposition spd = build_simplified_from_branch(f2.hypergraph, f2.branch);
    CHECK(width_of_spd(f2.hypergraph, spd) <= 4);
    CHECK(validate_spd(f2.hypergraph, spd).ok());

    Hypergraph single{{{"e", {"a", "b"}}}};
    generators::Rng rng(602);
    BranchDecomposition bd = generators::random_branch_decomposition(rng, single);
    SimplifiedPointDecomposition sspd = build_simplified_from_branch(single, bd);
    CHECK(width_of_spd(single, sspd) == 1);
}

TEST_CASE("pipeline width bound over a random corpus") {
    generators::Rng rng(603);
    for (int i = 0; i < 15; ++i) {
        Hypergraph h = generators::random_hypergraph(rng, 4, 3);
        BranchDecomposition bd = generators::random_branch_decomposition(rng, h);
        SimplifiedPointDecomposition spd = build_simplified_from_branch(h, bd);
        CHECK(validate_spd(h, spd).ok());
        std::size_t k = width_of_spd(h, spd);
        CHECK(k <= 2 * mim_width_of_branch(h, bd));
        PointDecomposition flat = flatten(spd, h, k);
        CHECK(is_flat(flat));
        CHECK(width_of_pd(h, flat) <= 2 * mim_width_of_branch(h, bd));
    }
}

TEST_CASE("consistency: trivial cases and fast-oracle agreement") {
    generators::Rng rng(604);
    for (int i = 0; i < 10; ++i) {
        Hypergraph h = generators::random_hypergraph(rng, 4, 3);
        BranchDecomposition bd = generators::random_branch_decomposition(rng, h);
        SimplifiedPointDecomposition spd = build_simplified_from_branch(h, bd);
        std::size_t k = std::max<std::size_t>(width_of_spd(h, spd), 1);
        Subhypergraph all;
        for (const auto& [e, vs] : h.edges()) all.insert(e);
        for (const auto& [t, parent] : spd.tree.parent) {
            // the full hypergraph always witnesses its own trace
            SubBag child{t, restricted_vertices(h, all, spd.bag(t))};
            SubBag up{parent, restricted_vertices(h, all, spd.bag(parent))};
            CHECK(consistent_subbags(spd, h, child, up, k, ConsistencyMode::Fast));
            CHECK(consistent_subbags(spd, h, child, up, k, ConsistencyMode::Oracle));
            // all pairs: fast == oracle
            for (const auto& s1 : enumerate_subbags_of_bag(h, spd.bag(t), k,
                                                           SubbagMode::Exhaustive))
                for (const auto& s2 : enumerate_subbags_of_bag(h, spd.bag(parent), k,
                                                               SubbagMode::Exhaustive))
                    CHECK(consistent_subbags(spd, h, {t, s1}, {parent, s2}, k,
                                             ConsistencyMode::Fast) ==
                          consistent_subbags(spd, h, {t, s1}, {parent, s2}, k,
                                             ConsistencyMode::Oracle));
        }
    }
}

TEST_CASE("flattened decompositions validate and solve correctly") {
    generators::Rng rng(605);
    int done = 0;
    while (done < 6) {
        Hypergraph h = generators::random_hypergraph(rng, 4, 3);
        BranchDecomposition bd = generators::random_branch_decomposition(rng, h);
        SimplifiedPointDecomposition spd = build_simplified_from_branch(h, bd);
        std::size_t k = std::max<std::size_t>(width_of_spd(h, spd), 1);
        PointDecomposition flat = flatten(spd, h, k);
        CHECK(validate_pd(h, flat, ValidationMode::Exhaustive).ok());
        MaxCspInstance inst = generators::random_instance(rng, h, 2, 5);
        SolveOptions opts;
        opts.width_bound = k;
        CHECK(solve(inst, flat, opts).opt == brute_force_opt(inst).opt);
        ++done;
    }
}

TEST_CASE("cover reachability") {
    Hypergraph h = fixtures::flower();
    CoverOrder order{"x1", "x2", "x0", "x3"};
    // global minimum: only the incident edges
    CHECK(reachable_edges_cover(h, order, "x1") == std::set<EdgeId>{"e", "e1"});
    generators::Rng rng(606);
    for (int i = 0; i < 15; ++i) {
        Hypergraph r = generators::random_hypergraph(rng, 5, 4);
        CoverOrder o = generators::random_order(rng, r);
        for (const auto& x : r.vertices())
            CHECK(reachable_edges_cover(r, o, x) ==
                  oracles::reachable_edges_by_components(r, o, x));
    }
    Hypergraph split{{{"f1", {"a", "b"}}, {"f2", {"c", "d"}}}};
    CHECK(reachable_edges_cover(split, {"a", "b", "c", "d"}, "d") ==
          std::set<EdgeId>{"f2"});
}

TEST_CASE("coverwidth of an order") {
    Hypergraph single{{{"e", {"a", "b"}}}};
    CHECK(coverwidth_of_order(single, {"a", "b"}) == 1);
    CHECK(coverwidth_of_order(single, {"b", "a"}) == 1);

    Hypergraph h = fixtures::flower();
    CoverOrder order{"x1", "x2", "x0", "x3"};
    // second implementation: oracle reachability + exhaustive cover numbers
    std::size_t expect = 0;
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const auto& x : order) {
        SetSystem slice;
        for (const auto& e : oracles::reachable_edges_by_components(h, order, x)) {
            VertexSet high;
            for (const auto& v : h.edge(e))
                if (pos[v] >= pos[x]) high.insert(v);
            if (!high.empty()) slice.insert(high);
        }
        expect = std::max(expect,
                          beta_cover_number_sets(slice, BetaCnMode::Exhaustive));
    }
    CHECK(coverwidth_of_order(h, order) == expect);
    CHECK_THROWS_AS(coverwidth_of_order(h, {"x1", "x2"}), InputError);
}

TEST_CASE("the separating families have large coverwidth") {
    CHECK(min_coverwidth_exhaustive(gen_hn(2).hypergraph) >= 2);
    CHECK(min_coverwidth_exhaustive(gen_hn(3).hypergraph) >= 3);
}

TEST_CASE("decomposition from an ordering") {
    Hypergraph single{{{"e", {"a", "b"}}}};
    SimplifiedPointDecomposition spd = build_spd_from_order(single, {"a", "b"});
    CHECK(spd.tree.nodes.size() == 2);
    CHECK(width_of_spd(single, spd) == 1);
    CHECK(validate_spd(single, spd).ok());

    generators::Rng rng(607);
    int done = 0;
    while (done < 6) {
        Hypergraph h = generators::random_hypergraph(rng, 4, 3);
        CoverOrder order = generators::random_order(rng, h);
        SimplifiedPointDecomposition s = build_spd_from_order(h, order);
        CHECK(validate_spd(h, s).ok());
        CHECK(width_of_spd(h, s) <= coverwidth_of_order(h, order));
        std::size_t k = std::max<std::size_t>(width_of_spd(h, s), 1);
        PointDecomposition flat = flatten(s, h, k);
        MaxCspInstance inst = generators::random_instance(rng, h, 2, 5);
        SolveOptions opts;
        opts.width_bound = k;
        CHECK(solve(inst, flat, opts).opt == brute_force_opt(inst).opt);
        ++done;
    }
}
