#include "doctest.h"

#include <algorithm>

#include "pointdec/beta.hpp"
#include "pointdec/decomposition.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace pointdec;

TEST_CASE("elimination order recognition") {
    Hypergraph h = fixtures::flower();
    CHECK(is_beta_elimination_order(h, {"x1", "x2", "x0", "x3"}));
    CHECK_FALSE(is_beta_elimination_order(h, {"x0", "x1", "x2", "x3"}));
    CHECK_FALSE(is_beta_elimination_order(h, {"x1", "x2", "x0"})); // not total

    Hypergraph single{{{"e", {"a", "b"}}}};
    CHECK(is_beta_elimination_order(single, {"a", "b"}));
    CHECK(is_beta_elimination_order(single, {"b", "a"}));
}

TEST_CASE("triangle hypergraph has no elimination order") {
    Hypergraph tri{{{"e1", {"a", "b"}}, {"e2", {"b", "c"}}, {"e3", {"a", "c"}}}};
    CHECK_FALSE(beta_elimination_order(tri).has_value());
    std::vector<VertexId> order{"a", "b", "c"};
    std::sort(order.begin(), order.end());
    int accepted = 0;
    do {
        if (is_beta_elimination_order(tri, order)) ++accepted;
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(accepted == 0);
}

TEST_CASE("greedy elimination succeeds on the drawn hypergraph") {
    Hypergraph h = fixtures::flower();
    auto order = beta_elimination_order(h);
    REQUIRE(order.has_value());
    CHECK(is_beta_elimination_order(h, *order));
}

TEST_CASE("edge order under the drawn elimination order") {
    Hypergraph h = fixtures::flower();
    BetaOrder beta{"x1", "x2", "x0", "x3"};
    CHECK(edge_order(h, beta) == EdgeOrder{"e1", "e2", "e3", "e"});

    Hypergraph disjoint{{{"f1", {"a", "b"}}, {"f2", {"c", "d"}}}};
    CHECK(edge_order(disjoint, {"a", "b", "c", "d"}) == EdgeOrder{"f1", "f2"});
}

TEST_CASE("edge order is total and antisymmetric") {
    generators::Rng rng(501);
    for (int i = 0; i < 20; ++i) {
        Hypergraph h = generators::random_interval_hypergraph(rng, 5, 4);
        auto beta = beta_elimination_order(h);
        REQUIRE(beta.has_value());
        EdgeOrder eo = edge_order(h, *beta);
        CHECK(eo.size() == h.edge_count());
        // re-sorting any shuffle reproduces the same total order
        EdgeOrder shuffled = eo;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(edge_order(h, *beta) == eo);
    }
}

TEST_CASE("bounded edge reachability on the drawn hypergraph") {
    Hypergraph h = fixtures::flower();
    BetaOrder beta{"x1", "x2", "x0", "x3"};
    CHECK(reachable_edges(h, beta, "x2", "e3") == std::set<EdgeId>{"e3"});
    CHECK(reachable_edges(h, beta, "x0", "e3") == std::set<EdgeId>{"e1", "e2", "e3"});
    // from the least vertex of an untouched edge nothing else is reachable
    CHECK(reachable_edges(h, beta, "x1", "e1") == std::set<EdgeId>{"e1"});
}

TEST_CASE("nested reachability sets are monotone") {
    // for x <= y, e <= f with a shared low vertex, the smaller set embeds
    generators::Rng rng(502);
    for (int rep = 0; rep < 20; ++rep) {
        Hypergraph h = generators::random_interval_hypergraph(rng, 5, 4);
        auto beta = beta_elimination_order(h);
        REQUIRE(beta.has_value());
        std::map<VertexId, std::size_t> pos;
        for (std::size_t i = 0; i < beta->size(); ++i) pos[(*beta)[i]] = i;
        EdgeOrder eo = edge_order(h, *beta);
        std::map<EdgeId, std::size_t> epos;
        for (std::size_t i = 0; i < eo.size(); ++i) epos[eo[i]] = i;
        for (const auto& x : *beta)
            for (const auto& y : *beta) {
                if (pos[x] > pos[y]) continue;
                for (const auto& [e, ev] : h.edges())
                    for (const auto& [f, fv] : h.edges()) {
                        if (epos[e] > epos[f]) continue;
                        auto low = reachable_edges(h, *beta, x, e);
                        auto high = reachable_edges(h, *beta, y, f);
                        VertexSet vlow, vhigh;
                        for (const auto& g : low)
                            for (const auto& v : h.edge(g)) vlow.insert(v);
                        for (const auto& g : high)
                            for (const auto& v : h.edge(g)) vhigh.insert(v);
                        bool meet = false;
                        for (const auto& v : vlow)
                            if (vhigh.count(v) && pos[v] <= pos[x]) meet = true;
                        if (!meet) continue;
                        CHECK(std::includes(high.begin(), high.end(), low.begin(),
                                            low.end()));
                    }
            }
    }
}

TEST_CASE("the generated decomposition reproduces the drawn one") {
    Hypergraph h = fixtures::flower();
    PointDecomposition built = build_beta_pd(h, {"x1", "x2", "x0", "x3"});
    std::map<NodeId, NodeId> rename{{"root", "t0"},
                                    {beta_node("x3"), "t1"},
                                    {beta_node("x0"), "t2"},
                                    {beta_node("x2"), "t3"},
                                    {beta_node("x1"), "t4"}};
    CHECK(fixtures::rename_nodes(built, rename) == fixtures::flower_pd());
}

TEST_CASE("single edge yields a clean three-node path") {
    Hypergraph h{{{"e", {"a", "b"}}}};
    PointDecomposition pd = build_beta_pd(h, {"a", "b"});
    CHECK(pd.tree.nodes.size() == 3);
    CHECK(width_of_pd(h, pd) == 1);
    ValidationReport report = validate_pd(h, pd, ValidationMode::Exhaustive);
    CHECK(report.ok());
    CHECK(report.exhaustive);
}

TEST_CASE("construction validates on random beta-acyclic hypergraphs") {
    generators::Rng rng(503);
    for (int i = 0; i < 10; ++i) {
        Hypergraph h = generators::random_interval_hypergraph(rng, 5, 4);
        auto beta = beta_elimination_order(h);
        REQUIRE(beta.has_value());
        PointDecomposition pd = build_beta_pd(h, *beta);
        CHECK(pd.tree.nodes.size() == h.vertices().size() + 1);
        CHECK(width_of_pd(h, pd) == 1);
        CHECK(validate_pd(h, pd, ValidationMode::Exhaustive).ok());
    }
}

TEST_CASE("build_beta_pd rejects a bogus order") {
    CHECK_THROWS_AS(build_beta_pd(fixtures::flower(), {"x0", "x1", "x2", "x3"}),
                    InputError);
}
