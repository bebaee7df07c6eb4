#include "doctest.h"

#include "pointdec/beta.hpp"
#include "pointdec/solver.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace pointdec;

namespace {

// all assignments psi : S -> D
std::vector<Assignment> assignments_over(const VertexSet& s, const std::vector<Value>& dom) {
    std::vector<Assignment> out{{}};
    for (const auto& v : s) {
        std::vector<Assignment> next;
        for (const auto& psi : out)
            for (const auto& d : dom) {
                Assignment ext = psi;
                ext.bindings[v] = d;
                next.push_back(std::move(ext));
            }
        out = std::move(next);
    }
    return out;
}

MaxCspInstance all_ones_flower() {
    Hypergraph h = fixtures::flower();
    std::map<EdgeId, Constraint> cs;
    for (const auto& [e, vs] : h.edges()) {
        Constraint c;
        c.scope.assign(vs.begin(), vs.end());
        for (const auto& psi : assignments_over(vs, {"0", "1"})) {
            ValueTuple tuple;
            for (const auto& v : c.scope) tuple.push_back(psi.at(v));
            c.table[tuple] = Rational(1);
        }
        cs[e] = std::move(c);
    }
    return MaxCspInstance({"x0", "x1", "x2", "x3"}, {"0", "1"}, std::move(cs));
}

} // namespace

TEST_CASE("guards at the drawn sub-bags") {
    Hypergraph h = fixtures::flower();
    PointDecomposition pd = fixtures::flower_pd();
    auto g1 = guards(h, pd, {"t4", {"x0", "x1"}}, 1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == Subhypergraph{"e1"});

    auto g0 = guards(h, pd, {"t0", {}}, 1);
    REQUIRE(g0.size() == 1);
    CHECK(g0[0].empty());

    auto g2 = guards(h, pd, {"t2", {"x0", "x3"}}, 2);
    std::set<Subhypergraph> got(g2.begin(), g2.end());
    CHECK(got == std::set<Subhypergraph>{{"e"}, {"e3"}});
}

TEST_CASE("valid assignments at the drawn sub-bags") {
    Hypergraph h = fixtures::flower();
    PointDecomposition pd = fixtures::flower_pd();

    MaxCspInstance inst = fixtures::flower_instance();
    auto at_root = valid_assignments(inst, h, pd, {"t0", {}}, 1);
    REQUIRE(at_root.size() == 1);
    CHECK(at_root[0].bindings.empty());

    // a one-row table on e1 pins the single valid assignment of (t4,{x1,x0})
    std::map<EdgeId, Constraint> cs;
    cs["e1"] = Constraint{{"x0", "x1"}, {{{"0", "1"}, Rational(1)}}};
    cs["e2"] = Constraint{{"x0", "x2"}, {{{"0", "0"}, Rational(1)}}};
    cs["e3"] = Constraint{{"x0", "x3"}, {{{"0", "0"}, Rational(1)}}};
    cs["e"] = Constraint{{"x0", "x1", "x2", "x3"}, {}};
    MaxCspInstance pinned({"x0", "x1", "x2", "x3"}, {"0", "1"}, std::move(cs));
    auto va = valid_assignments(pinned, h, pd, {"t4", {"x0", "x1"}}, 1);
    REQUIRE(va.size() == 1);
    CHECK(va[0].bindings == std::map<VertexId, Value>{{"x0", "0"}, {"x1", "1"}});
}

TEST_CASE("valid assignments agree with the definitional check") {
    Hypergraph h = fixtures::flower();
    PointDecomposition pd = fixtures::flower_pd();
    MaxCspInstance inst = fixtures::flower_instance();
    std::size_t k = width_of_pd(h, pd);
    for (const auto& t : pd.tree.nodes)
        for (const auto& s : enumerate_subbags(h, pd, t, k)) {
            auto fast = valid_assignments(inst, h, pd, {t, s}, k);
            std::set<Assignment> fast_set(fast.begin(), fast.end());
            std::set<Assignment> slow;
            auto gs = guards(h, pd, {t, s}, k);
            for (const auto& psi : assignments_over(s, inst.domain()))
                for (const auto& g : gs)
                    if (satisfies_subhypergraph(inst, psi, g)) {
                        slow.insert(psi);
                        break;
                    }
            CHECK(fast_set == slow);
        }
}

TEST_CASE("solve on the drawn decomposition") {
    PointDecomposition pd = fixtures::flower_pd();

    MaxCspInstance ones = all_ones_flower();
    CHECK(solve(ones, pd).opt == Rational(4));
    CHECK(brute_force_opt(ones).opt == Rational(4));

    MaxCspInstance inst = fixtures::flower_instance();
    SolveOptions opts;
    opts.want_witness = true;
    SolveResult r = solve(inst, pd, opts);
    CHECK(r.opt == Rational(13, 2));
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->domain() == VertexSet{"x0", "x1", "x2", "x3"});
    CHECK(partial_value(inst, *r.witness) == r.opt);
}

TEST_CASE("single constraint with a single-bag decomposition") {
    std::map<EdgeId, Constraint> cs;
    cs["f"] = Constraint{{"x", "y"},
                         {{{"0", "0"}, Rational(1, 3)}, {{"1", "0"}, Rational(5, 2)}}};
    MaxCspInstance inst({"x", "y"}, {"0", "1"}, std::move(cs));
    Hypergraph h = hypergraph_of(inst);

    PointDecomposition pd;
    pd.tree.root = "r";
    pd.tree.nodes = {"r", "t"};
    pd.tree.parent = {{"t", "r"}};
    pd.bags["r"] = {};
    pd.bags["t"] = h.points();
    pd.arcs = {{{"t", {"x", "y"}}, {"r", {}}}};
    CHECK(solve(inst, pd).opt == Rational(5, 2));
}

TEST_CASE("solver equals the brute oracle over a random beta-acyclic corpus") {
    generators::Rng rng(401);
    int done = 0;
    while (done < 40) {
        Hypergraph h = generators::random_interval_hypergraph(rng, 5, 4);
        auto beta = beta_elimination_order(h);
        REQUIRE(beta.has_value());
        PointDecomposition pd = build_beta_pd(h, *beta);
        MaxCspInstance inst = generators::random_instance(rng, h, 2, 6);
        SolveOptions opts;
        opts.want_witness = true;
        SolveResult got = solve(inst, pd, opts);
        OptResult want = brute_force_opt(inst);
        CHECK(got.opt == want.opt);
        REQUIRE(got.witness.has_value());
        CHECK(partial_value(inst, *got.witness) == got.opt);
        ++done;
    }
}

TEST_CASE("partial realisations of the drawn decomposition") {
    PointDecomposition pd = fixtures::flower_pd();
    MaxCspInstance inst = all_ones_flower();
    auto pairs = enumerate_partial_realisations(inst, pd, 1);
    bool has_a1 = false, has_a2 = false, has_root = false;
    for (const auto& [pr, phi] : pairs) {
        if (pr.graph.sub_bags == fixtures::flower_a1()) has_a1 = true;
        if (pr.graph.sub_bags == fixtures::flower_a2()) has_a2 = true;
        if (pr.graph.sub_bags == std::set<SubBag>{{"t0", {}}} && phi.at({"t0", {}}).bindings.empty())
            has_root = true;
    }
    CHECK(has_a1);
    CHECK(has_a2);
    CHECK(has_root);
}

TEST_CASE("cell values dominate the partial realisation values with equality at the max") {
    PointDecomposition pd = fixtures::flower_pd();
    MaxCspInstance inst = fixtures::flower_instance();
    SolveDetail detail = solve_detailed(inst, pd);
    auto pairs = enumerate_partial_realisations(inst, pd, 1);
    std::map<Cell, Rational> best;
    for (const auto& [pr, phi] : pairs) {
        Cell cell{pr.sink, phi.at(pr.sink)};
        Rational v = tvalue_of(inst, pr, phi);
        auto it = best.find(cell);
        if (it == best.end() || v > it->second) best[cell] = v;
    }
    // every sink cell reached by the enumeration matches its DP value; cells
    // never reached as a sink (e.g. (t,∅) at non-root nodes) carry no claim
    REQUIRE_FALSE(best.empty());
    for (const auto& [cell, v] : best) {
        REQUIRE(detail.cells.count(cell));
        CHECK(detail.cells.at(cell) == v);
    }
}

TEST_CASE("glue_assignment rejects conflicts") {
    Assignment a, b;
    a.bindings = {{"x", "0"}};
    b.bindings = {{"x", "1"}};
    ConsistentAssignment phi{{{"t", {"x"}}, a}, {{"u", {"x"}}, b}};
    CHECK_THROWS_AS(glue_assignment(phi), InputError);
    ConsistentAssignment ok{{{"t", {"x"}}, a}, {{"u", {"x"}}, a}};
    CHECK(glue_assignment(ok).bindings == a.bindings);
}
