#pragma once

#include <map>
#include <set>
#include <string>

#include "pointdec/decomposition.hpp"
#include "pointdec/hypergraph.hpp"
#include "pointdec/maxcsp.hpp"

namespace fixtures {

using namespace pointdec;

// Four-edge hypergraph with one big edge e = {x0,x1,x2,x3} and the three
// pairs e1, e2, e3 hanging off x0. Beta-acyclic via x1 < x2 < x0 < x3.
inline Hypergraph flower() {
    return Hypergraph{{
        {"e", {"x0", "x1", "x2", "x3"}},
        {"e1", {"x0", "x1"}},
        {"e2", {"x0", "x2"}},
        {"e3", {"x0", "x3"}},
    }};
}

// Hand-drawn width-1 point decomposition of flower(): a path
// t0 (root) - t1 - t2 - t3 - t4 with eleven arcs.
inline PointDecomposition flower_pd() {
    PointDecomposition pd;
    pd.tree.root = "t0";
    pd.tree.nodes = {"t0", "t1", "t2", "t3", "t4"};
    pd.tree.parent = {{"t1", "t0"}, {"t2", "t1"}, {"t3", "t2"}, {"t4", "t3"}};
    pd.bags["t0"] = {};
    pd.bags["t1"] = {{"x3", "e3"}, {"x3", "e"}};
    pd.bags["t2"] = {{"x0", "e1"}, {"x0", "e2"}, {"x0", "e3"},
                     {"x3", "e3"}, {"x0", "e"},  {"x3", "e"}};
    pd.bags["t3"] = {{"x2", "e2"}, {"x0", "e2"}, {"x2", "e"}, {"x0", "e"}, {"x3", "e"}};
    pd.bags["t4"] = {{"x1", "e1"}, {"x0", "e1"}, {"x1", "e"},
                     {"x2", "e"},  {"x0", "e"},  {"x3", "e"}};
    const VertexSet full{"x0", "x1", "x2", "x3"};
    const VertexSet x023{"x0", "x2", "x3"};
    const VertexSet x01{"x0", "x1"};
    const VertexSet x02{"x0", "x2"};
    const VertexSet x03{"x0", "x3"};
    const VertexSet x0{"x0"};
    const VertexSet x3{"x3"};
    const VertexSet none{};
    pd.arcs = {
        {{"t4", full}, {"t3", x023}},
        {{"t4", x01}, {"t3", x023}},
        {{"t4", x01}, {"t2", x0}},
        {{"t4", x01}, {"t2", x03}},
        {{"t3", x02}, {"t2", x0}},
        {{"t3", x02}, {"t2", x03}},
        {{"t3", x023}, {"t2", x03}},
        {{"t2", x0}, {"t1", x3}},
        {{"t2", x0}, {"t0", none}},
        {{"t2", x03}, {"t1", x3}},
        {{"t1", x3}, {"t0", none}},
    };
    return pd;
}

// The realisation A1 of flower_pd() whose derived tree is the whole path.
inline std::set<SubBag> flower_a1() {
    return {{"t4", {"x0", "x1"}},
            {"t3", {"x0", "x2", "x3"}},
            {"t2", {"x0", "x3"}},
            {"t1", {"x3"}},
            {"t0", {}}};
}

// A2 = A[{e1,e2}]_emptyset.
inline std::set<SubBag> flower_a2() {
    return {{"t4", {"x0", "x1"}}, {"t3", {"x0", "x2"}}, {"t2", {"x0"}}, {"t0", {}}};
}

// Rename the nodes of a point decomposition; used to compare the generated
// per-vertex construction against the hand-drawn fixture.
inline PointDecomposition rename_nodes(const PointDecomposition& pd,
                                       const std::map<NodeId, NodeId>& to) {
    PointDecomposition out;
    out.tree.root = to.at(pd.tree.root);
    for (const auto& t : pd.tree.nodes) out.tree.nodes.insert(to.at(t));
    for (const auto& [c, p] : pd.tree.parent) out.tree.parent[to.at(c)] = to.at(p);
    for (const auto& [t, bag] : pd.bags) out.bags[to.at(t)] = bag;
    for (const auto& [a, b] : pd.arcs)
        out.arcs.insert({{to.at(a.first), a.second}, {to.at(b.first), b.second}});
    return out;
}

// A small instance over flower() with handpicked rational values; the brute
// optimum is 2 + 1/2 + 1 + 3 = 13/2 at x0=a, x1=b, x2=a, x3=b.
inline MaxCspInstance flower_instance() {
    std::map<EdgeId, Constraint> cs;
    cs["e"] = Constraint{{"x0", "x1", "x2", "x3"},
                         {{{"a", "b", "a", "b"}, Rational(2)},
                          {{"a", "a", "a", "a"}, Rational(1)},
                          {{"b", "b", "b", "b"}, Rational(1, 2)}}};
    cs["e1"] = Constraint{{"x0", "x1"},
                          {{{"a", "b"}, Rational(1, 2)}, {{"b", "a"}, Rational(3)}}};
    cs["e2"] = Constraint{{"x0", "x2"}, {{{"a", "a"}, Rational(1)}}};
    cs["e3"] = Constraint{{"x0", "x3"},
                          {{{"a", "b"}, Rational(3)}, {{"a", "a"}, Rational(1, 3)}}};
    return MaxCspInstance({"x0", "x1", "x2", "x3"}, {"a", "b"}, std::move(cs));
}

} // namespace fixtures
