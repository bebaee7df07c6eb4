#include "pointdec/solver.hpp"

#include <algorithm>

#include "pointdec/graph_algos.hpp"

namespace pointdec {

namespace {

std::string subbag_id(const SubBag& s) {
    std::string out = s.first + "#";
    for (const auto& v : s.second) out += v + ",";
    return out;
}

} // namespace

std::vector<Subhypergraph> guards(const Hypergraph& h, const PointDecomposition& pd,
                                  const SubBag& s, std::size_t k) {
    if (s.second.empty()) return {Subhypergraph{}};
    const PointSet& bag = pd.bag(s.first);
    std::vector<EdgeId> candidates;
    for (const auto& [e, vs] : h.edges()) {
        VertexSet r = restrict_edge(h, e, bag);
        if (r.empty()) continue;
        if (std::includes(s.second.begin(), s.second.end(), r.begin(), r.end()))
            candidates.push_back(e);
    }
    std::vector<Subhypergraph> found;
    Subhypergraph pick;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (!pick.empty() && restricted_vertices(h, pick, bag) == s.second)
            found.push_back(pick);
        if (pick.size() == k) return;
        for (std::size_t i = start; i < candidates.size(); ++i) {
            pick.insert(candidates[i]);
            self(self, i + 1);
            pick.erase(candidates[i]);
        }
    };
    recurse(recurse, 0);
    // Keep the inclusion-minimal ones.
    std::vector<Subhypergraph> minimal;
    for (const auto& a : found) {
        bool is_min = std::none_of(found.begin(), found.end(), [&](const Subhypergraph& b) {
            return b != a && std::includes(a.begin(), a.end(), b.begin(), b.end());
        });
        if (is_min) minimal.push_back(a);
    }
    return minimal;
}

std::vector<Assignment> valid_assignments(const MaxCspInstance& inst, const Hypergraph& h,
                                          const PointDecomposition& pd, const SubBag& s,
                                          std::size_t k) {
    std::set<Assignment> out;
    for (const auto& guard : guards(h, pd, s, k)) {
        // Join of the projected supports R_e|_{S ∩ e}, extended to all of S.
        std::vector<std::vector<Assignment>> relations;
        std::vector<VertexSet> domains;
        for (const auto& e : guard) {
            VertexSet overlap;
            for (const auto& v : h.edge(e))
                if (s.second.count(v)) overlap.insert(v);
            std::set<Assignment> projected;
            for (const auto& [tuple, value] : inst.constraint(e).table) {
                Assignment full;
                const auto& scope = inst.constraint(e).scope;
                for (std::size_t i = 0; i < scope.size(); ++i)
                    full.bindings.emplace(scope[i], tuple[i]);
                projected.insert(full.restricted_to(overlap));
            }
            relations.emplace_back(projected.begin(), projected.end());
            domains.push_back(std::move(overlap));
        }
        std::vector<Assignment> joined =
            guard.empty() ? std::vector<Assignment>{Assignment{}}
                          : join(relations, domains);
        // Extend over S \ (covered variables) with every domain value.
        for (const auto& base : joined) {
            VertexSet missing;
            for (const auto& v : s.second)
                if (!base.bound(v)) missing.insert(v);
            std::vector<Assignment> acc{base};
            for (const auto& v : missing) {
                std::vector<Assignment> next;
                for (const auto& a : acc) {
                    for (const auto& d : inst.domain()) {
                        Assignment ext = a;
                        ext.bindings.emplace(v, d);
                        next.push_back(std::move(ext));
                    }
                }
                acc = std::move(next);
            }
            out.insert(acc.begin(), acc.end());
        }
    }
    return {out.begin(), out.end()};
}

namespace {

struct SolverState {
    const MaxCspInstance& inst;
    const Hypergraph h;
    const PointDecomposition& pd;
    std::size_t k;
    bool want_witness;
    const Limits& limits;

    std::map<NodeId, std::vector<SubBag>> subbags;
    std::map<SubBag, std::vector<Assignment>> valid;
    std::map<Cell, Rational> val;
    // Traceback: chosen cell per selected MWIS vertex.
    std::map<Cell, std::vector<Cell>> back;
};

Rational local_sum(const SolverState& st, const VertexSet& s, const Assignment& psi) {
    Rational total = 0;
    for (const auto& [e, vs] : st.h.edges()) {
        bool inside = std::includes(s.begin(), s.end(), vs.begin(), vs.end());
        if (inside) total += constraint_value(st.inst, e, psi);
    }
    return total;
}

Rational overlap_sum(const SolverState& st, const VertexSet& s1, const VertexSet& s2,
                     const Assignment& psi) {
    VertexSet inter;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(),
                          std::inserter(inter, inter.end()));
    return local_sum(st, inter, psi);
}

void compute_cell(SolverState& st, const SubBag& s, const Assignment& psi) {
    const NodeId& t = s.first;
    Cell cell{s, psi};
    Rational base = local_sum(st, s.second, psi);
    if (st.pd.tree.children(t).empty()) {
        st.val[cell] = base;
        return;
    }
    // The per-cell graph: sub-bags strictly below t with an arc into s and a
    // compatible valid assignment.
    WeightedGraph g;
    std::map<GraphVertexId, SubBag> of_id;
    std::map<GraphVertexId, Cell> best_choice;
    for (const auto& [t2, ss] : st.subbags) {
        if (!st.pd.tree.strictly_below(t2, t)) continue;
        for (const auto& s2 : ss) {
            if (!st.pd.arcs.count({s2, s})) continue;
            std::optional<Rational> best;
            Cell chosen;
            for (const auto& psi2 : st.valid.at(s2)) {
                bool compatible = true;
                for (const auto& v : s2.second) {
                    if (s.second.count(v) && psi2.at(v) != psi.at(v)) {
                        compatible = false;
                        break;
                    }
                }
                if (!compatible) continue;
                Rational w = st.val.at({s2, psi2}) - overlap_sum(st, s.second, s2.second, psi);
                if (!best || w > *best) {
                    best = w;
                    chosen = {s2, psi2};
                }
            }
            if (!best) continue;
            GraphVertexId id = subbag_id(s2);
            g.graph.add_vertex(id);
            g.weight[id] = *best;
            of_id[id] = s2;
            best_choice[id] = chosen;
        }
    }
    for (auto it = of_id.begin(); it != of_id.end(); ++it) {
        auto jt = it;
        for (++jt; jt != of_id.end(); ++jt) {
            const SubBag& a = it->second;
            const SubBag& b = jt->second;
            if (a.first == b.first || st.pd.arcs.count({a, b}) || st.pd.arcs.count({b, a}))
                g.graph.add_edge(it->first, jt->first);
        }
    }
    auto p = peo(g.graph);
    if (!p.chordal)
        throw InvalidDecompositionError("cell graph is not chordal at sub-bag " + subbag_id(s));
    MwisResult mwis = chordal_mwis(g, p.order);
    st.val[cell] = base + mwis.weight;
    if (st.want_witness) {
        std::vector<Cell> picks;
        for (const auto& id : mwis.chosen) picks.push_back(best_choice.at(id));
        st.back[cell] = std::move(picks);
    }
}

void trace(const SolverState& st, const Cell& cell, Assignment& acc) {
    for (const auto& [v, d] : cell.second.bindings) acc.bindings.emplace(v, d);
    auto it = st.back.find(cell);
    if (it == st.back.end()) return;
    for (const auto& next : it->second) trace(st, next, acc);
}

} // namespace

SolveDetail solve_detailed(const MaxCspInstance& inst, const PointDecomposition& pd,
                           const SolveOptions& opts, const Limits& limits) {
    Hypergraph h = hypergraph_of(inst);
    std::size_t k = opts.width_bound ? *opts.width_bound : width_of_pd(h, pd, limits);
    if (k == 0) k = 1;
    SolverState st{inst, h, pd, k, opts.want_witness, limits, {}, {}, {}, {}};
    bool exhaustive = h.edge_count() <= limits.cover_subset_edges;
    for (const auto& t : pd.tree.nodes) {
        auto sets = enumerate_subbags_of_bag(
            h, pd.bag(t), k, exhaustive ? SubbagMode::Exhaustive : SubbagMode::Bounded,
            limits);
        std::vector<SubBag> ss;
        for (const auto& sset : sets) {
            SubBag sb{t, sset};
            st.valid[sb] = valid_assignments(inst, h, pd, sb, k);
            ss.push_back(std::move(sb));
        }
        st.subbags[t] = std::move(ss);
    }
    for (const auto& t : pd.tree.postorder()) {
        for (const auto& s : st.subbags.at(t))
            for (const auto& psi : st.valid.at(s)) compute_cell(st, s, psi);
    }
    SolveDetail out;
    std::optional<Cell> best;
    for (const auto& s : st.subbags.at(pd.tree.root)) {
        for (const auto& psi : st.valid.at(s)) {
            Cell cell{s, psi};
            if (!best || st.val.at(cell) > st.val.at(*best)) best = cell;
        }
    }
    if (!best)
        throw InputError("no valid assignment at any root sub-bag");
    out.result.opt = st.val.at(*best);
    if (opts.want_witness) {
        Assignment witness;
        trace(st, *best, witness);
        for (const auto& v : inst.variables())
            if (!witness.bound(v)) witness.bindings.emplace(v, inst.domain().front());
        out.result.witness = std::move(witness);
    }
    out.cells = std::move(st.val);
    return out;
}

SolveResult solve(const MaxCspInstance& inst, const PointDecomposition& pd,
                  const SolveOptions& opts, const Limits& limits) {
    return solve_detailed(inst, pd, opts, limits).result;
}

std::vector<std::pair<PartialRealisation, ConsistentAssignment>>
enumerate_partial_realisations(const MaxCspInstance& inst, const PointDecomposition& pd,
                               std::size_t k, const Limits& limits) {
    Hypergraph h = hypergraph_of(inst);
    bool exhaustive = h.edge_count() <= limits.cover_subset_edges;
    std::map<NodeId, std::vector<SubBag>> subbags;
    std::map<SubBag, std::vector<Assignment>> valid;
    std::uint64_t product = 1;
    for (const auto& t : pd.tree.nodes) {
        auto sets = enumerate_subbags_of_bag(
            h, pd.bag(t), k, exhaustive ? SubbagMode::Exhaustive : SubbagMode::Bounded,
            limits);
        std::vector<SubBag> ss;
        std::uint64_t options = 1;
        for (const auto& sset : sets) {
            SubBag sb{t, sset};
            auto va = valid_assignments(inst, h, pd, sb, k);
            options += va.size();
            valid[sb] = std::move(va);
            ss.push_back(std::move(sb));
        }
        subbags[t] = std::move(ss);
        if (product > limits.partial_realisation_limit / options)
            throw SizeLimitError("partial realisation enumeration exceeds cap");
        product *= options;
    }
    // Sub-bags with a (possibly empty) directed path in A to a root sub-bag.
    std::set<SubBag> root_reaching;
    {
        std::set<SubBag> frontier;
        for (const auto& s : subbags.at(pd.tree.root)) frontier.insert(s);
        root_reaching = frontier;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [a, b] : pd.arcs) {
                if (root_reaching.count(b) && !root_reaching.count(a) &&
                    root_reaching.insert(a).second)
                    changed = true;
            }
        }
    }
    std::vector<NodeId> nodes(pd.tree.nodes.begin(), pd.tree.nodes.end());
    std::vector<std::pair<PartialRealisation, ConsistentAssignment>> out;
    ConsistentAssignment current;
    auto finish = [&]() {
        std::set<SubBag> chosen;
        for (const auto& [s, psi] : current) chosen.insert(s);
        if (chosen.empty()) return;
        // Exactly one sink, able to reach a root sub-bag in A.
        std::vector<SubBag> sinks;
        for (const auto& s : chosen) {
            bool is_sink = std::none_of(chosen.begin(), chosen.end(), [&](const SubBag& s2) {
                return pd.arcs.count({s, s2}) != 0;
            });
            if (is_sink) sinks.push_back(s);
        }
        if (sinks.size() != 1 || !root_reaching.count(sinks.front())) return;
        PartialRealisation pr;
        pr.sink = sinks.front();
        pr.graph.sub_bags = chosen;
        for (const auto& a : pd.arcs)
            if (chosen.count(a.first) && chosen.count(a.second)) pr.graph.arcs.insert(a);
        // Consistency on T_{A'}-adjacent pairs.
        RootedTree ta;
        try {
            ta = tree_of(pd, chosen);
        } catch (const InputError&) {
            return;
        }
        std::map<NodeId, SubBag> at;
        for (const auto& s : chosen) at.emplace(s.first, s);
        for (const auto& [c, p] : ta.parent) {
            const SubBag& s1 = at.at(c);
            const SubBag& s2 = at.at(p);
            for (const auto& v : s1.second) {
                if (s2.second.count(v) &&
                    current.at(s1).at(v) != current.at(s2).at(v))
                    return;
            }
        }
        out.emplace_back(std::move(pr), current);
    };
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == nodes.size()) {
            finish();
            return;
        }
        self(self, i + 1);
        for (const auto& s : subbags.at(nodes[i])) {
            for (const auto& psi : valid.at(s)) {
                current[s] = psi;
                self(self, i + 1);
                current.erase(s);
            }
        }
    };
    recurse(recurse, 0);
    return out;
}

Assignment glue_assignment(const ConsistentAssignment& phi) {
    Assignment out;
    for (const auto& [s, psi] : phi) {
        for (const auto& [v, d] : psi.bindings) {
            auto it = out.bindings.find(v);
            if (it != out.bindings.end()) {
                if (it->second != d)
                    throw InputError("conflicting values for " + v + " while gluing");
            } else {
                out.bindings.emplace(v, d);
            }
        }
    }
    return out;
}

Rational tvalue_of(const MaxCspInstance& inst, const PartialRealisation& pr,
                   const ConsistentAssignment& phi) {
    Assignment glued = glue_assignment(phi);
    Hypergraph h = hypergraph_of(inst);
    Rational total = 0;
    for (const auto& [e, vs] : h.edges()) {
        bool covered = std::any_of(pr.graph.sub_bags.begin(), pr.graph.sub_bags.end(),
                                   [&](const SubBag& s) {
                                       return std::includes(s.second.begin(), s.second.end(),
                                                            vs.begin(), vs.end());
                                   });
        if (covered) total += constraint_value(inst, e, glued);
    }
    return total;
}

} // namespace pointdec
