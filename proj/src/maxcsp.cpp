#include "pointdec/maxcsp.hpp"

#include <algorithm>

namespace pointdec {

Assignment Assignment::restricted_to(const VertexSet& vars) const {
    Assignment out;
    for (const auto& [v, val] : bindings)
        if (vars.count(v)) out.bindings.emplace(v, val);
    return out;
}

VertexSet Assignment::domain() const {
    VertexSet out;
    for (const auto& [v, val] : bindings) out.insert(v);
    return out;
}

MaxCspInstance::MaxCspInstance(std::vector<VertexId> variables, std::vector<Value> domain,
                               std::map<EdgeId, Constraint> constraints)
    : variables_(std::move(variables)), domain_(std::move(domain)),
      constraints_(std::move(constraints)) {
    std::set<VertexId> vars(variables_.begin(), variables_.end());
    if (vars.size() != variables_.size()) throw InputError("duplicate variable");
    std::set<Value> dom(domain_.begin(), domain_.end());
    if (dom.size() != domain_.size()) throw InputError("duplicate domain value");
    if (dom.empty()) throw InputError("empty domain");
    std::set<VertexSet> scopes;
    for (const auto& [id, c] : constraints_) {
        if (c.scope.empty()) throw InputError("constraint '" + id + "' has empty scope");
        VertexSet sc(c.scope.begin(), c.scope.end());
        if (sc.size() != c.scope.size())
            throw InputError("constraint '" + id + "' repeats a variable");
        for (const auto& v : c.scope)
            if (!vars.count(v))
                throw InputError("constraint '" + id + "' uses unknown variable " + v);
        if (!scopes.insert(sc).second)
            throw InputError("constraint '" + id + "' duplicates another scope");
        for (const auto& [tuple, value] : c.table) {
            if (tuple.size() != c.scope.size())
                throw InputError("constraint '" + id + "' has a tuple of wrong arity");
            for (const auto& val : tuple)
                if (!dom.count(val))
                    throw InputError("constraint '" + id + "' uses unknown value " + val);
            if (value <= 0)
                throw InputError("constraint '" + id + "' lists a non-positive value");
        }
    }
}

const Constraint& MaxCspInstance::constraint(const EdgeId& e) const {
    auto it = constraints_.find(e);
    if (it == constraints_.end()) throw InputError("unknown constraint '" + e + "'");
    return it->second;
}

Hypergraph hypergraph_of(const MaxCspInstance& inst) {
    std::map<EdgeId, VertexSet> edges;
    for (const auto& [id, c] : inst.constraints())
        edges.emplace(id, VertexSet(c.scope.begin(), c.scope.end()));
    return Hypergraph(std::move(edges));
}

Rational constraint_value(const MaxCspInstance& inst, const EdgeId& e, const Assignment& psi) {
    const Constraint& c = inst.constraint(e);
    ValueTuple tuple;
    tuple.reserve(c.scope.size());
    for (const auto& v : c.scope) {
        if (!psi.bound(v)) throw InputError("assignment does not bind " + v);
        tuple.push_back(psi.at(v));
    }
    auto it = c.table.find(tuple);
    return it == c.table.end() ? Rational(0) : it->second;
}

Rational partial_value(const MaxCspInstance& inst, const Assignment& psi) {
    Rational total = 0;
    for (const auto& [id, c] : inst.constraints()) {
        bool covered = std::all_of(c.scope.begin(), c.scope.end(),
                                   [&](const VertexId& v) { return psi.bound(v); });
        if (covered) total += constraint_value(inst, id, psi);
    }
    return total;
}

bool satisfies(const MaxCspInstance& inst, const Assignment& psi, const EdgeId& e) {
    const Constraint& c = inst.constraint(e);
    VertexSet scope(c.scope.begin(), c.scope.end());
    VertexSet overlap;
    for (const auto& v : scope)
        if (psi.bound(v)) overlap.insert(v);
    // ψ|_{dom(ψ) ∩ e} must be the restriction of some supported tuple.
    for (const auto& [tuple, value] : c.table) {
        bool match = true;
        for (std::size_t i = 0; i < c.scope.size(); ++i) {
            if (overlap.count(c.scope[i]) && psi.at(c.scope[i]) != tuple[i]) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

bool satisfies_subhypergraph(const MaxCspInstance& inst, const Assignment& psi,
                             const Subhypergraph& sub) {
    return std::all_of(sub.begin(), sub.end(),
                       [&](const EdgeId& e) { return satisfies(inst, psi, e); });
}

std::vector<Assignment> join(const std::vector<std::vector<Assignment>>& relations,
                             const std::vector<VertexSet>& domains) {
    if (relations.size() != domains.size())
        throw InputError("join arity mismatch");
    std::vector<Assignment> acc{Assignment{}};
    for (std::size_t i = 0; i < relations.size(); ++i) {
        std::vector<Assignment> next;
        for (const auto& partial : acc) {
            for (const auto& psi : relations[i]) {
                if (psi.domain() != domains[i])
                    throw InputError("join relation member off its domain");
                bool compatible = true;
                Assignment merged = partial;
                for (const auto& [v, val] : psi.bindings) {
                    auto it = merged.bindings.find(v);
                    if (it != merged.bindings.end()) {
                        if (it->second != val) {
                            compatible = false;
                            break;
                        }
                    } else {
                        merged.bindings.emplace(v, val);
                    }
                }
                if (compatible) next.push_back(std::move(merged));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        acc = std::move(next);
    }
    return acc;
}

OptResult brute_force_opt(const MaxCspInstance& inst, const Limits& limits) {
    const auto& vars = inst.variables();
    const auto& dom = inst.domain();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (count > limits.brute_opt_assignments / dom.size())
            throw SizeLimitError("brute force optimum exceeds assignment cap");
        count *= dom.size();
    }
    std::vector<VertexId> sorted_vars(vars.begin(), vars.end());
    std::sort(sorted_vars.begin(), sorted_vars.end());
    OptResult best;
    bool have = false;
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
        Assignment psi;
        for (std::size_t i = 0; i < sorted_vars.size(); ++i)
            psi.bindings.emplace(sorted_vars[i], dom[idx[i]]);
        Rational val = partial_value(inst, psi);
        if (!have || val > best.opt || (val == best.opt && psi < best.witness)) {
            best.opt = val;
            best.witness = psi;
            have = true;
        }
        std::size_t pos = idx.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < dom.size()) break;
            idx[pos] = 0;
            if (pos == 0) return best;
        }
        if (idx.empty()) return best;
    }
}

} // namespace pointdec
