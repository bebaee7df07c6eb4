#pragma once

#include <map>
#include <string>
#include <vector>

#include "pointdec/hypergraph.hpp"
#include "pointdec/limits.hpp"
#include "pointdec/rational.hpp"

namespace pointdec {

using Value = std::string;
using ValueTuple = std::vector<Value>;

// One finite-valued constraint in positive representation: only tuples with
// strictly positive value are listed. An empty table encodes the all-zero
// function.
struct Constraint {
    std::vector<VertexId> scope; // pairwise distinct
    std::map<ValueTuple, Rational> table; // values > 0

    bool operator==(const Constraint&) const = default;
};

// Partial assignment of values to variables.
struct Assignment {
    std::map<VertexId, Value> bindings;

    bool bound(const VertexId& v) const { return bindings.count(v) != 0; }
    const Value& at(const VertexId& v) const { return bindings.at(v); }

    Assignment restricted_to(const VertexSet& vars) const;
    VertexSet domain() const;

    auto operator<=>(const Assignment&) const = default;
};

class MaxCspInstance {
public:
    MaxCspInstance() = default;
    MaxCspInstance(std::vector<VertexId> variables, std::vector<Value> domain,
                   std::map<EdgeId, Constraint> constraints);

    const std::vector<VertexId>& variables() const { return variables_; }
    const std::vector<Value>& domain() const { return domain_; }
    const std::map<EdgeId, Constraint>& constraints() const { return constraints_; }
    const Constraint& constraint(const EdgeId& e) const;
    bool has_constraint(const EdgeId& e) const { return constraints_.count(e) != 0; }

private:
    std::vector<VertexId> variables_;
    std::vector<Value> domain_;
    std::map<EdgeId, Constraint> constraints_;
};

// The set of scopes, keyed by constraint id.
Hypergraph hypergraph_of(const MaxCspInstance& inst);

// f_e evaluated on ψ's values over the scope; 0 if the tuple is absent.
// ψ must bind the whole scope.
Rational constraint_value(const MaxCspInstance& inst, const EdgeId& e, const Assignment& psi);

// tvalue(ψ) = Σ_{e ⊆ dom(ψ)} f_e(ψ(x_e)).
Rational partial_value(const MaxCspInstance& inst, const Assignment& psi);

// Support R_e projected to dom(ψ) ∩ e must contain ψ's restriction.
bool satisfies(const MaxCspInstance& inst, const Assignment& psi, const EdgeId& e);

bool satisfies_subhypergraph(const MaxCspInstance& inst, const Assignment& psi,
                             const Subhypergraph& sub);

// Join of assignment sets: all ψ over the union of domains whose
// restriction to each input's domain lies in that input.
std::vector<Assignment> join(const std::vector<std::vector<Assignment>>& relations,
                             const std::vector<VertexSet>& domains);

struct OptResult {
    Rational opt;
    Assignment witness;
};

// Exact optimum by enumeration over D^X; ties broken toward the
// lexicographically least full assignment.
OptResult brute_force_opt(const MaxCspInstance& inst, const Limits& limits = default_limits());

} // namespace pointdec
