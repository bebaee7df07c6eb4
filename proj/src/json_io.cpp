#include "pointdec/json_io.hpp"

#include <fstream>

namespace pointdec {

namespace {

Json tree_to_json(const RootedTree& tree) {
    Json parent = Json::object();
    for (const auto& t : tree.nodes) {
        auto it = tree.parent.find(t);
        if (it != tree.parent.end()) parent[t] = it->second;
    }
    return Json{{"root", tree.root}, {"parent", parent}};
}

RootedTree tree_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("root") || !j.contains("parent"))
        throw InputError("tree must have root and parent");
    RootedTree tree;
    tree.root = j.at("root").get<std::string>();
    tree.nodes.insert(tree.root);
    for (const auto& [c, p] : j.at("parent").items()) {
        tree.nodes.insert(c);
        tree.nodes.insert(p.get<std::string>());
        tree.parent[c] = p.get<std::string>();
    }
    tree.validate();
    return tree;
}

Json bags_to_json(const std::map<NodeId, PointSet>& bags) {
    Json out = Json::object();
    for (const auto& [t, bag] : bags) {
        Json list = Json::array();
        for (const auto& p : bag) list.push_back(Json::array({p.vertex, p.edge}));
        out[t] = list;
    }
    return out;
}

std::map<NodeId, PointSet> bags_from_json(const Json& j, const RootedTree& tree) {
    std::map<NodeId, PointSet> bags;
    for (const auto& t : tree.nodes) bags[t] = {};
    for (const auto& [t, list] : j.items()) {
        if (!tree.has_node(t)) throw InputError("bag for unknown node " + t);
        PointSet bag;
        for (const auto& entry : list) {
            if (!entry.is_array() || entry.size() != 2)
                throw InputError("bag point must be a [vertex, edge] pair");
            bag.insert(Point{entry[0].get<std::string>(), entry[1].get<std::string>()});
        }
        bags[t] = std::move(bag);
    }
    return bags;
}

Json subbag_to_json(const SubBag& s) {
    Json vs = Json::array();
    for (const auto& v : s.second) vs.push_back(v);
    return Json::array({s.first, vs});
}

SubBag subbag_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[1].is_array())
        throw InputError("sub-bag must be [node, [vertices...]]");
    SubBag s;
    s.first = j[0].get<std::string>();
    for (const auto& v : j[1]) s.second.insert(v.get<std::string>());
    return s;
}

} // namespace

Json hypergraph_to_json(const Hypergraph& h) {
    Json edges = Json::object();
    for (const auto& [e, vs] : h.edges()) {
        Json list = Json::array();
        for (const auto& v : vs) list.push_back(v);
        edges[e] = list;
    }
    return Json{{"edges", edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("edges") || !j.at("edges").is_object())
        throw InputError("hypergraph must have an edges object");
    std::map<EdgeId, VertexSet> edges;
    for (const auto& [e, list] : j.at("edges").items()) {
        if (!list.is_array()) throw InputError("edge " + e + " must list vertices");
        VertexSet vs;
        for (const auto& v : list) {
            if (!vs.insert(v.get<std::string>()).second)
                throw InputError("edge " + e + " repeats vertex " + v.get<std::string>());
        }
        edges.emplace(e, std::move(vs));
    }
    return Hypergraph(std::move(edges));
}

Json instance_to_json(const MaxCspInstance& inst) {
    Json constraints = Json::object();
    for (const auto& [e, c] : inst.constraints()) {
        Json table = Json::array();
        for (const auto& [tuple, value] : c.table) {
            Json tv = Json::array();
            for (const auto& v : tuple) tv.push_back(v);
            table.push_back(Json{{"tuple", tv}, {"value", to_string(value)}});
        }
        Json scope = Json::array();
        for (const auto& v : c.scope) scope.push_back(v);
        constraints[e] = Json{{"scope", scope}, {"table", table}};
    }
    Json vars = Json::array();
    for (const auto& v : inst.variables()) vars.push_back(v);
    Json dom = Json::array();
    for (const auto& d : inst.domain()) dom.push_back(d);
    return Json{{"variables", vars}, {"domain", dom}, {"constraints", constraints}};
}

MaxCspInstance instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("variables") || !j.contains("domain") ||
        !j.contains("constraints"))
        throw InputError("instance must have variables, domain and constraints");
    std::vector<VertexId> vars;
    for (const auto& v : j.at("variables")) vars.push_back(v.get<std::string>());
    std::vector<Value> dom;
    for (const auto& d : j.at("domain")) dom.push_back(d.get<std::string>());
    std::map<EdgeId, Constraint> constraints;
    for (const auto& [e, cj] : j.at("constraints").items()) {
        Constraint c;
        for (const auto& v : cj.at("scope")) c.scope.push_back(v.get<std::string>());
        for (const auto& row : cj.at("table")) {
            ValueTuple tuple;
            for (const auto& v : row.at("tuple")) tuple.push_back(v.get<std::string>());
            Rational value = parse_rational(row.at("value").get<std::string>());
            if (!c.table.emplace(std::move(tuple), value).second)
                throw InputError("constraint " + e + " repeats a tuple");
        }
        constraints.emplace(e, std::move(c));
    }
    return MaxCspInstance(std::move(vars), std::move(dom), std::move(constraints));
}

Json pd_to_json(const PointDecomposition& pd) {
    Json arcs = Json::array();
    for (const auto& [a, b] : pd.arcs)
        arcs.push_back(Json::array({subbag_to_json(a), subbag_to_json(b)}));
    return Json{{"tree", tree_to_json(pd.tree)}, {"bags", bags_to_json(pd.bags)},
                {"arcs", arcs}};
}

PointDecomposition pd_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("tree") || !j.contains("bags") || !j.contains("arcs"))
        throw InputError("point decomposition must have tree, bags and arcs");
    PointDecomposition pd;
    pd.tree = tree_from_json(j.at("tree"));
    pd.bags = bags_from_json(j.at("bags"), pd.tree);
    for (const auto& arc : j.at("arcs")) {
        if (!arc.is_array() || arc.size() != 2)
            throw InputError("arc must be a pair of sub-bags");
        pd.arcs.insert({subbag_from_json(arc[0]), subbag_from_json(arc[1])});
    }
    return pd;
}

Json spd_to_json(const SimplifiedPointDecomposition& spd) {
    return Json{{"tree", tree_to_json(spd.tree)}, {"bags", bags_to_json(spd.bags)}};
}

SimplifiedPointDecomposition spd_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("tree") || !j.contains("bags"))
        throw InputError("simplified point decomposition must have tree and bags");
    SimplifiedPointDecomposition spd;
    spd.tree = tree_from_json(j.at("tree"));
    spd.bags = bags_from_json(j.at("bags"), spd.tree);
    return spd;
}

Json bd_to_json(const BranchDecomposition& bd) {
    Json leaves = Json::object();
    for (const auto& [t, lab] : bd.leaves)
        leaves[t] = Json{{"kind", lab.kind == LeafKind::Vertex ? "vertex" : "edge"},
                         {"id", lab.id}};
    return Json{{"tree", tree_to_json(bd.tree)}, {"leaves", leaves}};
}

BranchDecomposition bd_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("tree") || !j.contains("leaves"))
        throw InputError("branch decomposition must have tree and leaves");
    BranchDecomposition bd;
    bd.tree = tree_from_json(j.at("tree"));
    for (const auto& [t, lab] : j.at("leaves").items()) {
        std::string kind = lab.at("kind").get<std::string>();
        if (kind != "vertex" && kind != "edge")
            throw InputError("leaf kind must be vertex or edge");
        bd.leaves[t] = LeafLabel{kind == "vertex" ? LeafKind::Vertex : LeafKind::Edge,
                                 lab.at("id").get<std::string>()};
    }
    return bd;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& ex) {
        throw InputError("cannot parse " + path + ": " + ex.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

} // namespace pointdec
