#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "pointdec/decomposition.hpp"
#include "pointdec/hypergraph.hpp"
#include "pointdec/maxcsp.hpp"
#include "pointdec/mim.hpp"

namespace pointdec {

using Json = nlohmann::ordered_json;

// All writers emit canonical form: fixed key order, sorted lists, so that
// load/store round-trips are byte-identical.

Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json instance_to_json(const MaxCspInstance& inst);
MaxCspInstance instance_from_json(const Json& j);

Json pd_to_json(const PointDecomposition& pd);
PointDecomposition pd_from_json(const Json& j);

Json spd_to_json(const SimplifiedPointDecomposition& spd);
SimplifiedPointDecomposition spd_from_json(const Json& j);

Json bd_to_json(const BranchDecomposition& bd);
BranchDecomposition bd_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace pointdec
