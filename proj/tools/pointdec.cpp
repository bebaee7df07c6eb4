#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "pointdec/beta.hpp"
#include "pointdec/decomposition.hpp"
#include "pointdec/json_io.hpp"
#include "pointdec/mim.hpp"
#include "pointdec/solver.hpp"

namespace {

using namespace pointdec;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitSizeLimit = 3;

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        write_json_file(out_path, j);
    }
}

Json report_json(const ValidationReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back(v);
    return Json{{"ok", report.ok()},
                {"exhaustive", report.exhaustive},
                {"violations", violations}};
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"point decompositions of hypergraphs and exact Max-CSP solving"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized internals");

    std::string instance_path, decomp_path, hypergraph_path, branch_path, order_csv,
        out_path, method = "dp";
    unsigned hn_n = 2;
    std::optional<std::size_t> width_opt;
    bool want_witness = false, exhaustive = false;

    auto* solve_cmd = app.add_subcommand(
        "solve", "compute the optimum of an instance (validity of the decomposition is the "
                 "caller's responsibility; run validate first)");
    solve_cmd->add_option("--instance", instance_path)->required();
    solve_cmd->add_option("--decomp", decomp_path);
    solve_cmd->add_option("--width", width_opt);
    solve_cmd->add_option("--method", method)->check(CLI::IsMember({"dp", "brute"}));
    solve_cmd->add_flag("--witness", want_witness);

    auto* decomp_cmd = app.add_subcommand("decomp", "build decompositions");
    auto* decomp_beta = decomp_cmd->add_subcommand("beta", "width-1 pd of a beta-acyclic H");
    decomp_beta->add_option("--hypergraph", hypergraph_path)->required();
    decomp_beta->add_option("-o,--output", out_path);
    auto* decomp_mim = decomp_cmd->add_subcommand("mim", "flat pd from a branch decomposition");
    decomp_mim->add_option("--hypergraph", hypergraph_path)->required();
    decomp_mim->add_option("--branch", branch_path)->required();
    decomp_mim->add_option("-o,--output", out_path);
    auto* decomp_cover = decomp_cmd->add_subcommand("cover", "spd from a vertex ordering");
    decomp_cover->add_option("--hypergraph", hypergraph_path)->required();
    decomp_cover->add_option("--order", order_csv)->required();
    decomp_cover->add_option("-o,--output", out_path);

    auto* validate_cmd = app.add_subcommand("validate", "check a decomposition");
    auto* validate_pd_cmd = validate_cmd->add_subcommand("pd", "point decomposition");
    validate_pd_cmd->add_option("--hypergraph", hypergraph_path)->required();
    validate_pd_cmd->add_option("--decomp", decomp_path)->required();
    validate_pd_cmd->add_flag("--exhaustive", exhaustive);
    auto* validate_spd_cmd = validate_cmd->add_subcommand("spd", "simplified pd");
    validate_spd_cmd->add_option("--hypergraph", hypergraph_path)->required();
    validate_spd_cmd->add_option("--decomp", decomp_path)->required();

    auto* width_cmd = app.add_subcommand("width", "width of a point decomposition");
    width_cmd->add_option("--hypergraph", hypergraph_path)->required();
    width_cmd->add_option("--decomp", decomp_path)->required();

    auto* mimw_cmd = app.add_subcommand("mimw", "MIM-width of a branch decomposition");
    mimw_cmd->add_option("--hypergraph", hypergraph_path)->required();
    mimw_cmd->add_option("--branch", branch_path)->required();

    auto* cw_cmd = app.add_subcommand("coverwidth", "coverwidth of an ordering");
    cw_cmd->add_option("--hypergraph", hypergraph_path)->required();
    cw_cmd->add_option("--order", order_csv);
    cw_cmd->add_flag("--exhaustive", exhaustive);

    auto* gen_cmd = app.add_subcommand("gen", "generators");
    auto* gen_hn_cmd = gen_cmd->add_subcommand("hn", "separating family H_n");
    gen_hn_cmd->add_option("--n", hn_n)->required();
    gen_hn_cmd->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (solve_cmd->parsed()) {
            MaxCspInstance inst = instance_from_json(load_json_file(instance_path));
            if (method == "brute") {
                OptResult res = brute_force_opt(inst);
                Json out{{"opt", to_string(res.opt)}};
                if (want_witness) {
                    Json w = Json::object();
                    for (const auto& [v, d] : res.witness.bindings) w[v] = d;
                    out["witness"] = w;
                }
                emit(out, "");
                return kExitOk;
            }
            if (decomp_path.empty())
                throw InputError("--decomp is required unless --method brute");
            PointDecomposition pd = pd_from_json(load_json_file(decomp_path));
            SolveOptions opts;
            opts.width_bound = width_opt;
            opts.want_witness = want_witness;
            SolveResult res;
            try {
                res = solve(inst, pd, opts);
            } catch (const InvalidDecompositionError& ex) {
                std::cerr << ex.what() << "\n";
                return kExitValidation;
            }
            Json out{{"opt", to_string(res.opt)}};
            if (res.witness) {
                Json w = Json::object();
                for (const auto& [v, d] : res.witness->bindings) w[v] = d;
                out["witness"] = w;
            }
            emit(out, "");
            return kExitOk;
        }
        if (decomp_beta->parsed()) {
            Hypergraph h = hypergraph_from_json(load_json_file(hypergraph_path));
            auto beta = beta_elimination_order(h);
            if (!beta) {
                std::cerr << "hypergraph is not beta-acyclic\n";
                return kExitValidation;
            }
            emit(pd_to_json(build_beta_pd(h, *beta)), out_path);
            return kExitOk;
        }
        if (decomp_mim->parsed()) {
            Hypergraph h = hypergraph_from_json(load_json_file(hypergraph_path));
            BranchDecomposition bd = bd_from_json(load_json_file(branch_path));
            SimplifiedPointDecomposition spd = build_simplified_from_branch(h, bd);
            std::size_t k = width_of_spd(h, spd);
            emit(pd_to_json(flatten(spd, h, k)), out_path);
            return kExitOk;
        }
        if (decomp_cover->parsed()) {
            Hypergraph h = hypergraph_from_json(load_json_file(hypergraph_path));
            emit(spd_to_json(build_spd_from_order(h, split_csv(order_csv))), out_path);
            return kExitOk;
        }
        if (validate_pd_cmd->parsed()) {
            Hypergraph h = hypergraph_from_json(load_json_file(hypergraph_path));
            PointDecomposition pd = pd_from_json(load_json_file(decomp_path));
            ValidationReport report = validate_pd(
                h, pd, exhaustive ? ValidationMode::Exhaustive : ValidationMode::Fast,
                default_limits(), seed);
            emit(report_json(report), "");
            return report.ok() ? kExitOk : kExitValidation;
        }
        if (validate_spd_cmd->parsed()) {
            Hypergraph h = hypergraph_from_json(load_json_file(hypergraph_path));
            SimplifiedPointDecomposition spd = spd_from_json(load_json_file(decomp_path));
            ValidationReport report = validate_spd(h, spd);
            emit(report_json(report), "");
            return report.ok() ? kExitOk : kExitValidation;
        }
        if (width_cmd->parsed()) {
            Hypergraph h = hypergraph_from_json(load_json_file(hypergraph_path));
            PointDecomposition pd = pd_from_json(load_json_file(decomp_path));
            emit(Json{{"width", width_of_pd(h, pd)}}, "");
            return kExitOk;
        }
        if (mimw_cmd->parsed()) {
            Hypergraph h = hypergraph_from_json(load_json_file(hypergraph_path));
            BranchDecomposition bd = bd_from_json(load_json_file(branch_path));
            bd.validate(h);
            emit(Json{{"mimw", mim_width_of_branch(h, bd)}}, "");
            return kExitOk;
        }
        if (cw_cmd->parsed()) {
            Hypergraph h = hypergraph_from_json(load_json_file(hypergraph_path));
            if (exhaustive) {
                emit(Json{{"coverwidth", min_coverwidth_exhaustive(h)}}, "");
            } else {
                if (order_csv.empty()) throw InputError("need --order or --exhaustive");
                emit(Json{{"coverwidth", coverwidth_of_order(h, split_csv(order_csv))}}, "");
            }
            return kExitOk;
        }
        if (gen_hn_cmd->parsed()) {
            HnFamily fam = gen_hn(hn_n);
            Json out{{"hypergraph", hypergraph_to_json(fam.hypergraph)},
                     {"branch", bd_to_json(fam.branch)},
                     {"collapsed", fam.collapsed}};
            emit(out, out_path);
            return kExitOk;
        }
    } catch (const SizeLimitError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitSizeLimit;
    } catch (const InputError& ex) {
        std::cerr << ex.what() << "\n";
        return kExitParse;
    }
    std::cerr << "unknown subcommand\n";
    return kExitParse;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
