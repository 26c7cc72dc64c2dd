#include <CLI11.hpp>
#include <iostream>

#include "endocable/cli.hpp"

using namespace endocable;

int main(int argc, char** argv) {
    CLI::App app{"Finite cycle sets: analysis, endocabling, constraint search"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::Options opts;
    app.add_option("--seed", opts.seed, "Seed for randomized sampling fallbacks");
    app.add_option("--threads", opts.threads, "Worker threads (search only)")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-nodes", opts.budget_nodes, "Search node budget");
    app.add_option("--budget-seconds", opts.budget_seconds, "Search time budget");

    std::string file, model_file, mode = "decide", suite, theorem;
    std::string diagonal = "none";
    int n = 0, oracle_v = 0;
    long long oracle_p = 0;
    bool up_to_iso = false;
    std::vector<std::string> verify_args;
    cli::CableSelector sel;
    bool has_scalar = false, has_central = false, has_phi_z = false;
    long long scalar_k = 1;
    int central_z = 0, phi_z = 0;

    auto* analyze = app.add_subcommand("analyze", "Invariants of a cycle-set file");
    analyze->add_option("file", file)->required();

    auto* retract_cmd =
        app.add_subcommand("retract", "Retraction tower of a cycle-set file");
    retract_cmd->add_option("file", file)->required();

    auto* cable_cmd = app.add_subcommand("cable", "Endocable a cycle set");
    cable_cmd->add_option("file", file)->required();
    cable_cmd->add_option("--scalar", scalar_k, "Cable by g |-> k*g")
        ->each([&](const std::string&) { has_scalar = true; });
    cable_cmd->add_option("--central", central_z, "Cable by lambda_z (element id)")
        ->each([&](const std::string&) { has_central = true; });
    cable_cmd->add_option("--phi-z", phi_z, "Cable by id - lambda_z (element id)")
        ->each([&](const std::string&) { has_phi_z = true; });
    cable_cmd->add_option("--iterate", sel.iterate, "Apply the cabling m times")
        ->check(CLI::PositiveNumber);
    cable_cmd->add_option("-o,--output", opts.output_path, "Output file");

    auto* verify = app.add_subcommand("verify", "Identity or theorem suites");
    verify->add_option("--suite", suite, "identities | theorem")->required();
    verify->add_option("args", verify_args, "suite arguments");
    verify->add_flag("--extended", opts.extended,
                     "Allow the long n=16 nonexistence run");

    auto* search_cmd = app.add_subcommand("search", "Solve a model file");
    search_cmd->add_option("model", model_file)->required();
    search_cmd->add_option("--mode", mode, "first | all | decide");

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "All cycle sets of a given size");
    enumerate_cmd->add_option("n", n)->required();
    enumerate_cmd->add_option("--diagonal", diagonal, "none | fullcycle");
    enumerate_cmd->add_flag("--up-to-iso", up_to_iso,
                            "Deduplicate up to isomorphism");

    auto* oracle = app.add_subcommand("oracle", "Brute-force classification oracles");
    oracle->require_subcommand(1);
    auto* hol = oracle->add_subcommand(
        "hol", "Fixed-point-free elements of Hol(Z_{p^v}) of order p (or 2)");
    hol->add_option("--p", oracle_p)->required();
    hol->add_option("--v", oracle_v)->required();
    auto* t2 = oracle->add_subcommand(
        "t2", "Fixed-point-free involutions centralizing i |-> i+2 on Z_{2^v}");
    t2->add_option("--v", oracle_v)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        cli::CommandResult res;
        if (*analyze) {
            res = cli::cmd_analyze(file, opts);
        } else if (*retract_cmd) {
            res = cli::cmd_retract(file, opts);
        } else if (*cable_cmd) {
            if (has_scalar + has_central + has_phi_z != 1)
                throw std::invalid_argument(
                    "cable: pass exactly one of --scalar, --central, --phi-z");
            if (has_scalar) {
                sel.kind = cli::CableSelector::Kind::Scalar;
                sel.scalar = scalar_k;
            } else if (has_central) {
                sel.kind = cli::CableSelector::Kind::Central;
                sel.z = central_z;
            } else {
                sel.kind = cli::CableSelector::Kind::PhiZ;
                sel.z = phi_z;
            }
            res = cli::cmd_cable(file, sel, opts);
        } else if (*verify) {
            if (suite == "identities") {
                if (verify_args.size() != 1)
                    throw std::invalid_argument(
                        "verify --suite identities takes one cycle-set file");
                res = cli::cmd_verify_identities(verify_args[0], opts);
            } else if (suite == "theorem") {
                if (verify_args.size() != 2)
                    throw std::invalid_argument(
                        "verify --suite theorem takes a name and a size");
                res = cli::cmd_verify_theorem(verify_args[0],
                                              std::stoi(verify_args[1]), opts);
            } else {
                throw std::invalid_argument("unknown suite '" + suite + "'");
            }
        } else if (*search_cmd) {
            res = cli::cmd_search(model_file, mode, opts);
        } else if (*enumerate_cmd) {
            res = cli::cmd_enumerate(n, up_to_iso, diagonal, opts);
        } else if (*oracle) {
            res = *hol ? cli::cmd_oracle_hol(oracle_p, oracle_v, opts)
                       : cli::cmd_oracle_t2(oracle_v, opts);
        }
        return res.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
