// tproj command-line front end.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tproj/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"projection methods for common fixed points and variational inequalities"};
    app.require_subcommand(1);

    std::string config_path;
    tproj::cli::Options opts;
    std::uint64_t seed = 0;
    long max_iter = 0;
    double tol = 0.0;
    std::string format;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON configuration file")->required();
        cmd->add_option("--out", opts.out_dir, "output directory");
        cmd->add_option("--seed", seed, "seed override");
        cmd->add_option("--max-iter", max_iter, "iteration cap override");
        cmd->add_option("--tol", tol, "residual tolerance override");
        cmd->add_option("--format", format, "trace format: csv or json");
    };

    CLI::App* run = app.add_subcommand("run", "execute an iteration driver");
    CLI::App* certify = app.add_subcommand("certify", "audit an operator class claim");
    CLI::App* crosscheck = app.add_subcommand("crosscheck", "run an oracle equivalence suite");
    CLI::App* oracle = app.add_subcommand("oracle", "query the grid oracle directly");
    for (CLI::App* cmd : {run, certify, crosscheck, oracle}) add_common(cmd);

    CLI11_PARSE(app, argc, argv);

    if (run->count("--seed") || certify->count("--seed") || crosscheck->count("--seed") ||
        oracle->count("--seed")) {
        opts.seed = seed;
    }
    if (run->count("--max-iter")) opts.max_iter = max_iter;
    if (run->count("--tol")) opts.tol = tol;
    if (run->count("--format")) opts.format = format;

    try {
        const nlohmann::json config = tproj::cli::load_json_file(config_path);
        if (run->parsed()) return tproj::cli::cmd_run(config, opts);
        if (certify->parsed()) return tproj::cli::cmd_certify(config, opts);
        if (crosscheck->parsed()) return tproj::cli::cmd_crosscheck(config, opts);
        if (oracle->parsed()) return tproj::cli::cmd_oracle(config, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
