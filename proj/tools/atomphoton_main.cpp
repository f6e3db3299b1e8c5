// Command-line front end: reproduces the reference figures as data files
// and runs the verification suite.

#include <CLI11.hpp>
#include <exception>
#include <iostream>
#include <string>

#include "atomphoton/cli.hpp"

int main(int argc, char** argv) {
    using atomphoton::cli::RunConfig;

    CLI::App app{"atom-photon wave packet toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;

    // config file first, flags override
    for (int i = 1; i < argc - 1; ++i) {
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    }
    if (!config_path.empty()) {
        try {
            atomphoton::cli::apply_config_file(cfg, config_path);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }

    auto add_shared = [&](CLI::App* cmd) {
        cmd->add_option("--eta0", cfg.eta0, "initial control parameter gamma*a0/c");
        cmd->add_option("--beta", cfg.beta, "recoil velocity ratio v_rec/c, in (0,1]");
        cmd->add_option("--tau-spr", cfg.tau_spr, "spreading time in units 1/gamma");
        cmd->add_option("--t", cfg.t, "evaluation time in units 1/gamma");
        cmd->add_option("--grid", cfg.grid, "grid points per axis");
        cmd->add_option("--extent-sigmas", cfg.extent_sigmas, "grid margin in widths");
        cmd->add_option("--model", cfg.model,
                        "full_1d | gaussian_1d | momentum_lorentz | momentum_gauss");
        cmd->add_option("--gauss-width", cfg.gauss_width, "Gaussian-model photon width A");
        cmd->add_flag("--two-sided", cfg.two_sided, "symmetric emission variant");
        cmd->add_option("--out", cfg.out, "output path");
        cmd->add_option("--config", config_path, "JSON config file (flags override)");
        cmd->add_option("--log10-eta-min", cfg.log10_eta_min, "sweep lower bound");
        cmd->add_option("--log10-eta-max", cfg.log10_eta_max, "sweep upper bound");
        cmd->add_option("--points", cfg.points, "sweep point count");
        cmd->add_option("--t-max", cfg.t_max, "time sweep upper bound");
    };

    CLI::App* widths = app.add_subcommand("widths", "relative width curves over eta");
    CLI::App* rsweep = app.add_subcommand("rsweep", "R parameter vs eta (or vs t)");
    CLI::App* density = app.add_subcommand("density", "sampled density grid");
    CLI::App* schmidt = app.add_subcommand("schmidt", "SVD Schmidt number report");
    CLI::App* uncertainty = app.add_subcommand("uncertainty", "uncertainty products over t");
    CLI::App* verify = app.add_subcommand("verify", "run the acceptance suite");
    for (CLI::App* c : {widths, rsweep, density, schmidt, uncertainty, verify}) add_shared(c);

    CLI11_PARSE(app, argc, argv);

    try {
        if (widths->parsed()) return atomphoton::cli::run_widths(cfg);
        if (rsweep->parsed()) return atomphoton::cli::run_rsweep(cfg);
        if (density->parsed()) return atomphoton::cli::run_density(cfg);
        if (schmidt->parsed()) return atomphoton::cli::run_schmidt(cfg);
        if (uncertainty->parsed()) return atomphoton::cli::run_uncertainty(cfg);
        if (verify->parsed()) return atomphoton::cli::run_verify(cfg);
    } catch (const atomphoton::cli::usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
