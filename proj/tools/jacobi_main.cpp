#include <iostream>

#include <CLI11.hpp>

#include "jacobi/cli_commands.hpp"

using jacobi::cli::Command;
using jacobi::cli::OutputFormat;
using jacobi::cli::RepChoice;
using jacobi::cli::RunConfig;

namespace {

struct FlagTargets {
    std::string format = "json";
    std::string rep = "sw";
};

void add_common_flags(CLI::App* cmd, RunConfig& config, FlagTargets& targets) {
    cmd->add_option("--cutoff", config.cutoff, "Truncation cutoff (SW level N or DS level D)");
    cmd->add_option("--tol", config.tol, "Pass/fail tolerance");
    cmd->add_option("--k", config.k, "Discrete-series weight k > 1/2");
    cmd->add_option("--m", config.m, "Index m != 0 (default 1/(2 pi), so hbar = 1/2)");
    cmd->add_option("--n", config.n, "State / row index n");
    cmd->add_option("--nprime", config.n_prime, "Second / column index n'");
    cmd->add_option("--alpha-re", config.alpha_re, "Re alpha");
    cmd->add_option("--alpha-im", config.alpha_im, "Im alpha");
    cmd->add_option("--w-re", config.w_re, "Re w");
    cmd->add_option("--w-im", config.w_im, "Im w");
    cmd->add_option("--grid-r", config.grid_r, "Radial grid count");
    cmd->add_option("--grid-theta", config.grid_theta, "Angular grid count");
    cmd->add_option("--format", targets.format, "Output format: csv or json");
    cmd->add_option("--out", config.out_path, "Output path (default: stdout)");
    cmd->add_option("--suite", config.suite, "Verification suite name or 'all'");
    cmd->add_option("--seed", config.seed, "Seed for randomized checks (default 0)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"jacobi: truncated-matrix realizations of Jacobi-group representations,\n"
                 "squeezed states, and their closed-form cross-checks"};
    app.require_subcommand(1);

    RunConfig config;
    FlagTargets targets;

    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    CLI::App* mandel = app.add_subcommand("mandel-grid", "Mandel Q closed vs numeric table");
    CLI::App* disk = app.add_subcommand("squeeze-disk", "Squeezing disk and boundary samples");
    CLI::App* element = app.add_subcommand("matrix-element", "Closed vs numeric matrix element");
    CLI::App* covariance = app.add_subcommand("covariance", "Closed covariance record");
    CLI::App* casimir = app.add_subcommand("casimir", "Discrete-series Casimir check");

    for (CLI::App* cmd : {verify, mandel, disk, element, covariance, casimir})
        add_common_flags(cmd, config, targets);
    element->add_option("--rep", targets.rep, "Representation: sw or ds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : jacobi::cli::kExitInvalid;
    }

    if (verify->parsed()) config.command = Command::verify;
    if (mandel->parsed()) {
        config.command = Command::mandel_grid;
        if (!mandel->count("--format")) targets.format = "csv";
    }
    if (disk->parsed()) config.command = Command::squeeze_disk;
    if (element->parsed()) config.command = Command::matrix_element;
    if (covariance->parsed()) config.command = Command::covariance;
    if (casimir->parsed()) config.command = Command::casimir;

    CLI::App* active = app.get_subcommands().front();
    config.k_explicit = active->count("--k") > 0;

    if (targets.format == "csv") {
        config.format = OutputFormat::csv;
    } else if (targets.format == "json") {
        config.format = OutputFormat::json;
    } else {
        std::cerr << "invalid config: format must be csv or json\n";
        return jacobi::cli::kExitInvalid;
    }
    if (targets.rep == "sw") {
        config.rep = RepChoice::sw;
    } else if (targets.rep == "ds") {
        config.rep = RepChoice::ds;
    } else {
        std::cerr << "invalid config: rep must be sw or ds\n";
        return jacobi::cli::kExitInvalid;
    }

    return jacobi::cli::run(config);
}
