// Command-line front end: closed-form capacity numbers, theta scans, the
// two figure data sets, the random-ensemble sampler and the cross-oracle
// verification suite. All file output is CSV with one header line.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "depolar/figures.hpp"
#include "depolar/optimize.hpp"
#include "depolar/report.hpp"
#include "depolar/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct RunConfig {
    double eta = 0.0;
    int grid = 33;
    int steps = 200;
    int count = 100;
    int size = 4;
    std::uint64_t seed = 12345;
    std::string output_path;
};

int run_capacity(const RunConfig& cfg) {
    std::cout << depolar::capacity_report(cfg.eta);
    return kExitOk;
}

int run_scan(const RunConfig& cfg) {
    const auto rows = depolar::scan_theta(cfg.eta, cfg.steps);
    const std::string csv = depolar::scan_csv(rows);
    if (cfg.output_path.empty())
        std::cout << csv;
    else
        depolar::write_text_file(cfg.output_path, csv);
    return kExitOk;
}

int run_fig1(const RunConfig& cfg) {
    const auto rows = depolar::fig1_grid(cfg.eta, cfg.grid);
    depolar::write_text_file(cfg.output_path, depolar::fig1_csv(rows));
    return kExitOk;
}

int run_fig2(const RunConfig& cfg) {
    const auto rows = depolar::fig2_sweep(cfg.steps);
    depolar::write_text_file(cfg.output_path, depolar::fig2_csv(rows));
    return kExitOk;
}

int run_verify() {
    const auto results = depolar::run_verification_suite();
    std::cout << depolar::verification_report(results);
    return depolar::all_passed(results) ? kExitOk : kExitVerifyFailure;
}

int run_sample(const RunConfig& cfg) {
    const auto records =
        depolar::sample_random_ensembles(cfg.eta, cfg.count, cfg.size, cfg.seed);
    const double maximum = depolar::i2_max(cfg.eta);
    std::string csv;
    if (cfg.size == 4) {
        // Control row: four orthogonal product states reach the maximum.
        const double control =
            depolar::mutual_information(depolar::depolarising(cfg.eta),
                                        depolar::figure1_ensemble(0.0, 0.0))
                .mutual_information;
        csv = depolar::sample_csv(records, maximum, &control);
    } else {
        csv = depolar::sample_csv(records, maximum, nullptr);
    }
    depolar::write_text_file(cfg.output_path, csv);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mutual information of two-qubit signal ensembles on the depolarising channel"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_eta = [&](CLI::App* cmd) {
        cmd->add_option("--eta", cfg.eta, "shrink factor in [0,1]")
            ->required()
            ->check(CLI::Range(0.0, 1.0));
    };
    auto add_out = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--out", cfg.output_path, "output CSV path");
        if (required) opt->required();
    };

    CLI::App* capacity = app.add_subcommand(
        "capacity", "closed-form I2 maximum, one-shot capacity and the pipeline value");
    add_eta(capacity);

    CLI::App* scan = app.add_subcommand(
        "scan", "I2 of the symmetric orthogonal family on a theta grid over [0, pi/4]");
    add_eta(scan);
    scan->add_option("--steps", cfg.steps, "grid points (>= 2)")
        ->default_val(65)
        ->check(CLI::Range(2, 1 << 20));
    add_out(scan, false);

    CLI::App* fig1 = app.add_subcommand(
        "fig1", "I2 surface over (theta, beta) in [0, pi/2]^2 for fixed eta");
    add_eta(fig1);
    fig1->add_option("--grid", cfg.grid, "grid points per axis (>= 2)")
        ->default_val(33)
        ->check(CLI::Range(2, 1 << 12));
    add_out(fig1, true);

    CLI::App* fig2 = app.add_subcommand(
        "fig2", "product vs maximally entangled I2 as a function of eta");
    fig2->add_option("--steps", cfg.steps, "eta grid points (>= 2)")
        ->default_val(200)
        ->check(CLI::Range(2, 1 << 20));
    add_out(fig2, true);

    CLI::App* verify =
        app.add_subcommand("verify", "run the cross-oracle verification suite");

    CLI::App* sample = app.add_subcommand(
        "sample", "I2 of random (possibly entangled, non-orthogonal) ensembles");
    add_eta(sample);
    sample->add_option("--count", cfg.count, "number of ensembles")
        ->default_val(100)
        ->check(CLI::Range(1, 1 << 24));
    sample->add_option("--size", cfg.size, "states per ensemble (2..16)")
        ->default_val(4)
        ->check(CLI::Range(2, 16));
    sample->add_option("--seed", cfg.seed, "random seed");
    add_out(sample, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (capacity->parsed()) return run_capacity(cfg);
        if (scan->parsed()) return run_scan(cfg);
        if (fig1->parsed()) return run_fig1(cfg);
        if (fig2->parsed()) return run_fig2(cfg);
        if (verify->parsed()) return run_verify();
        if (sample->parsed()) return run_sample(cfg);
    } catch (const depolar::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
